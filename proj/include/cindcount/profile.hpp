#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace cindcount
{
    /// Turns a formula value into a repetition count: clamp(ceil(formula * multiplier), floor, cap),
    /// never below 1.
    struct Knob
    {
        double multiplier = 1.0;
        double floor = 1.0;
        double cap = std::numeric_limits<double>::infinity();

        auto apply(double formula) const -> std::uint64_t;

        /// For per-item sample sizes whose sum is what matters: scales `raw` (formula values) so
        /// that the total respects floor and cap, then rounds each item up to at least 1.
        auto allocate(std::span<const double> raw) const -> std::vector<std::uint64_t>;

        auto operator==(const Knob &) const -> bool = default;
    };

    struct ConstantsProfile
    {
        std::string name = "paper";

        Knob colour_coarse_repetitions;  // N
        Knob helper_coarse_colourings;   // t
        Knob helper_coarse_rounds;       // T
        Knob coarse_rounds;
        Knob count_rounds;
        Knob trim_samples;               // applied to the bucket sizes t_i as a whole
        Knob halve_samples;              // applied to the per-entry t_i as a whole
        Knob accept_loop;

        double resource_cap_factor = 64.0;

        /// Brute-force threshold for HelperCount and HelperSample (n <= threshold is counted exactly).
        std::size_t exact_threshold = 500;

        /// Skip VerifyGuess batches whose outcome can no longer change ColourCoarse's output.
        bool colour_coarse_early_exit = false;

        static auto paper() -> ConstantsProfile;
        static auto light() -> ConstantsProfile;

        /// "paper", "light", or a JSON object overriding fields of a base preset.
        static auto from_json(const nlohmann::json & j) -> ConstantsProfile;
        auto to_json() const -> nlohmann::json;

        auto operator==(const ConstantsProfile &) const -> bool = default;
    };

    /// Counters collected while an algorithm runs. Oracle queries are read off the oracle handle.
    struct RunStats
    {
        std::uint64_t oracle_queries = 0;
        std::uint64_t coarse_calls = 0;
        std::uint64_t colour_coarse_calls = 0;
        std::uint64_t verify_guess_calls = 0;
        std::uint64_t helper_count_runs = 0;
        std::uint64_t over_budget_runs = 0;
        std::uint64_t rejection_iterations = 0;
        std::uint64_t trim_clamped = 0;
        std::uint64_t query_budget = 0;       // per HelperCount run, largest seen
        std::uint64_t max_run_queries = 0;    // most queries used by a single HelperCount run
        double elapsed_seconds = 0.0;

        void merge(const RunStats & other);
        auto to_json(bool with_time) const -> nlohmann::json;
    };
}
