#pragma once

#include "cindcount/core.hpp"

#include <json.hpp>

#include <functional>
#include <utility>

namespace cindcount
{
    auto exact_count(const Hypergraph & graph) -> std::uint64_t;

    struct TrialOutcome
    {
        bool pass = false;
        std::uint64_t queries = 0;
    };

    /// Called once per trial with that trial's seed.
    using TrialRunner = std::function<TrialOutcome(std::uint64_t seed)>;

    struct TrialReport
    {
        std::uint64_t trials = 0;
        std::uint64_t successes = 0;
        double rate = 0;
        double wilson_lo = 0;
        double wilson_hi = 0;
        double mean_queries = 0;

        auto to_json() const -> nlohmann::json;
    };

    /// 95% Wilson score interval.
    auto wilson_interval(std::uint64_t successes, std::uint64_t trials) -> std::pair<double, double>;

    /// Trial i runs with seed derive_seed(master_seed, i). The report does not depend on `threads`.
    auto success_rate_trial(const TrialRunner & runner, std::uint64_t trials, std::uint64_t master_seed,
        unsigned threads = 1) -> TrialReport;

    /// Half the L1 distance between the empirical distribution of `samples` and uniform over `edges`.
    /// Throws std::invalid_argument if a sample is not in `edges`.
    auto tv_distance(const std::vector<VertexSet> & samples, const std::vector<VertexSet> & edges) -> double;
}
