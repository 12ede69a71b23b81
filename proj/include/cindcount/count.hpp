#pragma once

#include "cindcount/core.hpp"
#include "cindcount/profile.hpp"
#include "cindcount/random.hpp"

#include <vector>

namespace cindcount
{
    struct WeightedEntry
    {
        double w = 1.0;
        VertexSet S;
        double ehat = 0.0;
    };

    /// Entries share |S| = 2^y.
    struct WeightedList
    {
        int y = 0;
        std::vector<WeightedEntry> entries;
    };

    struct CountParams
    {
        int log_n = 0;
        int levels = 0;     // I
        double b = 0;
        double xi = 0;
        double delta = 0;
        int a = 0;

        static auto make(std::size_t n, int k, double epsilon) -> CountParams;
    };

    /// floor(15k log(4nb)) + 1
    auto trim_radius(std::size_t n, int k, double b) -> int;

    /// 33k log(4nb) + 32 b^2 log(2/delta) / xi^2
    auto trim_size_bound(std::size_t n, int k, double b, double xi, double delta) -> double;

    /// Importance-sampling compression of a weighted list. Makes no oracle queries; n and k
    /// are the dimensions of the host hypergraph.
    auto trim(std::size_t n, int k, double b, const WeightedList & list, double xi, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> WeightedList;

    /// Replaces every entry by weighted random halves with fresh coarse estimates.
    auto halve(IndependenceOracle & oracle, double b, const WeightedList & list, double xi, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> WeightedList;

    auto helper_count(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double;

    /// Per-run query cap of Count: factor * eps^-2 k^(6k) log^(4k+7) n, saturating.
    auto count_query_budget(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> std::uint64_t;

    /// Median of independent HelperCount runs on the padded oracle; runs over budget count as -1.
    auto count(IndependenceOracle & oracle, double epsilon, double delta, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double;
}
