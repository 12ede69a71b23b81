#pragma once

#include "cindcount/core.hpp"
#include "cindcount/profile.hpp"
#include "cindcount/random.hpp"

#include <optional>

namespace cindcount
{
    struct SampleParams
    {
        int log_n = 0;
        int levels = 0;                 // I
        double xi = 0;
        double delta = 0;
        std::uint64_t accept_cap = 0;   // attempts allowed per level

        static auto make(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> SampleParams;
    };

    /// A sampled edge (sorted vertex labels of the oracle), or nullopt for FAIL.
    using SampleOutcome = std::optional<VertexSet>;

    auto helper_sample(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> SampleOutcome;

    /// Query cap for one draw: factor * eps^-2 k^(7k) log^(4k+11) n, saturating.
    auto sample_query_budget(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> std::uint64_t;

    /// Pads the oracle, then runs helper_sample(eps/3) under the query budget.
    auto sample(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> SampleOutcome;
}
