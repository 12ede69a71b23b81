#pragma once

#include "cindcount/core.hpp"
#include "cindcount/profile.hpp"
#include "cindcount/random.hpp"

namespace cindcount
{
    struct CoarseParams
    {
        int log_n = 0;
        double p_out = 0;
        std::uint64_t repetitions = 0;   // N after the profile knob
        double gamma = 0;
        double scale = 0;
        double b = 0;                    // (4k log n)^k

        static auto make(std::size_t n, int k, const ConstantsProfile & profile) -> CoarseParams;
    };

    /// The gap tester. M must be a power of two and the oracle's vertex count a power of two.
    auto verify_guess(IndependenceOracle & oracle, std::uint64_t M, const ColourClasses & classes, Rng & rng,
        RunStats & stats) -> bool;

    /// Coarse estimate of the number of colourful edges for a partition of all vertices.
    /// Returns m * scale with m = 0 or a power of two up to n^k.
    auto colour_coarse(IndependenceOracle & oracle, const ColourClasses & classes, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> double;

    auto helper_coarse(IndependenceOracle & oracle, Rng & rng, const ConstantsProfile & profile, RunStats & stats)
        -> double;

    /// Median of repeated helper_coarse runs; within a factor 2(4k log n)^k of e(G) w.p. >= 1 - delta
    /// under the paper profile.
    auto coarse(IndependenceOracle & oracle, double delta, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double;

    /// Lower median (element floor((n-1)/2) after sorting); empty input gives 0.
    auto lower_median(std::vector<double> values) -> double;
}
