#include "cindcount/sample.hpp"

#include "cindcount/count.hpp"

#include <cmath>
#include <stdexcept>

namespace cindcount
{
    namespace
    {
        auto pick_uniform(const std::vector<VertexSet> & edges, Rng & rng) -> SampleOutcome
        {
            if (edges.empty())
                return std::nullopt;
            return edges[uniform_below(rng, edges.size())];
        }
    }

    auto SampleParams::make(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> SampleParams
    {
        SampleParams p;
        p.log_n = log2_floor(n);
        p.levels = p.log_n - static_cast<int>(std::ceil(std::log2(8.0 * k * k)));
        const double log_n = std::max(1, p.log_n);
        p.xi = epsilon / (100.0 * log_n);
        p.delta = p.xi / (std::ldexp(1.0, k + 8) * std::pow(static_cast<double>(n), 2.0 * k));
        const double levels = std::max(1, p.levels);
        p.accept_cap = profile.accept_loop.apply(
            std::ldexp(1.0, k + 2) * std::log(8.0 * levels * std::pow(static_cast<double>(n), k) / epsilon));
        return p;
    }

    auto helper_sample(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> SampleOutcome
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        if (!is_power_of_two(n))
            throw std::invalid_argument("helper_sample: vertex count must be a power of two");
        if (!(epsilon > 0.0 && epsilon < 0.5))
            throw std::invalid_argument("helper_sample: epsilon must lie in (0, 1/2)");

        const auto everything = all_vertices(n);
        if (epsilon <= std::pow(static_cast<double>(n), -k))
            return pick_uniform(enumerate_edges_within(oracle, everything), rng);

        const auto params = SampleParams::make(n, k, epsilon, profile);
        if (params.levels <= 1)
            return pick_uniform(enumerate_edges_within(oracle, everything), rng);

        VertexSet current = everything;
        double current_count = count(oracle, params.xi, params.delta, rng, profile, stats);
        for (int i = 2; i <= params.levels; ++i)
        {
            bool accepted = false;
            for (std::uint64_t attempt = 0; attempt < params.accept_cap; ++attempt)
            {
                ++stats.rejection_iterations;
                auto candidate = random_fixed_subset(rng, current, current.size() / 2);
                InducedOracle sub(oracle, candidate);
                const double m = count(sub, params.xi, params.delta, rng, profile, stats);
                if (current_count <= 0.0)
                    return std::nullopt;
                const double reject = std::max(0.0, 1.0 - m / current_count);
                if (uniform_unit(rng) < reject)
                    continue;
                current = std::move(candidate);
                current_count = m;
                accepted = true;
                break;
            }
            if (!accepted)
                return std::nullopt;
        }
        return pick_uniform(enumerate_edges_within(oracle, current), rng);
    }

    auto sample_query_budget(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> std::uint64_t
    {
        const double log_n = std::max(1.0, std::log2(static_cast<double>(n)));
        const double v = profile.resource_cap_factor * std::pow(epsilon, -2.0) * std::pow(static_cast<double>(k), 7.0 * k)
            * std::pow(log_n, 4.0 * k + 11.0);
        if (!(v < 1.8e19))
            return std::numeric_limits<std::uint64_t>::max();
        return static_cast<std::uint64_t>(std::ceil(v));
    }

    auto sample(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> SampleOutcome
    {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("sample: epsilon must lie in (0, 1)");
        PaddedOracle padded(oracle);
        BudgetedOracle limited(padded, sample_query_budget(padded.vertex_count(), oracle.arity(), epsilon, profile));
        try
        {
            return helper_sample(limited, epsilon / 3.0, rng, profile, stats);
        }
        catch (const BudgetExhausted & e)
        {
            if (e.source() != &limited)
                throw;
            return std::nullopt;
        }
    }
}
