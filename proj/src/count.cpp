#include "cindcount/count.hpp"

#include "cindcount/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cindcount
{
    namespace
    {
        constexpr double huge = 1e290;

        auto saturating_u64(double v) -> std::uint64_t
        {
            if (!(v < 1.8e19))
                return std::numeric_limits<std::uint64_t>::max();
            return v < 1.0 ? 1 : static_cast<std::uint64_t>(std::ceil(v));
        }
    }

    auto CountParams::make(std::size_t n, int k, double epsilon) -> CountParams
    {
        CountParams p;
        p.log_n = log2_floor(n);
        p.levels = p.log_n - static_cast<int>(std::ceil(std::log2(2.0 * k * k)));
        p.b = 2.0 * std::pow(4.0 * k * p.log_n, k);
        p.xi = p.levels > 0 ? epsilon / (4.0 * p.levels) : epsilon;
        p.delta = 1.0 / (3.0 * (2.0 * p.levels + 1.0));
        p.a = trim_radius(n, k, p.b);
        return p;
    }

    auto trim_radius(std::size_t n, int k, double b) -> int
    {
        return static_cast<int>(std::floor(15.0 * k * std::log2(4.0 * static_cast<double>(n) * b))) + 1;
    }

    auto trim_size_bound(std::size_t n, int k, double b, double xi, double delta) -> double
    {
        return 33.0 * k * std::log2(4.0 * static_cast<double>(n) * b) + 32.0 * b * b * std::log2(2.0 / delta) / (xi * xi);
    }

    auto trim(std::size_t n, int k, double b, const WeightedList & list, double xi, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> WeightedList
    {
        const double floor_xi = std::pow(static_cast<double>(n), -2.0 * k);
        if (!(xi >= floor_xi && xi < 1.0))
            throw std::invalid_argument("trim: xi must lie in [n^-2k, 1)");
        if (!(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("trim: delta must lie in (0, 1)");

        const int a = trim_radius(n, k, b);
        double W = 0.0;
        for (const auto & e : list.entries)
            W += e.w * e.ehat;

        // Buckets indexed by i + a for -a <= i <= a: 2^(i-1) <= w*ehat < 2^i.
        std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(2 * a + 1));
        for (std::size_t idx = 0; idx < list.entries.size(); ++idx)
        {
            const double v = list.entries[idx].w * list.entries[idx].ehat;
            if (!(v > 0.0))
                continue;
            int i = std::ilogb(v) + 1;
            if (i < -a)
                continue;
            if (i > a)
            {
                i = a;
                ++stats.trim_clamped;
            }
            buckets[static_cast<std::size_t>(i + a)].push_back(idx);
        }

        std::vector<std::size_t> occupied;
        std::vector<double> raw;
        const double common = 16.0 * b * b * std::log2(2.0 / delta) / (xi * xi * W);
        for (int i = -a; i <= a; ++i)
        {
            const auto & bucket = buckets[static_cast<std::size_t>(i + a)];
            if (bucket.empty())
                continue;
            occupied.push_back(static_cast<std::size_t>(i + a));
            double t = std::ldexp(common * static_cast<double>(bucket.size()), i);
            raw.push_back(std::isfinite(t) ? std::min(t, huge) : huge);
        }
        const auto t = profile.trim_samples.allocate(raw);

        WeightedList out;
        out.y = list.y;
        for (std::size_t o = 0; o < occupied.size(); ++o)
        {
            const auto & bucket = buckets[occupied[o]];
            const auto ti = t[o];
            if (bucket.size() <= ti)
            {
                for (auto idx : bucket)
                    out.entries.push_back(list.entries[idx]);
                continue;
            }
            const double factor = static_cast<double>(bucket.size()) / static_cast<double>(ti);
            for (std::uint64_t j = 0; j < ti; ++j)
            {
                auto entry = list.entries[bucket[uniform_below(rng, bucket.size())]];
                entry.w *= factor;
                out.entries.push_back(std::move(entry));
            }
        }
        return out;
    }

    auto halve(IndependenceOracle & oracle, double b, const WeightedList & list, double xi, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> WeightedList
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        const int y = list.y;
        if (y < 1 || y > 62 || (1ULL << (y - 1)) < static_cast<std::uint64_t>(2 * k * k))
            throw std::invalid_argument("halve: need 2^(y-1) >= 2k^2");
        if (b < 2.0 * std::pow(4.0 * k * log2_floor(n), k))
            throw std::invalid_argument("halve: b below 2(4k log n)^k");
        if (!(xi > 0.0 && xi < 1.0) || !(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("halve: xi and delta must lie in (0, 1)");

        WeightedList out;
        out.y = y - 1;
        if (list.entries.empty())
            return out;

        const std::size_t size = std::size_t{1} << y;
        const std::size_t half = size / 2;
        const double p = halving_survival_p(y, k).value;
        double W = 0.0;
        for (const auto & e : list.entries)
        {
            if (e.S.size() != size)
                throw std::invalid_argument("halve: entry size does not match the list level");
            W += e.w * e.ehat;
        }

        std::vector<double> raw;
        raw.reserve(list.entries.size());
        const double common = 4.0 * b * b * std::log2(4.0 / delta) / (p * xi * xi * W);
        for (const auto & e : list.entries)
            raw.push_back(std::min(common * e.w * e.ehat, huge));
        const auto t = profile.halve_samples.allocate(raw);
        double total = 0.0;
        for (auto ti : t)
            total += static_cast<double>(ti);
        const double coarse_delta = delta / (2.0 * total);

        for (std::size_t i = 0; i < list.entries.size(); ++i)
        {
            const auto & e = list.entries[i];
            const double w = e.w / (p * static_cast<double>(t[i]));
            for (std::uint64_t j = 0; j < t[i]; ++j)
            {
                auto s = random_fixed_subset(rng, e.S, half);
                InducedOracle sub(oracle, s);
                const double est = coarse(sub, coarse_delta, rng, profile, stats);
                if (est > 0.0)
                    out.entries.push_back({w, std::move(s), est});
            }
        }
        return out;
    }

    auto helper_count(IndependenceOracle & oracle, double epsilon, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        if (!is_power_of_two(n))
            throw std::invalid_argument("helper_count: vertex count must be a power of two");
        if (!(epsilon > 0.0 && epsilon < 0.5))
            throw std::invalid_argument("helper_count: epsilon must lie in (0, 1/2)");
        ++stats.helper_count_runs;

        const auto everything = all_vertices(n);
        const auto params = n >= 2 ? CountParams::make(n, k, epsilon) : CountParams{};
        if (epsilon < std::pow(static_cast<double>(n), -k) || n <= profile.exact_threshold || params.levels < 1)
            return static_cast<double>(enumerate_edges_within(oracle, everything).size());

        const double first = coarse(oracle, params.delta, rng, profile, stats);
        if (first == 0.0)
            return 0.0;

        WeightedList list;
        list.y = params.log_n;
        list.entries.push_back({1.0, everything, first});
        for (int i = 1; i <= params.levels; ++i)
        {
            list = halve(oracle, params.b, list, params.xi, params.delta, rng, profile, stats);
            list = trim(n, k, params.b, list, params.xi, params.delta, rng, profile, stats);
        }

        std::map<VertexSet, std::size_t> exact;
        double total = 0.0;
        for (const auto & e : list.entries)
        {
            auto it = exact.find(e.S);
            if (it == exact.end())
                it = exact.emplace(e.S, enumerate_edges_within(oracle, e.S).size()).first;
            total += e.w * static_cast<double>(it->second);
        }
        return total;
    }

    auto count_query_budget(std::size_t n, int k, double epsilon, const ConstantsProfile & profile) -> std::uint64_t
    {
        const double log_n = std::max(1.0, std::log2(static_cast<double>(n)));
        const double v = profile.resource_cap_factor * std::pow(epsilon, -2.0) * std::pow(static_cast<double>(k), 6.0 * k)
            * std::pow(log_n, 4.0 * k + 7.0);
        return saturating_u64(v);
    }

    auto count(IndependenceOracle & oracle, double epsilon, double delta, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double
    {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("count: epsilon must lie in (0, 1)");
        if (!(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("count: delta must lie in (0, 1)");

        PaddedOracle padded(oracle);
        const int k = oracle.arity();
        const double eps = std::min(epsilon, 1.0 / 3.0);
        const auto runs = profile.count_rounds.apply(36.0 * std::ceil(std::log(2.0 / delta)));
        const auto budget = count_query_budget(padded.vertex_count(), k, eps, profile);
        stats.query_budget = std::max(stats.query_budget, budget);

        const std::uint64_t master = rng();
        std::vector<double> outputs;
        for (std::uint64_t r = 0; r < runs; ++r)
        {
            Rng run_rng(derive_seed(master, r));
            BudgetedOracle limited(padded, budget);
            double value = -1.0;
            try
            {
                value = helper_count(limited, eps, run_rng, profile, stats);
            }
            catch (const BudgetExhausted & e)
            {
                if (e.source() != &limited)
                    throw;
                ++stats.over_budget_runs;
            }
            stats.max_run_queries = std::max(stats.max_run_queries, limited.queries());
            outputs.push_back(value);
        }
        return lower_median(std::move(outputs));
    }
}
