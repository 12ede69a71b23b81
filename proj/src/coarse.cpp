#include "cindcount/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cindcount
{
    auto CoarseParams::make(std::size_t n, int k, const ConstantsProfile & profile) -> CoarseParams
    {
        if (n < 2 || !is_power_of_two(n))
            throw std::invalid_argument("coarse: vertex count must be a power of two >= 2");
        CoarseParams p;
        p.log_n = log2_floor(n);
        const double kl = static_cast<double>(k) * p.log_n;
        p.p_out = std::pow(8.0 * kl, -k);
        p.repetitions = profile.colour_coarse_repetitions.apply(std::ceil(48.0 * std::log(6.0 * kl) / p.p_out));
        p.gamma = p.p_out / (2.0 * std::pow(kl, k));
        p.scale = std::sqrt(p.p_out / (2.0 * std::pow(kl, k)));
        p.b = std::pow(4.0 * kl, k);
        return p;
    }

    auto lower_median(std::vector<double> values) -> double
    {
        if (values.empty())
            return 0.0;
        auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
        std::nth_element(values.begin(), mid, values.end());
        return *mid;
    }

    auto verify_guess(IndependenceOracle & oracle, std::uint64_t M, const ColourClasses & classes, Rng & rng,
        RunStats & stats) -> bool
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        if (!is_power_of_two(n))
            throw std::invalid_argument("verify_guess: vertex count must be a power of two");
        if (M == 0 || !is_power_of_two(M))
            throw std::invalid_argument("verify_guess: M must be a positive power of two");
        if (classes.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("verify_guess: expected one class per colour");
        ++stats.verify_guess_calls;

        const int top = k * log2_floor(n);
        const int log_m = log2_floor(M);
        const auto levels = static_cast<std::size_t>(top + 1);

        std::vector<VertexSet> y(static_cast<std::size_t>(k) * levels);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j <= top; ++j)
                bernoulli_subset_into(rng, classes[static_cast<std::size_t>(i)], j, y[static_cast<std::size_t>(i) * levels + static_cast<std::size_t>(j)]);

        if (log_m > k * top)
            return false;

        std::vector<int> a(static_cast<std::size_t>(k), 0);
        std::vector<ClassView> views(static_cast<std::size_t>(k));
        int sum = 0;
        while (true)
        {
            if (sum >= log_m)
            {
                bool empty = false;
                for (int i = 0; i < k; ++i)
                {
                    const auto & s = y[static_cast<std::size_t>(i) * levels + static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
                    empty = empty || s.empty();
                    views[static_cast<std::size_t>(i)] = s;
                }
                // An empty class can hold no colourful edge, so the answer is known without asking.
                if (!empty && oracle.query(std::span<const ClassView>(views)) == QueryResult::has_edge)
                    return true;
            }
            int i = k - 1;
            while (i >= 0 && a[static_cast<std::size_t>(i)] == top)
            {
                sum -= top;
                a[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                return false;
            ++a[static_cast<std::size_t>(i)];
            ++sum;
        }
    }

    auto colour_coarse(IndependenceOracle & oracle, const ColourClasses & classes, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats) -> double
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        ++stats.colour_coarse_calls;
        if (oracle.query(classes) == QueryResult::independent)
            return 0.0;

        const auto params = CoarseParams::make(n, k, profile);
        const double threshold = 0.75 * params.p_out * static_cast<double>(params.repetitions);
        const int top = k * params.log_n;

        // m is the least guess that VerifyGuess no longer confirms; n^k if every guess is confirmed.
        std::uint64_t m = 0;
        for (int e = 0; e <= top; ++e)
        {
            const std::uint64_t M = 1ULL << e;
            std::uint64_t yes = 0;
            for (std::uint64_t r = 0; r < params.repetitions; ++r)
            {
                if (verify_guess(oracle, M, classes, rng, stats))
                    ++yes;
                if (profile.colour_coarse_early_exit && static_cast<double>(yes) >= threshold)
                    break;
            }
            if (m == 0 && static_cast<double>(yes) < threshold)
            {
                m = M;
                if (profile.colour_coarse_early_exit)
                    break;
            }
        }
        if (m == 0)
            m = 1ULL << top;
        return static_cast<double>(m) * params.scale;
    }

    auto helper_coarse(IndependenceOracle & oracle, Rng & rng, const ConstantsProfile & profile, RunStats & stats)
        -> double
    {
        const auto n = oracle.vertex_count();
        const int k = oracle.arity();
        const auto t = profile.helper_coarse_colourings.apply(std::ceil(3.0 * std::exp(2.0 * k)));
        const auto rounds = profile.helper_coarse_rounds.apply(std::ceil(72.0 * std::log(static_cast<double>(t))) + 3.0);

        double sum = 0.0;
        std::vector<double> outputs;
        for (std::uint64_t i = 0; i < t; ++i)
        {
            auto classes = random_colouring(rng, n, k);
            outputs.clear();
            for (std::uint64_t r = 0; r < rounds; ++r)
                outputs.push_back(colour_coarse(oracle, classes, rng, profile, stats));
            sum += lower_median(outputs);
        }
        double k_factorial = std::tgamma(k + 1.0);
        return std::pow(static_cast<double>(k), k) / (static_cast<double>(t) * k_factorial) * sum;
    }

    auto coarse(IndependenceOracle & oracle, double delta, Rng & rng, const ConstantsProfile & profile,
        RunStats & stats) -> double
    {
        if (!(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("coarse: delta must lie in (0, 1)");
        ++stats.coarse_calls;
        const auto rounds = profile.coarse_rounds.apply(std::ceil(36.0 * std::log(2.0 / delta)));
        std::vector<double> outputs;
        outputs.reserve(std::min<std::uint64_t>(rounds, 1u << 20));
        for (std::uint64_t r = 0; r < rounds; ++r)
            outputs.push_back(helper_coarse(oracle, rng, profile, stats));
        return lower_median(std::move(outputs));
    }
}
