#include "cindcount/verify.hpp"

#include "cindcount/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cindcount
{
    auto exact_count(const Hypergraph & graph) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (const auto & e : graph.edges())
            if (graph.contains_edge(e))
                ++count;
        return count;
    }

    auto TrialReport::to_json() const -> nlohmann::json
    {
        return {{"trials", trials}, {"successes", successes}, {"rate", rate}, {"wilson_lo", wilson_lo},
            {"wilson_hi", wilson_hi}, {"mean_queries", mean_queries}};
    }

    auto wilson_interval(std::uint64_t successes, std::uint64_t trials) -> std::pair<double, double>
    {
        if (trials == 0)
            return {0.0, 1.0};
        constexpr double z = 1.959963984540054;
        const double n = static_cast<double>(trials);
        const double p = static_cast<double>(successes) / n;
        const double denom = 1.0 + z * z / n;
        const double centre = (p + z * z / (2.0 * n)) / denom;
        const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
        return {std::clamp(centre - half, 0.0, p), std::clamp(centre + half, p, 1.0)};
    }

    auto success_rate_trial(const TrialRunner & runner, std::uint64_t trials, std::uint64_t master_seed,
        unsigned threads) -> TrialReport
    {
        if (trials == 0)
            throw std::invalid_argument("success_rate_trial: need at least one trial");
        std::vector<TrialOutcome> outcomes(trials);
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(trials, 1024))));
        if (workers == 1)
        {
            for (std::uint64_t i = 0; i < trials; ++i)
                outcomes[i] = runner(derive_seed(master_seed, i));
        }
        else
        {
            std::atomic<std::uint64_t> next{0};
            std::exception_ptr error;
            std::mutex error_mutex;
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (auto i = next++; i < trials; i = next++)
                    {
                        try
                        {
                            outcomes[i] = runner(derive_seed(master_seed, i));
                        }
                        catch (...)
                        {
                            std::lock_guard lock(error_mutex);
                            if (!error)
                                error = std::current_exception();
                            next = trials;
                        }
                    }
                });
            for (auto & t : pool)
                t.join();
            if (error)
                std::rethrow_exception(error);
        }

        TrialReport report;
        report.trials = trials;
        long double queries = 0;
        for (const auto & o : outcomes)
        {
            report.successes += o.pass ? 1 : 0;
            queries += static_cast<long double>(o.queries);
        }
        report.rate = static_cast<double>(report.successes) / static_cast<double>(trials);
        std::tie(report.wilson_lo, report.wilson_hi) = wilson_interval(report.successes, trials);
        report.mean_queries = static_cast<double>(queries / static_cast<long double>(trials));
        return report;
    }

    auto tv_distance(const std::vector<VertexSet> & samples, const std::vector<VertexSet> & edges) -> double
    {
        if (samples.empty())
            throw std::invalid_argument("tv_distance: no samples");
        if (edges.empty())
            throw std::invalid_argument("tv_distance: empty edge set");
        std::map<VertexSet, std::uint64_t> hits;
        for (const auto & e : edges)
            hits.emplace(e, 0);
        for (const auto & s : samples)
        {
            auto it = hits.find(s);
            if (it == hits.end())
                throw std::invalid_argument("tv_distance: sample is not an edge");
            ++it->second;
        }
        const double total = static_cast<double>(samples.size());
        const double uniform = 1.0 / static_cast<double>(hits.size());
        double l1 = 0.0;
        for (const auto & [e, c] : hits)
            l1 += std::abs(static_cast<double>(c) / total - uniform);
        return l1 / 2.0;
    }
}
