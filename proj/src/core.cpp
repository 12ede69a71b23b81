#include "cindcount/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace cindcount
{
    namespace
    {
        constexpr std::uint8_t unmarked = 0xff;

        void check_sorted_set(std::span<const Vertex> s, const char * what)
        {
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i - 1] >= s[i])
                    throw std::invalid_argument(std::string(what) + ": vertex set must be sorted and duplicate-free");
        }
    }

    Hypergraph::Hypergraph(std::size_t n, int k, std::vector<VertexSet> edges)
        : n_(n), k_(k), edges_(std::move(edges)), incidence_(n)
    {
        if (k < 1 || k > 64)
            throw std::invalid_argument("hypergraph: arity must lie in [1, 64]");
        for (auto & e : edges_)
        {
            if (e.size() != static_cast<std::size_t>(k))
                throw std::invalid_argument("hypergraph: edge of wrong arity");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("hypergraph: edge with a repeated vertex");
            if (e.back() >= n)
                throw std::invalid_argument("hypergraph: edge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("hypergraph: duplicate edge");
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (auto v : edges_[i])
                incidence_[v].push_back(static_cast<std::uint32_t>(i));
    }

    auto Hypergraph::contains_edge(std::span<const Vertex> sorted_edge) const -> bool
    {
        return std::binary_search(edges_.begin(), edges_.end(), sorted_edge,
            [](const auto & a, const auto & b) {
                return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
    }

    auto IndependenceOracle::query(std::span<const ClassView> classes) -> QueryResult
    {
        if (classes.size() != static_cast<std::size_t>(arity()))
            throw std::invalid_argument("query: expected one class per colour");
        ++queries_;
        return answer(classes);
    }

    auto IndependenceOracle::query(const ColourClasses & classes) -> QueryResult
    {
        std::vector<ClassView> views(classes.begin(), classes.end());
        return query(std::span<const ClassView>(views));
    }

    HypergraphOracle::HypergraphOracle(std::shared_ptr<const Hypergraph> graph)
        : graph_(std::move(graph)), colour_of_(graph_->vertex_count(), unmarked)
    {
    }

    auto HypergraphOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        const auto n = graph_->vertex_count();
        const int k = graph_->arity();
        std::size_t marked_upto = 0;
        auto unmark = [&] {
            for (std::size_t c = 0; c < marked_upto; ++c)
                for (auto v : classes[c])
                    colour_of_[v] = unmarked;
        };
        for (std::size_t c = 0; c < classes.size(); ++c)
        {
            const auto & cls = classes[c];
            for (std::size_t i = 0; i < cls.size(); ++i)
            {
                auto v = cls[i];
                if (v >= n || colour_of_[v] != unmarked)
                {
                    for (std::size_t r = 0; r < i; ++r)
                        colour_of_[cls[r]] = unmarked;
                    unmark();
                    throw std::invalid_argument(v >= n ? "query: vertex out of range" : "query: classes overlap");
                }
                colour_of_[v] = static_cast<std::uint8_t>(c);
            }
            marked_upto = c + 1;
        }

        std::size_t best = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < classes.size(); ++c)
        {
            std::size_t cost = 0;
            for (auto v : classes[c])
                cost += graph_->incident(v).size();
            if (cost < best_cost)
            {
                best_cost = cost;
                best = c;
            }
        }

        const std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
        bool found = false;
        for (auto v : classes[best])
        {
            for (auto ei : graph_->incident(v))
            {
                std::uint64_t seen = 0;
                bool ok = true;
                for (auto u : graph_->edges()[ei])
                {
                    auto col = colour_of_[u];
                    if (col == unmarked || (seen >> col) & 1ULL)
                    {
                        ok = false;
                        break;
                    }
                    seen |= 1ULL << col;
                }
                if (ok && seen == full)
                {
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        unmark();
        return found ? QueryResult::has_edge : QueryResult::independent;
    }

    PaddedOracle::PaddedOracle(IndependenceOracle & inner)
        : inner_(inner), padded_n_(next_power_of_two(inner.vertex_count())), scratch_(static_cast<std::size_t>(inner.arity()))
    {
    }

    auto PaddedOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        const auto n = inner_.vertex_count();
        std::vector<Vertex> padding;
        std::vector<ClassView> views;
        views.reserve(classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
        {
            auto & dst = scratch_[c];
            dst.clear();
            for (auto v : classes[c])
            {
                if (v >= padded_n_)
                    throw std::invalid_argument("query: vertex out of range");
                if (v < n)
                    dst.push_back(v);
                else
                    padding.push_back(v);
            }
            views.emplace_back(dst);
        }
        std::sort(padding.begin(), padding.end());
        if (std::adjacent_find(padding.begin(), padding.end()) != padding.end())
            throw std::invalid_argument("query: classes overlap");
        return inner_.query(std::span<const ClassView>(views));
    }

    InducedOracle::InducedOracle(IndependenceOracle & parent, std::span<const Vertex> subset)
    {
        check_sorted_set(subset, "induced oracle");
        if (!subset.empty() && subset.back() >= parent.vertex_count())
            throw std::invalid_argument("induced oracle: vertex out of range");
        if (auto * induced = dynamic_cast<InducedOracle *>(&parent))
        {
            base_ = induced->base_;
            to_base_.reserve(subset.size());
            for (auto v : subset)
                to_base_.push_back(induced->to_base_[v]);
        }
        else
        {
            base_ = &parent;
            to_base_.assign(subset.begin(), subset.end());
        }
        scratch_.resize(static_cast<std::size_t>(base_->arity()));
    }

    auto InducedOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        std::vector<ClassView> views;
        views.reserve(classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
        {
            auto & dst = scratch_[c];
            dst.clear();
            for (auto v : classes[c])
            {
                if (v >= to_base_.size())
                    throw std::invalid_argument("query: vertex out of range");
                dst.push_back(to_base_[v]);
            }
            views.emplace_back(dst);
        }
        return base_->query(std::span<const ClassView>(views));
    }

    BudgetedOracle::BudgetedOracle(IndependenceOracle & inner, std::uint64_t limit)
        : inner_(inner), limit_(limit)
    {
    }

    auto BudgetedOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        if (queries() > limit_)
            throw BudgetExhausted(this, "oracle query budget exhausted");
        return inner_.query(classes);
    }

    void validate_classes(std::span<const ClassView> classes, std::size_t n, int k)
    {
        if (classes.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("query: expected one class per colour");
        std::vector<Vertex> all;
        for (auto c : classes)
            all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end());
        if (!all.empty() && all.back() >= n)
            throw std::invalid_argument("query: vertex out of range");
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("query: classes overlap");
    }

    auto exact_cind(HypergraphOracle & oracle, const ColourClasses & classes) -> QueryResult
    {
        return oracle.query(classes);
    }

    auto enumerate_edges_within(IndependenceOracle & oracle, std::span<const Vertex> subset)
        -> std::vector<VertexSet>
    {
        const auto k = static_cast<std::size_t>(oracle.arity());
        std::vector<VertexSet> found;
        if (subset.size() < k)
            return found;
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Vertex> picked(k);
        std::vector<ClassView> views(k);
        const auto m = subset.size();
        while (true)
        {
            for (std::size_t i = 0; i < k; ++i)
            {
                picked[i] = subset[idx[i]];
                views[i] = ClassView(&picked[i], 1);
            }
            if (oracle.query(std::span<const ClassView>(views)) == QueryResult::has_edge)
            {
                VertexSet e(picked.begin(), picked.end());
                std::sort(e.begin(), e.end());
                found.push_back(std::move(e));
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == m - k + (i - 1))
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        return found;
    }

    auto pad_oracle_to_power_of_two(IndependenceOracle & oracle) -> PaddedOracle
    {
        return PaddedOracle(oracle);
    }

    auto degree(const Hypergraph & graph, std::span<const Vertex> s) -> std::size_t
    {
        if (s.size() > static_cast<std::size_t>(graph.arity()))
            throw std::invalid_argument("degree: set larger than the arity");
        if (s.empty())
            return graph.edge_count();
        std::size_t d = 0;
        for (auto ei : graph.incident(s[0]))
        {
            const auto & e = graph.edges()[ei];
            bool all = std::all_of(s.begin(), s.end(), [&](Vertex v) { return std::binary_search(e.begin(), e.end(), v); });
            d += all ? 1 : 0;
        }
        return d;
    }

    auto halving_survival_p(int y, int k) -> SurvivalRatio
    {
        using boost::multiprecision::cpp_rational;
        if (y < 1 || y > 62 || k < 1)
            throw std::invalid_argument("halving_survival_p: need y >= 1 and k >= 1");
        const std::uint64_t half = 1ULL << (y - 1);
        if (half < static_cast<std::uint64_t>(k))
            throw std::invalid_argument("halving_survival_p: need 2^(y-1) >= k");
        cpp_rational p(1);
        for (int i = 0; i < k; ++i)
            p *= cpp_rational(half - i, 2 * half - i);
        return {p.convert_to<double>(), numerator(p).str(), denominator(p).str()};
    }

    auto is_power_of_two(std::uint64_t x) noexcept -> bool
    {
        return std::has_single_bit(x);
    }

    auto next_power_of_two(std::uint64_t x) noexcept -> std::uint64_t
    {
        return x <= 1 ? 1 : std::bit_ceil(x);
    }

    auto log2_floor(std::uint64_t x) noexcept -> int
    {
        return x == 0 ? 0 : std::bit_width(x) - 1;
    }

    auto binomial(std::uint64_t n, std::uint64_t k) -> double
    {
        if (k > n)
            return 0.0;
        k = std::min(k, n - k);
        double r = 1.0;
        for (std::uint64_t i = 1; i <= k; ++i)
            r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
        return r < 0x1.0p53 ? std::round(r) : r;
    }

    auto all_vertices(std::size_t n) -> VertexSet
    {
        VertexSet v(n);
        std::iota(v.begin(), v.end(), Vertex{0});
        return v;
    }
}
