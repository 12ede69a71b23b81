#pragma once

#include "cindcount/core.hpp"
#include "cindcount/random.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace testing
{
    using namespace cindcount;

    inline auto random_hypergraph(Rng & rng, std::size_t n, int k, std::size_t m) -> std::shared_ptr<const Hypergraph>
    {
        std::set<VertexSet> edges;
        const double total = binomial(n, static_cast<std::uint64_t>(k));
        m = std::min<std::size_t>(m, static_cast<std::size_t>(total));
        while (edges.size() < m)
        {
            auto e = random_fixed_subset(rng, all_vertices(n), static_cast<std::size_t>(k));
            edges.insert(e);
        }
        return std::make_shared<const Hypergraph>(n, k, std::vector<VertexSet>(edges.begin(), edges.end()));
    }

    inline auto complete_graph(std::size_t n) -> std::shared_ptr<const Hypergraph>
    {
        std::vector<VertexSet> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                edges.push_back({a, b});
        return std::make_shared<const Hypergraph>(n, 2, edges);
    }

    /// Every k-subset of 0..n-1, lexicographic.
    inline auto all_k_subsets(std::size_t n, int k) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        VertexSet cur;
        auto rec = [&](auto & self, Vertex from) -> void {
            if (cur.size() == static_cast<std::size_t>(k))
            {
                out.push_back(cur);
                return;
            }
            for (Vertex v = from; v < n; ++v)
            {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    }

    /// Direct cIND: some edge has exactly one vertex in each class.
    inline auto brute_cind(const Hypergraph & g, const ColourClasses & classes) -> bool
    {
        for (const auto & e : g.edges())
        {
            std::vector<int> hits(classes.size(), 0);
            bool ok = true;
            for (auto v : e)
            {
                int owner = -1;
                for (std::size_t c = 0; c < classes.size(); ++c)
                    if (std::binary_search(classes[c].begin(), classes[c].end(), v))
                        owner = static_cast<int>(c);
                if (owner < 0 || ++hits[static_cast<std::size_t>(owner)] > 1)
                {
                    ok = false;
                    break;
                }
            }
            if (ok)
                return true;
        }
        return false;
    }

    /// Random disjoint classes drawn from a random subset of the vertices.
    inline auto random_classes(Rng & rng, std::size_t n, int k) -> ColourClasses
    {
        ColourClasses classes(static_cast<std::size_t>(k));
        for (Vertex v = 0; v < n; ++v)
        {
            auto c = uniform_below(rng, static_cast<std::uint64_t>(k) + 1);
            if (c < static_cast<std::uint64_t>(k))
                classes[c].push_back(v);
        }
        return classes;
    }
}
