#include "cindcount/problems.hpp"

#include "cindcount/count.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace cindcount
{
    namespace
    {
        constexpr Int128 int128_max = static_cast<Int128>((~static_cast<unsigned __int128>(0)) >> 1);

        auto checked_mul(Int128 a, Int128 b) -> Int128
        {
            Int128 r;
            if (__builtin_mul_overflow(a, b, &r))
                throw EncodingOverflow("k-SUM encoding overflows 128 bits");
            return r;
        }

        auto checked_pow(Int128 base, int e) -> Int128
        {
            Int128 r = 1;
            for (int i = 0; i < e; ++i)
                r = checked_mul(r, base);
            return r;
        }

        auto abs128(Int128 x) -> Int128 { return x < 0 ? -x : x; }

        struct Int128Hash
        {
            auto operator()(Int128 x) const noexcept -> std::size_t
            {
                auto u = static_cast<unsigned __int128>(x);
                return mix64(static_cast<std::uint64_t>(u) ^ mix64(static_cast<std::uint64_t>(u >> 64)));
            }
        };

        // Calls f(indices) for each m-subset of 0..n-1 in lexicographic order; stops when f returns true.
        template <class F>
        auto for_each_subset(std::size_t n, std::size_t m, F && f) -> bool
        {
            if (m > n)
                return false;
            std::vector<std::size_t> idx(m);
            std::iota(idx.begin(), idx.end(), 0);
            while (true)
            {
                if (f(std::span<const std::size_t>(idx)))
                    return true;
                std::size_t i = m;
                while (i > 0 && idx[i - 1] == n - m + (i - 1))
                    --i;
                if (i == 0)
                    return false;
                ++idx[i - 1];
                for (std::size_t j = i; j < m; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }

        template <class F>
        void for_each_permutation(int k, F && f)
        {
            std::vector<int> perm(static_cast<std::size_t>(k));
            std::iota(perm.begin(), perm.end(), 0);
            do
            {
                if (f(std::span<const int>(perm)))
                    return;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        auto class_membership(std::span<const ClassView> classes, std::size_t n) -> std::vector<int>
        {
            std::vector<int> cls(n, -1);
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (auto v : classes[c])
                    cls[v] = static_cast<int>(c);
            return cls;
        }

        auto any_empty(std::span<const ClassView> classes) -> bool
        {
            return std::any_of(classes.begin(), classes.end(), [](ClassView c) { return c.empty(); });
        }
    }

    // ---- k-SUM ----------------------------------------------------------------

    auto ksum_encode(int i, int k, std::int64_t x) -> Int128
    {
        if (k < 1 || i < 1 || i > k)
            throw std::invalid_argument("ksum_encode: need 1 <= i <= k");
        const Int128 radix = k + 1;
        const Int128 base = checked_pow(radix, k);
        Int128 offset = 0;
        if (i < k)
            offset = checked_pow(radix, i - 1);
        else
            for (int j = 1; j < k; ++j)
                offset -= checked_pow(radix, j - 1);
        Int128 r;
        if (__builtin_add_overflow(checked_mul(base, x), offset, &r))
            throw EncodingOverflow("k-SUM encoding overflows 128 bits");
        return r;
    }

    void KSumInstance::validate() const
    {
        if (k < 3)
            throw std::invalid_argument("k-SUM: k must be at least 3");
        auto sorted = values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("k-SUM: values must be distinct");
        if (sorted.empty())
            return;
        // Any k encoded values must be summable without overflow.
        const Int128 largest = std::max(abs128(sorted.front()), abs128(sorted.back()));
        const Int128 base = checked_pow(k + 1, k);
        checked_mul(checked_mul(base, largest + 1), k);
    }

    auto ksum_decide_brute(std::span<const Int128> values, int k) -> bool
    {
        const auto m = static_cast<std::size_t>(k);
        return for_each_subset(values.size(), m, [&](std::span<const std::size_t> idx) {
            Int128 sum = 0;
            for (auto i : idx)
                sum += values[i];
            return sum == 0;
        });
    }

    auto ksum_decide_meet_in_middle(std::span<const Int128> values, int k) -> bool
    {
        const auto n = values.size();
        const auto h = static_cast<std::size_t>((k + 1) / 2);
        const auto l = static_cast<std::size_t>(k) - h;
        if (n < static_cast<std::size_t>(k))
            return false;
        std::unordered_map<Int128, std::vector<std::size_t>, Int128Hash> left;   // sum -> flattened h-subsets
        for_each_subset(n, h, [&](std::span<const std::size_t> idx) {
            Int128 sum = 0;
            for (auto i : idx)
                sum += values[i];
            auto & bucket = left[sum];
            bucket.insert(bucket.end(), idx.begin(), idx.end());
            return false;
        });
        return for_each_subset(n, l, [&](std::span<const std::size_t> idx) {
            Int128 sum = 0;
            for (auto i : idx)
                sum += values[i];
            auto it = left.find(-sum);
            if (it == left.end())
                return false;
            const auto & flat = it->second;
            for (std::size_t s = 0; s < flat.size(); s += h)
            {
                bool disjoint = true;
                for (std::size_t a = 0; a < h && disjoint; ++a)
                    disjoint = std::find(idx.begin(), idx.end(), flat[s + a]) == idx.end();
                if (disjoint)
                    return true;
            }
            return false;
        });
    }

    auto ksum_brute_force_decider() -> KSumDecider
    {
        return {"brute-force", ksum_decide_brute, 0.0};
    }

    auto ksum_meet_in_middle_decider() -> KSumDecider
    {
        return {"meet-in-middle", ksum_decide_meet_in_middle, 0.0};
    }

    KSumOracle::KSumOracle(std::shared_ptr<const KSumInstance> instance, KSumDecider decider)
        : instance_(std::move(instance)), decider_(std::move(decider))
    {
        instance_->validate();
        const int k = instance_->k;
        encoded_.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (auto x : instance_->values)
                encoded_[static_cast<std::size_t>(i)].push_back(ksum_encode(i + 1, k, x));
    }

    auto KSumOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        validate_classes(classes, vertex_count(), arity());
        if (any_empty(classes))
            return QueryResult::independent;
        std::vector<Int128> y;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (auto v : classes[i])
                y.push_back(encoded_[i][v]);
        return decider_.decide(y, arity()) ? QueryResult::has_edge : QueryResult::independent;
    }

    auto ksum_witnesses(const KSumInstance & instance) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for_each_subset(instance.values.size(), static_cast<std::size_t>(instance.k), [&](std::span<const std::size_t> idx) {
            Int128 sum = 0;
            for (auto i : idx)
                sum += instance.values[i];
            if (sum == 0)
                out.emplace_back(idx.begin(), idx.end());
            return false;
        });
        return out;
    }

    // ---- k-OV -----------------------------------------------------------------

    auto KovInstance::vertex_count() const -> std::size_t
    {
        std::size_t n = 0;
        for (const auto & s : sets)
            n += s.size();
        return n;
    }

    void KovInstance::validate() const
    {
        if (sets.size() < 2)
            throw std::invalid_argument("k-OV: need at least two vector lists");
        const auto words = (dimension + 63) / 64;
        for (const auto & s : sets)
            for (const auto & v : s)
            {
                if (v.size() != words)
                    throw std::invalid_argument("k-OV: vector of wrong dimension");
                if (dimension % 64 != 0 && !v.empty() && (v.back() >> (dimension % 64)) != 0)
                    throw std::invalid_argument("k-OV: bits set beyond the dimension");
            }
    }

    auto KovInstance::pack(const std::string & bits, std::size_t dimension) -> BitVector
    {
        if (bits.size() != dimension)
            throw std::invalid_argument("k-OV: vector '" + bits + "' does not have " + std::to_string(dimension) + " bits");
        BitVector v((dimension + 63) / 64, 0);
        for (std::size_t i = 0; i < dimension; ++i)
        {
            if (bits[i] == '1')
                v[i / 64] |= 1ULL << (i % 64);
            else if (bits[i] != '0')
                throw std::invalid_argument("k-OV: vector '" + bits + "' is not a 0/1 string");
        }
        return v;
    }

    auto KovInstance::unpack(const BitVector & v, std::size_t dimension) -> std::string
    {
        std::string s(dimension, '0');
        for (std::size_t i = 0; i < dimension; ++i)
            if ((v[i / 64] >> (i % 64)) & 1ULL)
                s[i] = '1';
        return s;
    }

    auto kov_orthogonal(std::span<const BitVector * const> vectors) -> bool
    {
        if (vectors.empty())
            return false;
        const auto words = vectors[0]->size();
        for (std::size_t w = 0; w < words; ++w)
        {
            std::uint64_t acc = ~0ULL;
            for (const auto * v : vectors)
                acc &= (*v)[w];
            if (acc != 0)
                return false;
        }
        return true;
    }

    auto kov_brute_force_decider() -> KovDecider
    {
        auto decide = [](const std::vector<std::vector<const BitVector *>> & lists) {
            const auto k = lists.size();
            for (const auto & l : lists)
                if (l.empty())
                    return false;
            std::vector<std::size_t> at(k, 0);
            std::vector<const BitVector *> pick(k);
            while (true)
            {
                for (std::size_t i = 0; i < k; ++i)
                    pick[i] = lists[i][at[i]];
                if (kov_orthogonal(pick))
                    return true;
                std::size_t i = k;
                while (i > 0 && at[i - 1] + 1 == lists[i - 1].size())
                {
                    at[i - 1] = 0;
                    --i;
                }
                if (i == 0)
                    return false;
                ++at[i - 1];
            }
        };
        return {"brute-force", decide, 0.0};
    }

    KovOracle::KovOracle(std::shared_ptr<const KovInstance> instance, KovDecider decider)
        : instance_(std::move(instance)), decider_(std::move(decider))
    {
        instance_->validate();
        for (std::size_t i = 0; i < instance_->sets.size(); ++i)
            for (const auto & v : instance_->sets[i])
            {
                owner_.push_back(static_cast<int>(i));
                vector_of_.push_back(&v);
            }
    }

    auto KovOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        validate_classes(classes, vertex_count(), arity());
        if (any_empty(classes))
            return QueryResult::independent;
        const int k = arity();
        bool found = false;
        std::vector<std::vector<const BitVector *>> lists(static_cast<std::size_t>(k));
        // sigma maps each natural class to the query class that must supply its vector.
        for_each_permutation(k, [&](std::span<const int> sigma) {
            bool empty = false;
            for (int i = 0; i < k && !empty; ++i)
            {
                auto & l = lists[static_cast<std::size_t>(i)];
                l.clear();
                for (auto v : classes[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])])
                    if (owner_[v] == i)
                        l.push_back(vector_of_[v]);
                empty = l.empty();
            }
            found = !empty && decider_.decide(lists);
            return found;
        });
        return found ? QueryResult::has_edge : QueryResult::independent;
    }

    auto kov_witnesses(const KovInstance & instance) -> std::vector<VertexSet>
    {
        const auto k = instance.sets.size();
        std::vector<VertexSet> out;
        std::vector<Vertex> offset(k, 0);
        for (std::size_t i = 1; i < k; ++i)
            offset[i] = offset[i - 1] + static_cast<Vertex>(instance.sets[i - 1].size());
        for (const auto & s : instance.sets)
            if (s.empty())
                return out;
        std::vector<std::size_t> at(k, 0);
        std::vector<const BitVector *> pick(k);
        while (true)
        {
            for (std::size_t i = 0; i < k; ++i)
                pick[i] = &instance.sets[i][at[i]];
            if (kov_orthogonal(pick))
            {
                VertexSet e;
                for (std::size_t i = 0; i < k; ++i)
                    e.push_back(offset[i] + static_cast<Vertex>(at[i]));
                out.push_back(std::move(e));
            }
            std::size_t i = k;
            while (i > 0 && at[i - 1] + 1 == instance.sets[i - 1].size())
            {
                at[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
            ++at[i - 1];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // ---- exact-weight cliques ---------------------------------------------------

    void WeightedGraph::validate() const
    {
        std::set<std::pair<Vertex, Vertex>> seen;
        for (const auto & e : edges)
        {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("weighted graph: edge endpoint out of range");
            if (e.u == e.v)
                throw std::invalid_argument("weighted graph: self-loop");
            if (!seen.insert(std::minmax(e.u, e.v)).second)
                throw std::invalid_argument("weighted graph: repeated edge");
            if (max_weight > 0 && (e.w > max_weight || e.w < -max_weight))
                throw std::invalid_argument("weighted graph: weight outside [-M, M]");
        }
    }

    Adjacency::Adjacency(std::size_t n, std::span<const WeightedEdge> edges) : adj_(n)
    {
        for (const auto & e : edges)
        {
            adj_[e.u].emplace_back(e.v, e.w);
            adj_[e.v].emplace_back(e.u, e.w);
        }
        for (auto & a : adj_)
            std::sort(a.begin(), a.end());
    }

    auto Adjacency::weight(Vertex u, Vertex v) const -> std::optional<std::int64_t>
    {
        const auto & a = adj_[u];
        auto it = std::lower_bound(a.begin(), a.end(), v, [](const auto & p, Vertex x) { return p.first < x; });
        if (it == a.end() || it->first != v)
            return std::nullopt;
        return it->second;
    }

    auto clique_brute_force_decider() -> CliqueDecider
    {
        auto decide = [](const Adjacency & g, std::span<const ClassView> classes) {
            const auto k = classes.size();
            std::vector<Vertex> pick(k);
            auto rec = [&](auto & self, std::size_t depth, Int128 sum) -> bool {
                if (depth == k)
                    return sum == 0;
                for (auto v : classes[depth])
                {
                    Int128 s = sum;
                    bool ok = true;
                    for (std::size_t j = 0; j < depth && ok; ++j)
                    {
                        auto w = g.weight(pick[j], v);
                        ok = w.has_value();
                        if (ok)
                            s += *w;
                    }
                    if (!ok)
                        continue;
                    pick[depth] = v;
                    if (self(self, depth + 1, s))
                        return true;
                }
                return false;
            };
            return rec(rec, 0, 0);
        };
        return {"brute-force", decide, 0.0};
    }

    ExactWeightCliqueOracle::ExactWeightCliqueOracle(std::shared_ptr<const WeightedGraph> graph, int k, CliqueDecider decider)
        : graph_(std::move(graph)), k_(k), decider_(std::move(decider))
    {
        if (k < 3)
            throw std::invalid_argument("exact-weight clique: k must be at least 3");
        graph_->validate();
        full_ = Adjacency(graph_->n, graph_->edges);
    }

    auto ExactWeightCliqueOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        validate_classes(classes, vertex_count(), arity());
        if (any_empty(classes))
            return QueryResult::independent;
        const auto cls = class_membership(classes, graph_->n);
        std::vector<WeightedEdge> kept;
        for (const auto & e : graph_->edges)
            if (cls[e.u] >= 0 && cls[e.v] >= 0 && cls[e.u] != cls[e.v])
                kept.push_back(e);
        Adjacency restricted(graph_->n, kept);
        return decider_.decide(restricted, classes) ? QueryResult::has_edge : QueryResult::independent;
    }

    auto zero_weight_cliques(const WeightedGraph & graph, int k) -> std::vector<VertexSet>
    {
        Adjacency adj(graph.n, graph.edges);
        std::vector<VertexSet> out;
        for_each_subset(graph.n, static_cast<std::size_t>(k), [&](std::span<const std::size_t> idx) {
            Int128 sum = 0;
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                {
                    auto w = adj.weight(static_cast<Vertex>(idx[a]), static_cast<Vertex>(idx[b]));
                    if (!w)
                        return false;
                    sum += *w;
                }
            if (sum == 0)
                out.emplace_back(idx.begin(), idx.end());
            return false;
        });
        return out;
    }

    // ---- colourful subgraphs ---------------------------------------------------

    void SimpleGraph::validate() const
    {
        std::set<std::pair<Vertex, Vertex>> seen;
        for (auto [u, v] : edges)
        {
            if (u >= n || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("graph: self-loop");
            if (!seen.insert(std::minmax(u, v)).second)
                throw std::invalid_argument("graph: repeated edge");
        }
    }

    auto SimpleGraph::adjacency() const -> std::vector<std::vector<bool>>
    {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (auto [u, v] : edges)
            adj[u][v] = adj[v][u] = true;
        return adj;
    }

    void PatternInstance::validate() const
    {
        graph.validate();
        pattern.validate();
        if (pattern.n < 2)
            throw std::invalid_argument("colourful: pattern needs at least two vertices");
        if (pattern.n > 10)
            throw std::invalid_argument("colourful: patterns above 10 vertices are unsupported");
        if (colours.size() != graph.n)
            throw std::invalid_argument("colourful: need one colour per host vertex");
        for (auto c : colours)
            if (c < 0 || c >= arity())
                throw std::invalid_argument("colourful: colour outside [0, k)");
    }

    auto colourful_brute_force_decider() -> ColourfulDecider
    {
        auto decide = [](const Adjacency & host, const std::vector<VertexSet> & by_colour, const SimpleGraph & pattern,
                          std::span<const int> d) {
            const auto k = pattern.n;
            const auto padj = pattern.adjacency();
            std::vector<Vertex> pick(k);
            auto rec = [&](auto & self, std::size_t a) -> bool {
                if (a == k)
                    return true;
                for (auto v : by_colour[static_cast<std::size_t>(d[a])])
                {
                    bool ok = true;
                    for (std::size_t b = 0; b < a && ok; ++b)
                        if (padj[a][b])
                            ok = host.adjacent(pick[b], v);
                    if (!ok)
                        continue;
                    pick[a] = v;
                    if (self(self, a + 1))
                        return true;
                }
                return false;
            };
            return rec(rec, 0);
        };
        return {"brute-force", decide, 0.0};
    }

    ColourfulPatternOracle::ColourfulPatternOracle(std::shared_ptr<const PatternInstance> instance, std::vector<int> d,
        ColourfulDecider decider)
        : instance_(std::move(instance)), d_(std::move(d)), decider_(std::move(decider))
    {
        instance_->validate();
        const int k = instance_->arity();
        if (d_.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("colourful: d must map every pattern vertex");
        d_inverse_.assign(static_cast<std::size_t>(k), -1);
        for (int a = 0; a < k; ++a)
        {
            const int c = d_[static_cast<std::size_t>(a)];
            if (c < 0 || c >= k || d_inverse_[static_cast<std::size_t>(c)] != -1)
                throw std::invalid_argument("colourful: d is not a bijection");
            d_inverse_[static_cast<std::size_t>(c)] = a;
        }
        pattern_adj_ = instance_->pattern.adjacency();
    }

    auto ColourfulPatternOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        validate_classes(classes, vertex_count(), arity());
        if (any_empty(classes))
            return QueryResult::independent;
        const auto & inst = *instance_;
        const int k = arity();
        const auto cls = class_membership(classes, inst.graph.n);

        std::vector<WeightedEdge> kept;
        for (auto [u, v] : inst.graph.edges)
        {
            if (cls[u] < 0 || cls[v] < 0)
                continue;
            const int cu = inst.colours[u];
            const int cv = inst.colours[v];
            if (cu == cv)
                continue;
            if (!pattern_adj_[static_cast<std::size_t>(d_inverse_[static_cast<std::size_t>(cu)])][static_cast<std::size_t>(d_inverse_[static_cast<std::size_t>(cv)])])
                continue;
            kept.push_back({u, v, 0});
        }
        Adjacency host(inst.graph.n, kept);

        bool found = false;
        std::vector<VertexSet> by_colour(static_cast<std::size_t>(k));
        // sigma maps each colour to the query class that must supply the vertex of that colour.
        for_each_permutation(k, [&](std::span<const int> sigma) {
            bool empty = false;
            for (int c = 0; c < k && !empty; ++c)
            {
                auto & list = by_colour[static_cast<std::size_t>(c)];
                list.clear();
                for (auto v : classes[static_cast<std::size_t>(sigma[static_cast<std::size_t>(c)])])
                    if (inst.colours[v] == c)
                        list.push_back(v);
                empty = list.empty();
            }
            found = !empty && decider_.decide(host, by_colour, inst.pattern, d_);
            return found;
        });
        return found ? QueryResult::has_edge : QueryResult::independent;
    }

    auto colourful_pattern_edges(const PatternInstance & instance, std::span<const int> d) -> std::vector<VertexSet>
    {
        const auto k = static_cast<std::size_t>(instance.arity());
        const auto gadj = instance.graph.adjacency();
        std::vector<VertexSet> by_colour(k);
        for (std::size_t v = 0; v < instance.graph.n; ++v)
            by_colour[static_cast<std::size_t>(instance.colours[v])].push_back(static_cast<Vertex>(v));
        std::vector<VertexSet> out;
        for (const auto & l : by_colour)
            if (l.empty())
                return out;
        // pick[c] is the vertex of colour c.
        std::vector<std::size_t> at(k, 0);
        while (true)
        {
            bool ok = true;
            for (auto [a, b] : instance.pattern.edges)
            {
                auto u = by_colour[static_cast<std::size_t>(d[a])][at[static_cast<std::size_t>(d[a])]];
                auto v = by_colour[static_cast<std::size_t>(d[b])][at[static_cast<std::size_t>(d[b])]];
                if (!gadj[u][v])
                {
                    ok = false;
                    break;
                }
            }
            if (ok)
            {
                VertexSet e;
                for (std::size_t c = 0; c < k; ++c)
                    e.push_back(by_colour[c][at[c]]);
                std::sort(e.begin(), e.end());
                out.push_back(std::move(e));
            }
            std::size_t i = k;
            while (i > 0 && at[i - 1] + 1 == by_colour[i - 1].size())
            {
                at[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
            ++at[i - 1];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    auto colourful_copies_brute_force(const PatternInstance & instance) -> std::uint64_t
    {
        const auto k = static_cast<std::size_t>(instance.arity());
        const auto gadj = instance.graph.adjacency();
        const auto padj = instance.pattern.adjacency();
        const auto n = instance.graph.n;
        std::vector<Vertex> phi(k);
        std::vector<bool> colour_used(k, false);
        std::uint64_t maps = 0;
        auto rec = [&](auto & self, std::size_t a) -> void {
            if (a == k)
            {
                ++maps;
                return;
            }
            for (std::size_t v = 0; v < n; ++v)
            {
                const auto c = static_cast<std::size_t>(instance.colours[v]);
                if (colour_used[c])
                    continue;
                bool ok = true;
                for (std::size_t b = 0; b < a && ok; ++b)
                    if (padj[a][b])
                        ok = gadj[phi[b]][v];
                if (!ok)
                    continue;
                phi[a] = static_cast<Vertex>(v);
                colour_used[c] = true;
                self(self, a + 1);
                colour_used[c] = false;
            }
        };
        rec(rec, 0);
        return maps / automorphism_count(instance.pattern);
    }

    auto automorphism_count(const SimpleGraph & pattern) -> std::uint64_t
    {
        if (pattern.n > 10)
            throw std::invalid_argument("automorphism_count: patterns above 10 vertices are unsupported");
        const auto adj = pattern.adjacency();
        std::uint64_t count = 0;
        for_each_permutation(static_cast<int>(pattern.n), [&](std::span<const int> pi) {
            bool ok = true;
            for (auto [u, v] : pattern.edges)
                if (!adj[static_cast<std::size_t>(pi[u])][static_cast<std::size_t>(pi[v])])
                {
                    ok = false;
                    break;
                }
            count += ok ? 1 : 0;
            return false;
        });
        return count;
    }

    auto all_bijections(int k) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        for_each_permutation(k, [&](std::span<const int> p) {
            out.emplace_back(p.begin(), p.end());
            return false;
        });
        return out;
    }

    auto count_colourful_h(std::shared_ptr<const PatternInstance> instance, double epsilon, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats, const ColourfulDecider & decider) -> double
    {
        instance->validate();
        const int k = instance->arity();
        const auto bijections = all_bijections(k);
        const double per_delta = delta / static_cast<double>(bijections.size());
        double total = 0.0;
        std::uint64_t queries = 0;
        for (const auto & d : bijections)
        {
            ColourfulPatternOracle oracle(instance, d, decider);
            total += count(oracle, epsilon, per_delta, rng, profile, stats);
            queries += oracle.queries();
        }
        stats.oracle_queries += queries;
        return total / static_cast<double>(automorphism_count(instance->pattern));
    }

    // ---- randomized deciders ---------------------------------------------------

    MajorityVoteOracle::MajorityVoteOracle(IndependenceOracle & inner, std::uint64_t reps) : inner_(inner), reps_(reps)
    {
        if (reps % 2 == 0)
            throw std::invalid_argument("majority vote: repetitions must be odd");
    }

    auto MajorityVoteOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        std::uint64_t edge_votes = 0;
        for (std::uint64_t r = 0; r < reps_; ++r)
            if (inner_.query(classes) == QueryResult::has_edge)
                ++edge_votes;
        return 2 * edge_votes > reps_ ? QueryResult::has_edge : QueryResult::independent;
    }

    auto majority_vote_oracle(IndependenceOracle & inner, std::uint64_t reps) -> MajorityVoteOracle
    {
        return MajorityVoteOracle(inner, reps);
    }

    NoisyOracle::NoisyOracle(IndependenceOracle & inner, double flip_probability, std::uint64_t seed)
        : inner_(inner), flip_(flip_probability), rng_(seed)
    {
    }

    auto NoisyOracle::answer(std::span<const ClassView> classes) -> QueryResult
    {
        auto r = inner_.query(classes);
        if (uniform_unit(rng_) < flip_)
            r = r == QueryResult::has_edge ? QueryResult::independent : QueryResult::has_edge;
        return r;
    }
}
