#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cindcount/count.hpp"
#include "cindcount/problems.hpp"
#include "support.hpp"

#include <cmath>
#include <numeric>
#include <set>

using namespace cindcount;
using namespace testing;

namespace
{
    auto random_classes_over(Rng & rng, std::size_t n, int k) -> ColourClasses { return random_classes(rng, n, k); }

    /// Some witness has exactly one vertex in each class.
    auto colourful_witness(const std::vector<VertexSet> & witnesses, const ColourClasses & classes) -> bool
    {
        std::vector<VertexSet> as_edges = witnesses;
        std::size_t n = 0;
        for (const auto & c : classes)
            for (auto v : c)
                n = std::max<std::size_t>(n, v + 1);
        for (const auto & w : witnesses)
            for (auto v : w)
                n = std::max<std::size_t>(n, v + 1);
        Hypergraph g(n, static_cast<int>(classes.size()), as_edges);
        return brute_cind(g, classes);
    }

    auto random_ksum(Rng & rng, int k, std::size_t size, std::int64_t range) -> KSumInstance
    {
        std::set<std::int64_t> vals;
        while (vals.size() < size)
            vals.insert(static_cast<std::int64_t>(uniform_below(rng, 2 * range + 1)) - range);
        KSumInstance inst{k, std::vector<std::int64_t>(vals.begin(), vals.end())};
        // Shuffle so indices are not sorted by value.
        for (std::size_t i = inst.values.size(); i > 1; --i)
            std::swap(inst.values[i - 1], inst.values[uniform_below(rng, i)]);
        return inst;
    }

    auto random_kov(Rng & rng, int k, std::size_t d) -> KovInstance
    {
        KovInstance inst;
        inst.dimension = d;
        for (int i = 0; i < k; ++i)
        {
            std::vector<BitVector> list;
            const auto size = 1 + uniform_below(rng, 4);
            for (std::uint64_t j = 0; j < size; ++j)
            {
                std::string bits(d, '0');
                for (auto & c : bits)
                    c = uniform_below(rng, 3) == 0 ? '1' : '0';
                list.push_back(KovInstance::pack(bits, d));
            }
            inst.sets.push_back(std::move(list));
        }
        return inst;
    }

    auto random_weighted(Rng & rng, std::size_t n, double p, std::int64_t w) -> WeightedGraph
    {
        WeightedGraph g;
        g.n = n;
        g.max_weight = w;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (uniform_unit(rng) < p)
                    g.edges.push_back({a, b, static_cast<std::int64_t>(uniform_below(rng, 2 * w + 1)) - w});
        return g;
    }

    auto random_simple(Rng & rng, std::size_t n, double p) -> SimpleGraph
    {
        SimpleGraph g;
        g.n = n;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (uniform_unit(rng) < p)
                    g.edges.emplace_back(a, b);
        return g;
    }

    auto path3() -> SimpleGraph { return SimpleGraph{3, {{0, 1}, {1, 2}}}; }

    auto random_pattern_instance(Rng & rng, std::size_t n, const SimpleGraph & h) -> PatternInstance
    {
        PatternInstance inst;
        inst.graph = random_simple(rng, n, 0.4);
        inst.pattern = h;
        for (std::size_t v = 0; v < n; ++v)
            inst.colours.push_back(static_cast<int>(uniform_below(rng, h.n)));
        return inst;
    }
}

TEST_CASE("ksum encoding values")
{
    CHECK(ksum_encode(1, 3, 0) == 1);
    CHECK(ksum_encode(2, 3, 0) == 4);
    CHECK(ksum_encode(3, 3, 0) == -5);
    CHECK(ksum_encode(1, 3, 2) == 129);
    CHECK_THROWS_AS(ksum_encode(0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(ksum_encode(1, 30, std::numeric_limits<std::int64_t>::max()), EncodingOverflow);
}

TEST_CASE("ksum encoding preserves zero sums across classes")
{
    Rng rng(1);
    for (int rep = 0; rep < 50; ++rep)
    {
        const int k = 3 + static_cast<int>(uniform_below(rng, 3));
        std::vector<std::int64_t> x(static_cast<std::size_t>(k));
        std::int64_t total = 0;
        for (int i = 0; i + 1 < k; ++i)
        {
            x[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(uniform_below(rng, 21)) - 10;
            total += x[static_cast<std::size_t>(i)];
        }
        x.back() = rep % 2 == 0 ? -total : -total + 1;
        Int128 enc = 0;
        for (int i = 0; i < k; ++i)
            enc += ksum_encode(i + 1, k, x[static_cast<std::size_t>(i)]);
        CHECK((enc == 0) == (rep % 2 == 0));
    }
}

TEST_CASE("ksum low digits are nonzero when a class repeats")
{
    Rng rng(2);
    for (int rep = 0; rep < 500; ++rep)
    {
        const int k = 3 + static_cast<int>(uniform_below(rng, 3));
        std::vector<int> cls(static_cast<std::size_t>(k));
        for (auto & c : cls)
            c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        std::set<int> distinct(cls.begin(), cls.end());
        if (distinct.size() == cls.size())
            continue;
        Int128 base = 1;
        for (int i = 0; i < k; ++i)
            base *= k + 1;
        Int128 sum = 0;
        for (int c : cls)
            sum += ksum_encode(c, k, static_cast<std::int64_t>(uniform_below(rng, 2001)) - 1000);
        CHECK(((sum % base) + base) % base != 0);
    }
}

TEST_CASE("ksum deciders")
{
    auto enc = [](std::vector<std::int64_t> v) {
        std::vector<Int128> out(v.begin(), v.end());
        return out;
    };
    CHECK_FALSE(ksum_decide_brute(enc({1, 2, 3}), 3));
    CHECK(ksum_decide_brute(enc({-3, 1, 2}), 3));
    CHECK_FALSE(ksum_decide_meet_in_middle(enc({1, 2, 3}), 3));
    CHECK(ksum_decide_meet_in_middle(enc({-3, 1, 2}), 3));
    // A pair summing to zero must not be reused with itself.
    CHECK_FALSE(ksum_decide_meet_in_middle(enc({-2, 1, 5}), 3));
    Rng rng(3);
    int yes = 0;
    for (int rep = 0; rep < 100; ++rep)
    {
        const int k = 3 + static_cast<int>(uniform_below(rng, 2));
        auto inst = random_ksum(rng, k, 20, 1000);
        std::vector<Int128> v(inst.values.begin(), inst.values.end());
        const bool a = ksum_decide_brute(v, k);
        CHECK(a == ksum_decide_meet_in_middle(v, k));
        yes += a;
    }
    CHECK(yes > 0);
    CHECK(yes < 100);
}

TEST_CASE("ksum oracle basics")
{
    auto inst = std::make_shared<const KSumInstance>(KSumInstance{3, {-1, 1, 0}});
    KSumOracle o(inst, ksum_brute_force_decider());
    CHECK(o.query(ColourClasses{{0}, {1}, {2}}) == QueryResult::has_edge);
    CHECK(o.query(ColourClasses{{2}, {0}, {1}}) == QueryResult::has_edge);
    CHECK(o.query(ColourClasses{{0, 1}, {}, {2}}) == QueryResult::independent);
    CHECK_THROWS_AS(KSumInstance({3, {1, 1, 2}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(KSumInstance({2, {1, 2}}).validate(), std::invalid_argument);
}

TEST_CASE("ksum oracle matches colourful witnesses")
{
    Rng rng(4);
    for (int rep = 0; rep < 30; ++rep)
    {
        const int k = 3 + static_cast<int>(uniform_below(rng, 2));
        auto inst = std::make_shared<const KSumInstance>(random_ksum(rng, k, 6 + uniform_below(rng, 6), 15));
        const auto witnesses = ksum_witnesses(*inst);
        KSumOracle o(inst, rep % 2 ? ksum_brute_force_decider() : ksum_meet_in_middle_decider());
        for (int q = 0; q < 200; ++q)
        {
            auto classes = random_classes_over(rng, inst->values.size(), k);
            CHECK((o.query(classes) == QueryResult::has_edge) == colourful_witness(witnesses, classes));
        }
        CHECK(enumerate_edges_within(o, all_vertices(inst->values.size())) == witnesses);
    }
}

TEST_CASE("kov oracle basics")
{
    auto inst = std::make_shared<KovInstance>();
    inst->dimension = 2;
    inst->sets = {{KovInstance::pack("10", 2)}, {KovInstance::pack("01", 2)}};
    KovOracle o(inst, kov_brute_force_decider());
    CHECK(o.query(ColourClasses{{0}, {1}}) == QueryResult::has_edge);
    CHECK(o.query(ColourClasses{{1}, {0}}) == QueryResult::has_edge);
    CHECK(o.query(ColourClasses{{0, 1}, {}}) == QueryResult::independent);
    auto other = std::make_shared<KovInstance>(*inst);
    other->sets[0][0] = KovInstance::pack("11", 2);
    KovOracle p(other, kov_brute_force_decider());
    CHECK(p.query(ColourClasses{{0}, {1}}) == QueryResult::independent);
    CHECK_THROWS(KovInstance::pack("102", 3));
    CHECK(KovInstance::unpack(KovInstance::pack("0110", 4), 4) == "0110");
}

TEST_CASE("kov oracle matches brute-force witnesses")
{
    Rng rng(5);
    for (int rep = 0; rep < 30; ++rep)
    {
        const int k = 2 + static_cast<int>(uniform_below(rng, 2));
        auto inst = std::make_shared<const KovInstance>(random_kov(rng, k, 1 + uniform_below(rng, 8)));
        KovOracle o(inst, kov_brute_force_decider());
        const auto witnesses = kov_witnesses(*inst);
        CHECK(enumerate_edges_within(o, all_vertices(inst->vertex_count())) == witnesses);
        for (int q = 0; q < 50; ++q)
        {
            auto classes = random_classes_over(rng, inst->vertex_count(), k);
            const bool edge = o.query(classes) == QueryResult::has_edge;
            CHECK(edge == colourful_witness(witnesses, classes));
            for (const auto & c : classes)
                if (c.empty())
                    CHECK_FALSE(edge);
        }
    }
}

TEST_CASE("exact-weight triangle")
{
    auto zero = std::make_shared<const WeightedGraph>(WeightedGraph{3, 0, {{0, 1, 2}, {1, 2, -5}, {0, 2, 3}}});
    ExactWeightCliqueOracle o(zero, 3, clique_brute_force_decider());
    CHECK(o.query(ColourClasses{{0}, {1}, {2}}) == QueryResult::has_edge);
    auto five = std::make_shared<const WeightedGraph>(WeightedGraph{3, 0, {{0, 1, 2}, {1, 2, 0}, {0, 2, 3}}});
    ExactWeightCliqueOracle p(five, 3, clique_brute_force_decider());
    CHECK(p.query(ColourClasses{{0}, {1}, {2}}) == QueryResult::independent);
    CHECK_THROWS_AS(WeightedGraph({3, 1, {{0, 1, 2}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph({3, 0, {{0, 1, 2}, {1, 0, 2}}}).validate(), std::invalid_argument);
}

TEST_CASE("exact-weight clique count equals brute force")
{
    Rng rng(6);
    for (int rep = 0; rep < 20; ++rep)
    {
        const int k = 3 + static_cast<int>(uniform_below(rng, 2));
        auto g = std::make_shared<const WeightedGraph>(random_weighted(rng, 6 + uniform_below(rng, 7), 0.7, 3));
        ExactWeightCliqueOracle o(g, k, clique_brute_force_decider());
        const auto witnesses = zero_weight_cliques(*g, k);
        CHECK(enumerate_edges_within(o, all_vertices(g->n)) == witnesses);
        RunStats stats;
        CHECK(count(o, 0.3, 0.2, rng, ConstantsProfile::light(), stats) == static_cast<double>(witnesses.size()));
    }
}

TEST_CASE("colourful pattern oracle basics")
{
    PatternInstance inst{SimpleGraph{2, {{0, 1}}}, {0, 1}, SimpleGraph{2, {{0, 1}}}};
    auto shared = std::make_shared<const PatternInstance>(inst);
    ColourfulPatternOracle o(shared, {0, 1}, colourful_brute_force_decider());
    CHECK(o.query(ColourClasses{{0}, {1}}) == QueryResult::has_edge);
    CHECK_THROWS_AS(ColourfulPatternOracle(shared, {0, 0}, colourful_brute_force_decider()), std::invalid_argument);

    // Colours 0 and 2 have no host edges between them, but d puts pattern edge 0-1 on them.
    PatternInstance path{SimpleGraph{3, {{0, 1}, {1, 2}}}, {0, 1, 2}, path3()};
    ColourfulPatternOracle p(std::make_shared<const PatternInstance>(path), {0, 2, 1}, colourful_brute_force_decider());
    CHECK(p.query(ColourClasses{{0}, {1}, {2}}) == QueryResult::independent);
}

TEST_CASE("colourful oracle edges match the definition for every d")
{
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep)
    {
        auto inst = std::make_shared<const PatternInstance>(random_pattern_instance(rng, 5 + uniform_below(rng, 6), path3()));
        for (const auto & d : all_bijections(3))
        {
            ColourfulPatternOracle o(inst, d, colourful_brute_force_decider());
            CHECK(enumerate_edges_within(o, all_vertices(inst->graph.n)) == colourful_pattern_edges(*inst, d));
        }
    }
}

TEST_CASE("automorphisms")
{
    CHECK(automorphism_count(SimpleGraph{3, {{0, 1}, {1, 2}, {0, 2}}}) == 6);
    CHECK(automorphism_count(path3()) == 2);
    CHECK(automorphism_count(SimpleGraph{2, {{0, 1}}}) == 2);
    CHECK_THROWS(automorphism_count(SimpleGraph{11, {}}));
    Rng rng(8);
    for (int rep = 0; rep < 30; ++rep)
    {
        auto h = random_simple(rng, 2 + uniform_below(rng, 5), 0.5);
        const auto adj = h.adjacency();
        std::vector<int> perm(h.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t expected = 0;
        do
        {
            bool ok = true;
            for (std::size_t a = 0; a < h.n; ++a)
                for (std::size_t b = 0; b < h.n; ++b)
                    ok = ok && adj[a][b] == adj[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])];
            expected += ok;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(automorphism_count(h) == expected);
    }
}

TEST_CASE("count_colourful_h")
{
    Rng rng(9);
    RunStats stats;
    PatternInstance edge{SimpleGraph{2, {{0, 1}}}, {0, 1}, SimpleGraph{2, {{0, 1}}}};
    CHECK(count_colourful_h(std::make_shared<const PatternInstance>(edge), 0.3, 0.2, rng, ConstantsProfile::light(), stats,
              colourful_brute_force_decider())
        == 1.0);
    PatternInstance none{SimpleGraph{3, {{0, 1}}}, {0, 0, 1}, SimpleGraph{2, {{0, 1}}}};
    CHECK(count_colourful_h(std::make_shared<const PatternInstance>(none), 0.3, 0.2, rng, ConstantsProfile::light(), stats,
              colourful_brute_force_decider())
        == 0.0);
    int ok = 0;
    for (int rep = 0; rep < 50; ++rep)
    {
        auto inst = std::make_shared<const PatternInstance>(random_pattern_instance(rng, 4 + uniform_below(rng, 9), path3()));
        const double truth = static_cast<double>(colourful_copies_brute_force(*inst));
        const double est = count_colourful_h(inst, 0.3, 0.2, rng, ConstantsProfile::light(), stats, colourful_brute_force_decider());
        CHECK(std::abs(est - std::round(est)) < 1e-6);
        ok += truth == 0 ? est == 0 : std::abs(est - truth) < 0.3 * truth;
    }
    CHECK(ok >= 38);
}

TEST_CASE("majority vote")
{
    auto g = complete_graph(4);
    HypergraphOracle inner(g);
    CHECK_THROWS_AS(MajorityVoteOracle(inner, 4), std::invalid_argument);
    MajorityVoteOracle exact(inner, 3);
    CHECK(exact.query(ColourClasses{{0}, {1}}) == QueryResult::has_edge);
    CHECK(exact.query(ColourClasses{{0, 1}, {}}) == QueryResult::independent);
    CHECK(inner.queries() == 6);

    HypergraphOracle base(g);
    NoisyOracle noisy(base, 0.3, 77);
    MajorityVoteOracle vote(noisy, 21);
    int wrong = 0;
    for (int q = 0; q < 1000; ++q)
        wrong += vote.query(ColourClasses{{0}, {1}}) != QueryResult::has_edge;
    CHECK(wrong <= 50);
    CHECK(noisy.queries() == 21000);
}
