#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cindcount/coarse.hpp"
#include "support.hpp"

#include <cmath>

using namespace cindcount;
using namespace testing;

namespace
{
    auto complete_bipartite(std::size_t half) -> std::shared_ptr<const Hypergraph>
    {
        std::vector<VertexSet> edges;
        for (Vertex a = 0; a < half; ++a)
            for (Vertex b = 0; b < half; ++b)
                edges.push_back({a, static_cast<Vertex>(half + b)});
        return std::make_shared<const Hypergraph>(2 * half, 2, edges);
    }

    auto halves(std::size_t n) -> ColourClasses
    {
        ColourClasses c(2);
        for (Vertex v = 0; v < n; ++v)
            c[v < n / 2 ? 0 : 1].push_back(v);
        return c;
    }
}

TEST_CASE("params follow the formulas")
{
    auto p = CoarseParams::make(16, 2, ConstantsProfile::paper());
    CHECK(p.log_n == 4);
    CHECK(p.p_out == doctest::Approx(1.0 / 4096));
    CHECK(p.repetitions == static_cast<std::uint64_t>(std::ceil(48 * std::log(48.0) * 4096)));
    CHECK(p.gamma == doctest::Approx(1.0 / 4096 / (2 * 64)));
    CHECK(p.b == doctest::Approx(1024));
    CHECK(p.scale == doctest::Approx(std::sqrt(1.0 / 4096 / (2 * 4 * 16))));
    auto light = CoarseParams::make(16, 2, ConstantsProfile::light());
    CHECK(light.repetitions == static_cast<std::uint64_t>(std::ceil(p.repetitions * 1e-4)));
    CHECK_THROWS_AS(CoarseParams::make(12, 2, ConstantsProfile::paper()), std::invalid_argument);
}

TEST_CASE("verify_guess trivial cases")
{
    Rng rng(1);
    RunStats stats;
    auto empty = std::make_shared<const Hypergraph>(16, 2, std::vector<VertexSet>{});
    HypergraphOracle eo(empty);
    auto one = std::make_shared<const Hypergraph>(16, 2, std::vector<VertexSet>{{0, 8}});
    HypergraphOracle oo(one);
    for (int i = 0; i < 100; ++i)
    {
        CHECK_FALSE(verify_guess(eo, 1, halves(16), rng, stats));
        CHECK(verify_guess(oo, 1, halves(16), rng, stats));
    }
    CHECK_THROWS_AS(verify_guess(oo, 3, halves(16), rng, stats), std::invalid_argument);
}

TEST_CASE("verify_guess completeness on complete bipartite graph")
{
    auto g = complete_bipartite(8);
    HypergraphOracle o(g);
    Rng rng(2);
    RunStats stats;
    const int runs = 100000;
    int yes = 0;
    for (int i = 0; i < runs; ++i)
        yes += verify_guess(o, 64, halves(16), rng, stats);
    const double p_out = CoarseParams::make(16, 2, ConstantsProfile::paper()).p_out;
    CHECK(static_cast<double>(yes) / runs >= p_out);
}

TEST_CASE("colour_coarse output shape and query bound")
{
    Rng rng(3);
    const auto profile = ConstantsProfile::light();
    const auto params = CoarseParams::make(16, 2, profile);
    auto empty = std::make_shared<const Hypergraph>(16, 2, std::vector<VertexSet>{});
    HypergraphOracle eo(empty);
    RunStats stats;
    CHECK(colour_coarse(eo, halves(16), rng, profile, stats) == 0.0);
    CHECK(eo.queries() == 1);

    auto g = random_hypergraph(rng, 16, 2, 40);
    const double bound = std::pow(2 * 4 + 1, 3) * static_cast<double>(params.repetitions) + 1;
    for (auto p : {ConstantsProfile::light(), ConstantsProfile::from_json(nlohmann::json{{"base", "light"}, {"colour_coarse_early_exit", false}})})
        for (int i = 0; i < 30; ++i)
        {
            HypergraphOracle o(g);
            auto classes = random_colouring(rng, 16, 2);
            const double out = colour_coarse(o, classes, rng, p, stats);
            CHECK(static_cast<double>(o.queries()) <= bound);
            CHECK((out == 0.0) == !brute_cind(*g, classes));
            if (out > 0)
            {
                const double m = out / params.scale;
                CHECK(std::abs(m - std::exp2(std::round(std::log2(m)))) < 1e-6 * m);
                CHECK(m <= 256.0 + 1e-9);
            }
        }
}

TEST_CASE("colour_coarse on a single colourful edge")
{
    auto g = std::make_shared<const Hypergraph>(16, 2, std::vector<VertexSet>{{3, 12}});
    const auto profile = ConstantsProfile::light();
    const auto params = CoarseParams::make(16, 2, profile);
    Rng rng(4);
    int ok = 0;
    for (int i = 0; i < 200; ++i)
    {
        HypergraphOracle o(g);
        RunStats stats;
        const double out = colour_coarse(o, halves(16), rng, profile, stats);
        ok += out >= 1.0 / params.b && out <= params.b;
    }
    CHECK(ok >= 134);
}

TEST_CASE("helper_coarse and coarse on K8")
{
    auto g = complete_graph(8);
    const auto profile = ConstantsProfile::light();
    const double factor = 2 * CoarseParams::make(8, 2, profile).b;
    Rng rng(5);
    int helper_ok = 0;
    int coarse_ok = 0;
    for (int i = 0; i < 100; ++i)
    {
        HypergraphOracle o(g);
        RunStats stats;
        const double h = helper_coarse(o, rng, profile, stats);
        CHECK(h >= 0.0);
        helper_ok += h >= 28 / factor && h <= 28 * factor;
        const double c = coarse(o, 0.2, rng, profile, stats);
        coarse_ok += c >= 28 / factor && c <= 28 * factor;
    }
    CHECK(helper_ok >= 67);
    CHECK(coarse_ok >= 70);
}

TEST_CASE("coarse on an edgeless graph is zero")
{
    auto empty = std::make_shared<const Hypergraph>(8, 3, std::vector<VertexSet>{});
    HypergraphOracle o(empty);
    Rng rng(6);
    RunStats stats;
    CHECK(helper_coarse(o, rng, ConstantsProfile::light(), stats) == 0.0);
    CHECK(coarse(o, 0.1, rng, ConstantsProfile::light(), stats) == 0.0);
    CHECK_THROWS_AS(coarse(o, 1.0, rng, ConstantsProfile::light(), stats), std::invalid_argument);
    CHECK_THROWS_AS(coarse(o, 0.0, rng, ConstantsProfile::light(), stats), std::invalid_argument);
}

TEST_CASE("coarse is deterministic under a seed")
{
    Rng gen(7);
    auto g = random_hypergraph(gen, 32, 2, 100);
    auto once = [&] {
        HypergraphOracle o(g);
        Rng rng(42);
        RunStats stats;
        return coarse(o, 0.2, rng, ConstantsProfile::light(), stats);
    };
    CHECK(once() == once());
}

TEST_CASE("lower median")
{
    CHECK(lower_median({}) == 0.0);
    CHECK(lower_median({3, 1, 2}) == 2.0);
    CHECK(lower_median({4, 1, 3, 2}) == 2.0);
}
