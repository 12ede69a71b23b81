#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cindcount/random.hpp"

#include <cmath>
#include <map>

using namespace cindcount;

TEST_CASE("derive_seed separates streams")
{
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("uniform_below is in range and roughly flat")
{
    Rng rng(1);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 70000; ++i)
        ++hits[uniform_below(rng, 7)];
    for (int h : hits)
        CHECK(std::abs(h - 10000) < 5 * std::sqrt(10000.0 * 6 / 7));
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("uniform_unit lies in [0,1)")
{
    Rng rng(2);
    double sum = 0;
    for (int i = 0; i < 10000; ++i)
    {
        double u = uniform_unit(rng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("random_fixed_subset is a sorted uniform m-subset")
{
    Rng rng(3);
    VertexSet s{2, 3, 5, 7, 11};
    std::map<VertexSet, int> seen;
    for (int i = 0; i < 20000; ++i)
    {
        auto x = random_fixed_subset(rng, s, 2);
        REQUIRE(x.size() == 2);
        REQUIRE(x[0] < x[1]);
        ++seen[x];
    }
    CHECK(seen.size() == 10);
    for (auto & [x, c] : seen)
        CHECK(std::abs(c - 2000) < 5 * std::sqrt(2000.0 * 0.9));
    CHECK_THROWS(random_fixed_subset(rng, s, 6));
}

TEST_CASE("bernoulli_subset inclusion frequency")
{
    Rng rng(4);
    VertexSet s{0};
    for (int j : {0, 1, 3, 6})
    {
        const int trials = 100000;
        int hits = 0;
        for (int i = 0; i < trials; ++i)
            hits += bernoulli_subset(rng, s, j).size();
        const double p = std::ldexp(1.0, -j);
        const double sigma = std::sqrt(trials * p * (1 - p));
        CHECK(std::abs(hits - trials * p) <= 5 * sigma + 1e-9);
    }
    CHECK_THROWS_AS(bernoulli_subset(rng, s, -1), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli_subset(rng, s, 64), std::invalid_argument);
}

TEST_CASE("random_colouring partitions all vertices")
{
    Rng rng(5);
    auto classes = random_colouring(rng, 50, 3);
    REQUIRE(classes.size() == 3);
    std::vector<int> seen(50, 0);
    for (auto & c : classes)
    {
        CHECK(std::is_sorted(c.begin(), c.end()));
        for (auto v : c)
            ++seen[v];
    }
    for (int x : seen)
        CHECK(x == 1);
}
