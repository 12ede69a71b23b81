#pragma once

#include "cindcount/core.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace cindcount
{
    // mt19937_64's output sequence is fixed by the standard; the distributions below are
    // written out by hand because std:: distributions differ between library vendors.
    using Rng = std::mt19937_64;

    /// splitmix64 finaliser.
    auto mix64(std::uint64_t x) noexcept -> std::uint64_t;

    /// Seed for the `index`-th independent stream under `master`.
    auto derive_seed(std::uint64_t master, std::uint64_t index) noexcept -> std::uint64_t;

    /// Uniform integer in [0, bound); bound must be positive.
    auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t;

    /// Uniform double in [0, 1) with 53 random bits.
    auto uniform_unit(Rng & rng) -> double;

    /// Uniformly random m-subset of `s`, returned sorted.
    auto random_fixed_subset(Rng & rng, std::span<const Vertex> s, std::size_t m) -> VertexSet;

    /// Keeps each vertex independently with probability 2^-j (top j bits of a fresh word are zero).
    auto bernoulli_subset(Rng & rng, std::span<const Vertex> s, int j) -> VertexSet;
    void bernoulli_subset_into(Rng & rng, std::span<const Vertex> s, int j, VertexSet & out);

    /// Uniform function V -> [k], as the induced partition of 0..n-1.
    auto random_colouring(Rng & rng, std::size_t n, int k) -> ColourClasses;
}
