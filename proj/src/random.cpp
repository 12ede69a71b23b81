#include "cindcount/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cindcount
{
    auto mix64(std::uint64_t x) noexcept -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto derive_seed(std::uint64_t master, std::uint64_t index) noexcept -> std::uint64_t
    {
        return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
    }

    auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw std::invalid_argument("uniform_below: bound must be positive");
        // Lemire's multiply-and-reject.
        unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound)
        {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold)
            {
                product = static_cast<unsigned __int128>(rng()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    auto uniform_unit(Rng & rng) -> double
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    auto random_fixed_subset(Rng & rng, std::span<const Vertex> s, std::size_t m) -> VertexSet
    {
        if (m > s.size())
            throw std::invalid_argument("random_fixed_subset: m exceeds |S|");
        VertexSet pool(s.begin(), s.end());
        for (std::size_t i = 0; i < m; ++i)
        {
            auto j = i + uniform_below(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(m);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    void bernoulli_subset_into(Rng & rng, std::span<const Vertex> s, int j, VertexSet & out)
    {
        if (j < 0 || j > 63)
            throw std::invalid_argument("bernoulli_subset: exponent must lie in [0, 63]");
        out.clear();
        if (j == 0)
        {
            out.assign(s.begin(), s.end());
            return;
        }
        int shift = 64 - j;
        for (auto v : s)
            if ((rng() >> shift) == 0)
                out.push_back(v);
    }

    auto bernoulli_subset(Rng & rng, std::span<const Vertex> s, int j) -> VertexSet
    {
        VertexSet out;
        bernoulli_subset_into(rng, s, j, out);
        return out;
    }

    auto random_colouring(Rng & rng, std::size_t n, int k) -> ColourClasses
    {
        ColourClasses classes(static_cast<std::size_t>(k));
        for (std::size_t v = 0; v < n; ++v)
            classes[uniform_below(rng, static_cast<std::uint64_t>(k))].push_back(static_cast<Vertex>(v));
        return classes;
    }
}
