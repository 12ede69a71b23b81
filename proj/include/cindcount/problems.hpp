#pragma once

#include "cindcount/core.hpp"
#include "cindcount/profile.hpp"
#include "cindcount/random.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cindcount
{
    using Int128 = __int128;

    class EncodingOverflow : public std::overflow_error
    {
    public:
        using std::overflow_error::overflow_error;
    };

    // ---- k-SUM ----------------------------------------------------------------

    struct KSumInstance
    {
        int k = 3;
        std::vector<std::int64_t> values;

        /// Throws std::invalid_argument on k < 3 or repeated values, EncodingOverflow when the
        /// encoded values do not fit 128 bits.
        void validate() const;
        auto operator==(const KSumInstance &) const -> bool = default;
    };

    /// f_i(x) for the class index 1 <= i <= k.
    auto ksum_encode(int i, int k, std::int64_t x) -> Int128;

    struct KSumDecider
    {
        std::string name;
        std::function<bool(std::span<const Int128> values, int k)> decide;
        double failure_probability = 0.0;
    };

    auto ksum_decide_brute(std::span<const Int128> values, int k) -> bool;
    auto ksum_decide_meet_in_middle(std::span<const Int128> values, int k) -> bool;
    auto ksum_brute_force_decider() -> KSumDecider;
    auto ksum_meet_in_middle_decider() -> KSumDecider;

    /// Vertices are indices into values; edges are zero-sum k-subsets.
    class KSumOracle final : public IndependenceOracle
    {
    public:
        KSumOracle(std::shared_ptr<const KSumInstance> instance, KSumDecider decider);

        auto vertex_count() const -> std::size_t override { return instance_->values.size(); }
        auto arity() const -> int override { return instance_->k; }
        auto failure_probability() const -> double override { return decider_.failure_probability; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        std::shared_ptr<const KSumInstance> instance_;
        KSumDecider decider_;
        std::vector<std::vector<Int128>> encoded_;   // encoded_[i][v] = f_{i+1}(values[v])
    };

    /// Zero-sum k-subsets of indices, sorted.
    auto ksum_witnesses(const KSumInstance & instance) -> std::vector<VertexSet>;

    // ---- k-OV -----------------------------------------------------------------

    using BitVector = std::vector<std::uint64_t>;

    struct KovInstance
    {
        std::size_t dimension = 0;
        std::vector<std::vector<BitVector>> sets;   // k lists of packed D-bit vectors

        auto arity() const -> int { return static_cast<int>(sets.size()); }
        auto vertex_count() const -> std::size_t;
        void validate() const;

        /// Parses a '0'/'1' string of length D into packed words.
        static auto pack(const std::string & bits, std::size_t dimension) -> BitVector;
        static auto unpack(const BitVector & v, std::size_t dimension) -> std::string;
        auto operator==(const KovInstance &) const -> bool = default;
    };

    /// True when no coordinate is 1 in every vector.
    auto kov_orthogonal(std::span<const BitVector * const> vectors) -> bool;

    struct KovDecider
    {
        std::string name;
        /// One list per natural class; Yes iff some tuple with one vector from each list is orthogonal.
        std::function<bool(const std::vector<std::vector<const BitVector *>> & lists)> decide;
        double failure_probability = 0.0;
    };

    auto kov_brute_force_decider() -> KovDecider;

    /// Vertices are (class i, index j) flattened class-major.
    class KovOracle final : public IndependenceOracle
    {
    public:
        KovOracle(std::shared_ptr<const KovInstance> instance, KovDecider decider);

        auto vertex_count() const -> std::size_t override { return owner_.size(); }
        auto arity() const -> int override { return instance_->arity(); }
        auto failure_probability() const -> double override { return decider_.failure_probability; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        std::shared_ptr<const KovInstance> instance_;
        KovDecider decider_;
        std::vector<int> owner_;
        std::vector<const BitVector *> vector_of_;
    };

    auto kov_witnesses(const KovInstance & instance) -> std::vector<VertexSet>;

    // ---- simple graphs -------------------------------------------------------

    struct WeightedEdge
    {
        Vertex u = 0;
        Vertex v = 0;
        std::int64_t w = 0;
        auto operator==(const WeightedEdge &) const -> bool = default;
    };

    struct WeightedGraph
    {
        std::size_t n = 0;
        std::int64_t max_weight = 0;   // |w| <= max_weight; 0 means unchecked
        std::vector<WeightedEdge> edges;

        void validate() const;
        auto operator==(const WeightedGraph &) const -> bool = default;
    };

    /// Sorted adjacency with weights, for O(log d) edge lookup.
    class Adjacency
    {
    public:
        Adjacency() = default;
        Adjacency(std::size_t n, std::span<const WeightedEdge> edges);

        auto weight(Vertex u, Vertex v) const -> std::optional<std::int64_t>;
        auto adjacent(Vertex u, Vertex v) const -> bool { return weight(u, v).has_value(); }
        auto neighbours(Vertex u) const -> std::span<const std::pair<Vertex, std::int64_t>> { return adj_[u]; }
        auto vertex_count() const -> std::size_t { return adj_.size(); }

    private:
        std::vector<std::vector<std::pair<Vertex, std::int64_t>>> adj_;
    };

    struct CliqueDecider
    {
        std::string name;
        /// Yes iff some k-clique with one vertex per class has total edge weight 0. The graph
        /// holds only edges between different classes.
        std::function<bool(const Adjacency & graph, std::span<const ClassView> classes)> decide;
        double failure_probability = 0.0;
    };

    auto clique_brute_force_decider() -> CliqueDecider;

    class ExactWeightCliqueOracle final : public IndependenceOracle
    {
    public:
        ExactWeightCliqueOracle(std::shared_ptr<const WeightedGraph> graph, int k, CliqueDecider decider);

        auto vertex_count() const -> std::size_t override { return graph_->n; }
        auto arity() const -> int override { return k_; }
        auto failure_probability() const -> double override { return decider_.failure_probability; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        std::shared_ptr<const WeightedGraph> graph_;
        int k_;
        CliqueDecider decider_;
        Adjacency full_;
    };

    /// Zero-weight k-cliques, each as a sorted vertex set.
    auto zero_weight_cliques(const WeightedGraph & graph, int k) -> std::vector<VertexSet>;

    // ---- colourful subgraphs ---------------------------------------------------

    struct SimpleGraph
    {
        std::size_t n = 0;
        std::vector<std::pair<Vertex, Vertex>> edges;

        void validate() const;
        auto adjacency() const -> std::vector<std::vector<bool>>;
        auto operator==(const SimpleGraph &) const -> bool = default;
    };

    struct PatternInstance
    {
        SimpleGraph graph;
        std::vector<int> colours;   // colours[v] in [0, k)
        SimpleGraph pattern;        // on k vertices

        auto arity() const -> int { return static_cast<int>(pattern.n); }
        void validate() const;
        auto operator==(const PatternInstance &) const -> bool = default;
    };

    struct ColourfulDecider
    {
        std::string name;
        /// Yes iff there are v_c in by_colour[c] (one per colour c) with v_{d(a)} ~ v_{d(b)} in `host`
        /// for every pattern edge ab.
        std::function<bool(const Adjacency & host, const std::vector<VertexSet> & by_colour, const SimpleGraph & pattern,
            std::span<const int> d)> decide;
        double failure_probability = 0.0;
    };

    auto colourful_brute_force_decider() -> ColourfulDecider;

    /// Oracle for G_d: edges are colourful k-sets whose vertex of colour d(a) plays pattern vertex a.
    class ColourfulPatternOracle final : public IndependenceOracle
    {
    public:
        ColourfulPatternOracle(std::shared_ptr<const PatternInstance> instance, std::vector<int> d, ColourfulDecider decider);

        auto vertex_count() const -> std::size_t override { return instance_->graph.n; }
        auto arity() const -> int override { return instance_->arity(); }
        auto failure_probability() const -> double override { return decider_.failure_probability; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        std::shared_ptr<const PatternInstance> instance_;
        std::vector<int> d_;
        std::vector<int> d_inverse_;
        ColourfulDecider decider_;
        std::vector<std::vector<bool>> pattern_adj_;
    };

    /// Edge set of G_d by direct definition.
    auto colourful_pattern_edges(const PatternInstance & instance, std::span<const int> d) -> std::vector<VertexSet>;

    /// Number of colourful copies of the pattern, by enumerating injective colour-respecting maps.
    auto colourful_copies_brute_force(const PatternInstance & instance) -> std::uint64_t;

    auto automorphism_count(const SimpleGraph & pattern) -> std::uint64_t;

    /// All bijections V(H) -> [k] in lexicographic order.
    auto all_bijections(int k) -> std::vector<std::vector<int>>;

    /// Sum over bijections d of count(G_d, eps, delta/k!), divided by |Aut(H)|.
    auto count_colourful_h(std::shared_ptr<const PatternInstance> instance, double epsilon, double delta, Rng & rng,
        const ConstantsProfile & profile, RunStats & stats, const ColourfulDecider & decider) -> double;

    // ---- randomized deciders ---------------------------------------------------

    /// Answers by majority over `reps` inner queries.
    class MajorityVoteOracle final : public IndependenceOracle
    {
    public:
        MajorityVoteOracle(IndependenceOracle & inner, std::uint64_t reps);

        auto vertex_count() const -> std::size_t override { return inner_.vertex_count(); }
        auto arity() const -> int override { return inner_.arity(); }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        IndependenceOracle & inner_;
        std::uint64_t reps_;
    };

    auto majority_vote_oracle(IndependenceOracle & inner, std::uint64_t reps) -> MajorityVoteOracle;

    /// Test stub: flips each answer of `inner` with the given probability.
    class NoisyOracle final : public IndependenceOracle
    {
    public:
        NoisyOracle(IndependenceOracle & inner, double flip_probability, std::uint64_t seed);

        auto vertex_count() const -> std::size_t override { return inner_.vertex_count(); }
        auto arity() const -> int override { return inner_.arity(); }
        auto failure_probability() const -> double override { return flip_; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        IndependenceOracle & inner_;
        double flip_;
        Rng rng_;
    };
}
