#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cindcount
{
    using Vertex = std::uint32_t;

    /// Sorted, duplicate-free list of vertices.
    using VertexSet = std::vector<Vertex>;

    using ClassView = std::span<const Vertex>;

    /// An ordered tuple of k pairwise-disjoint vertex subsets.
    using ColourClasses = std::vector<VertexSet>;

    enum class QueryResult : bool
    {
        independent = false,
        has_edge = true
    };

    /// Raised when a resource cap (query budget) is exhausted mid-run.
    class BudgetExhausted : public std::runtime_error
    {
    public:
        BudgetExhausted(const void * source, const std::string & what) : std::runtime_error(what), source_(source) {}

        /// The budgeted oracle that ran out.
        auto source() const noexcept -> const void * { return source_; }

    private:
        const void * source_;
    };

    /// Explicit k-uniform hypergraph on vertices 0..n-1.
    class Hypergraph
    {
    public:
        /// Edges are normalised (each sorted, list sorted). Throws std::invalid_argument
        /// on arity mismatch, repeated or out-of-range vertices, or duplicate edges.
        Hypergraph(std::size_t n, int k, std::vector<VertexSet> edges);

        auto vertex_count() const noexcept -> std::size_t { return n_; }
        auto arity() const noexcept -> int { return k_; }
        auto edges() const noexcept -> const std::vector<VertexSet> & { return edges_; }
        auto edge_count() const noexcept -> std::size_t { return edges_.size(); }

        /// Indices into edges() of the edges containing v.
        auto incident(Vertex v) const -> std::span<const std::uint32_t> { return incidence_[v]; }

        auto contains_edge(std::span<const Vertex> sorted_edge) const -> bool;

    private:
        std::size_t n_;
        int k_;
        std::vector<VertexSet> edges_;
        std::vector<std::vector<std::uint32_t>> incidence_;
    };

    /// Coloured independence oracle over vertices 0..vertex_count()-1.
    ///
    /// Oracle objects are per-run handles: query() bumps a plain counter. The data an
    /// oracle answers from (hypergraphs, problem instances) is immutable and shared.
    class IndependenceOracle
    {
    public:
        virtual ~IndependenceOracle() = default;

        virtual auto vertex_count() const -> std::size_t = 0;
        virtual auto arity() const -> int = 0;

        /// Probability that a single answer is wrong; 0 for exact oracles.
        virtual auto failure_probability() const -> double { return 0.0; }

        auto query(std::span<const ClassView> classes) -> QueryResult;
        auto query(const ColourClasses & classes) -> QueryResult;

        auto queries() const noexcept -> std::uint64_t { return queries_; }

    protected:
        virtual auto answer(std::span<const ClassView> classes) -> QueryResult = 0;

    private:
        std::uint64_t queries_ = 0;
    };

    /// Exact oracle backed by an explicit hypergraph.
    class HypergraphOracle final : public IndependenceOracle
    {
    public:
        explicit HypergraphOracle(std::shared_ptr<const Hypergraph> graph);

        auto vertex_count() const -> std::size_t override { return graph_->vertex_count(); }
        auto arity() const -> int override { return graph_->arity(); }
        auto graph() const -> const Hypergraph & { return *graph_; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        std::shared_ptr<const Hypergraph> graph_;
        std::vector<std::uint8_t> colour_of_;
    };

    /// Declares a power-of-two vertex count; the extra vertices are isolated.
    class PaddedOracle final : public IndependenceOracle
    {
    public:
        explicit PaddedOracle(IndependenceOracle & inner);

        auto vertex_count() const -> std::size_t override { return padded_n_; }
        auto arity() const -> int override { return inner_.arity(); }
        auto failure_probability() const -> double override { return inner_.failure_probability(); }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        IndependenceOracle & inner_;
        std::size_t padded_n_;
        std::vector<VertexSet> scratch_;
    };

    /// Oracle for the induced subhypergraph G[S], relabelled to 0..|S|-1.
    /// Views of views collapse onto the underlying oracle.
    class InducedOracle final : public IndependenceOracle
    {
    public:
        InducedOracle(IndependenceOracle & parent, std::span<const Vertex> subset);

        auto vertex_count() const -> std::size_t override { return to_base_.size(); }
        auto arity() const -> int override { return base_->arity(); }
        auto failure_probability() const -> double override { return base_->failure_probability(); }

        /// Vertex of the underlying (non-induced) oracle.
        auto to_base(Vertex v) const -> Vertex { return to_base_[v]; }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        IndependenceOracle * base_;
        std::vector<Vertex> to_base_;
        std::vector<VertexSet> scratch_;
    };

    /// Forwards to an inner oracle and throws BudgetExhausted once more than
    /// `limit` queries have been asked through it.
    class BudgetedOracle final : public IndependenceOracle
    {
    public:
        BudgetedOracle(IndependenceOracle & inner, std::uint64_t limit);

        auto vertex_count() const -> std::size_t override { return inner_.vertex_count(); }
        auto arity() const -> int override { return inner_.arity(); }
        auto failure_probability() const -> double override { return inner_.failure_probability(); }

    protected:
        auto answer(std::span<const ClassView> classes) -> QueryResult override;

    private:
        IndependenceOracle & inner_;
        std::uint64_t limit_;
    };

    /// Throws std::invalid_argument unless classes has `k` pairwise-disjoint members, all < n.
    void validate_classes(std::span<const ClassView> classes, std::size_t n, int k);

    /// cIND on an explicit hypergraph, counting the query on `oracle`.
    auto exact_cind(HypergraphOracle & oracle, const ColourClasses & classes) -> QueryResult;

    /// All k-subsets Y of `subset` (lexicographic) whose singleton split has an edge.
    /// Uses exactly C(|subset|, k) queries.
    auto enumerate_edges_within(IndependenceOracle & oracle, std::span<const Vertex> subset)
        -> std::vector<VertexSet>;

    auto pad_oracle_to_power_of_two(IndependenceOracle & oracle) -> PaddedOracle;

    /// Number of edges containing the (sorted) set `s`; requires |s| <= k.
    auto degree(const Hypergraph & graph, std::span<const Vertex> s) -> std::size_t;

    struct SurvivalRatio
    {
        double value;
        // Exact reduced fraction as decimal strings; cheap to keep and handy for tests.
        std::string numerator;
        std::string denominator;
    };

    /// C(2^y - k, 2^(y-1) - k) / C(2^y, 2^(y-1)): the probability that a fixed k-set
    /// survives in a uniformly random half of a 2^y-set.
    auto halving_survival_p(int y, int k) -> SurvivalRatio;

    auto is_power_of_two(std::uint64_t x) noexcept -> bool;
    auto next_power_of_two(std::uint64_t x) noexcept -> std::uint64_t;
    /// floor(log2 x) for x >= 1.
    auto log2_floor(std::uint64_t x) noexcept -> int;

    auto binomial(std::uint64_t n, std::uint64_t k) -> double;

    auto all_vertices(std::size_t n) -> VertexSet;
}
