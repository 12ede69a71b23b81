#include "cindcount/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>

namespace cindcount
{
    namespace
    {
        using nlohmann::json;

        template <class... F>
        struct overloaded : F...
        {
            using F::operator()...;
        };
        template <class... F>
        overloaded(F...) -> overloaded<F...>;

        [[noreturn]] void malformed(const std::string & path, const std::string & what)
        {
            throw MalformedInstance(path + ": " + what);
        }

        auto member(const json & j, const std::string & key, const std::string & path) -> const json &
        {
            if (!j.is_object())
                malformed(path, "expected an object");
            auto it = j.find(key);
            if (it == j.end())
                malformed(path + "." + key, "missing");
            return *it;
        }

        auto array(const json & j, const std::string & path) -> const json &
        {
            if (!j.is_array())
                malformed(path, "expected an array");
            return j;
        }

        auto integer(const json & j, const std::string & path, std::int64_t lo, std::int64_t hi) -> std::int64_t
        {
            if (!j.is_number_integer())
                malformed(path, "expected an integer");
            if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
                malformed(path, "integer out of range");
            const auto v = j.get<std::int64_t>();
            if (v < lo || v > hi)
                malformed(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            return v;
        }

        auto index(const std::string & path, std::size_t i) -> std::string
        {
            return path + "[" + std::to_string(i) + "]";
        }

        constexpr std::int64_t max_i64 = std::numeric_limits<std::int64_t>::max();
        constexpr std::int64_t max_vertices = std::numeric_limits<std::uint32_t>::max();

        auto parse_hypergraph(const json & j) -> std::shared_ptr<const Hypergraph>
        {
            const auto n = static_cast<std::size_t>(integer(member(j, "n", "$"), "$.n", 0, max_vertices));
            const int k = static_cast<int>(integer(member(j, "k", "$"), "$.k", 1, 64));
            const auto & edges = array(member(j, "edges", "$"), "$.edges");
            std::vector<VertexSet> list;
            std::set<VertexSet> seen;
            for (std::size_t i = 0; i < edges.size(); ++i)
            {
                const auto path = index("$.edges", i);
                const auto & e = array(edges[i], path);
                if (e.size() != static_cast<std::size_t>(k))
                    malformed(path, "edge must have exactly k vertices");
                VertexSet s;
                for (std::size_t a = 0; a < e.size(); ++a)
                    s.push_back(static_cast<Vertex>(integer(e[a], index(path, a), 0, static_cast<std::int64_t>(n) - 1)));
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) != s.end())
                    malformed(path, "repeated vertex in edge");
                if (!seen.insert(s).second)
                    malformed(path, "duplicate edge");
                list.push_back(std::move(s));
            }
            try
            {
                return std::make_shared<const Hypergraph>(n, k, std::move(list));
            }
            catch (const std::invalid_argument & e)
            {
                malformed("$", e.what());
            }
        }

        auto parse_ksum(const json & j) -> std::shared_ptr<const KSumInstance>
        {
            KSumInstance inst;
            inst.k = static_cast<int>(integer(member(j, "k", "$"), "$.k", 3, 64));
            const auto & values = array(member(j, "values", "$"), "$.values");
            std::set<std::int64_t> seen;
            for (std::size_t i = 0; i < values.size(); ++i)
            {
                const auto v = integer(values[i], index("$.values", i), -max_i64, max_i64);
                if (!seen.insert(v).second)
                    malformed(index("$.values", i), "duplicate value " + std::to_string(v));
                inst.values.push_back(v);
            }
            try
            {
                inst.validate();
            }
            catch (const std::exception & e)
            {
                malformed("$.values", e.what());
            }
            return std::make_shared<const KSumInstance>(std::move(inst));
        }

        auto parse_kov(const json & j) -> std::shared_ptr<const KovInstance>
        {
            KovInstance inst;
            inst.dimension = static_cast<std::size_t>(integer(member(j, "d", "$"), "$.d", 1, 1 << 20));
            const auto & sets = array(member(j, "sets", "$"), "$.sets");
            if (sets.size() < 2)
                malformed("$.sets", "need at least two lists");
            for (std::size_t i = 0; i < sets.size(); ++i)
            {
                const auto path = index("$.sets", i);
                const auto & list = array(sets[i], path);
                std::vector<BitVector> vs;
                for (std::size_t a = 0; a < list.size(); ++a)
                {
                    if (!list[a].is_string())
                        malformed(index(path, a), "expected a 0/1 string");
                    try
                    {
                        vs.push_back(KovInstance::pack(list[a].get<std::string>(), inst.dimension));
                    }
                    catch (const std::invalid_argument & e)
                    {
                        malformed(index(path, a), e.what());
                    }
                }
                inst.sets.push_back(std::move(vs));
            }
            return std::make_shared<const KovInstance>(std::move(inst));
        }

        auto parse_simple_graph(const json & j, const std::string & path) -> SimpleGraph
        {
            SimpleGraph g;
            g.n = static_cast<std::size_t>(integer(member(j, "n", path), path + ".n", 0, max_vertices));
            const auto & edges = array(member(j, "edges", path), path + ".edges");
            std::set<std::pair<Vertex, Vertex>> seen;
            for (std::size_t i = 0; i < edges.size(); ++i)
            {
                const auto p = index(path + ".edges", i);
                const auto & e = array(edges[i], p);
                if (e.size() != 2)
                    malformed(p, "expected [u, v]");
                const auto u = static_cast<Vertex>(integer(e[0], index(p, 0), 0, static_cast<std::int64_t>(g.n) - 1));
                const auto v = static_cast<Vertex>(integer(e[1], index(p, 1), 0, static_cast<std::int64_t>(g.n) - 1));
                if (u == v)
                    malformed(p, "self-loop");
                if (!seen.insert(std::minmax(u, v)).second)
                    malformed(p, "duplicate edge");
                g.edges.emplace_back(u, v);
            }
            return g;
        }

        auto parse_clique(const json & j) -> CliqueInstance
        {
            auto g = std::make_shared<WeightedGraph>();
            const int k = static_cast<int>(integer(member(j, "k", "$"), "$.k", 3, 64));
            g->n = static_cast<std::size_t>(integer(member(j, "n", "$"), "$.n", 0, max_vertices));
            if (j.contains("max_weight"))
                g->max_weight = integer(j.at("max_weight"), "$.max_weight", 0, max_i64);
            const auto & edges = array(member(j, "edges", "$"), "$.edges");
            std::set<std::pair<Vertex, Vertex>> seen;
            for (std::size_t i = 0; i < edges.size(); ++i)
            {
                const auto p = index("$.edges", i);
                const auto & e = array(edges[i], p);
                if (e.size() != 3)
                    malformed(p, "expected [u, v, w]");
                WeightedEdge we;
                we.u = static_cast<Vertex>(integer(e[0], index(p, 0), 0, static_cast<std::int64_t>(g->n) - 1));
                we.v = static_cast<Vertex>(integer(e[1], index(p, 1), 0, static_cast<std::int64_t>(g->n) - 1));
                we.w = integer(e[2], index(p, 2), -max_i64, max_i64);
                if (we.u == we.v)
                    malformed(p, "self-loop");
                if (!seen.insert(std::minmax(we.u, we.v)).second)
                    malformed(p, "duplicate edge");
                if (g->max_weight > 0 && (we.w > g->max_weight || we.w < -g->max_weight))
                    malformed(index(p, 2), "weight outside [-max_weight, max_weight]");
                g->edges.push_back(we);
            }
            return {std::move(g), k};
        }

        auto parse_colourful(const json & j) -> std::shared_ptr<const PatternInstance>
        {
            PatternInstance inst;
            inst.pattern = parse_simple_graph(member(j, "pattern", "$"), "$.pattern");
            inst.graph = parse_simple_graph(member(j, "graph", "$"), "$.graph");
            if (inst.pattern.n < 2 || inst.pattern.n > 10)
                malformed("$.pattern.n", "pattern must have between 2 and 10 vertices");
            const auto & colours = array(member(j, "colours", "$"), "$.colours");
            if (colours.size() != inst.graph.n)
                malformed("$.colours", "need one colour per host vertex");
            for (std::size_t i = 0; i < colours.size(); ++i)
                inst.colours.push_back(static_cast<int>(integer(colours[i], index("$.colours", i), 0, static_cast<std::int64_t>(inst.pattern.n) - 1)));
            try
            {
                inst.validate();
            }
            catch (const std::invalid_argument & e)
            {
                malformed("$", e.what());
            }
            return std::make_shared<const PatternInstance>(std::move(inst));
        }

        auto simple_graph_json(const SimpleGraph & g) -> json
        {
            json edges = json::array();
            for (auto [u, v] : g.edges)
                edges.push_back({u, v});
            return {{"n", g.n}, {"edges", edges}};
        }
    }

    auto Instance::type() const -> std::string
    {
        return std::visit(overloaded{
                              [](const std::shared_ptr<const Hypergraph> &) { return std::string("hypergraph"); },
                              [](const std::shared_ptr<const KSumInstance> &) { return std::string("ksum"); },
                              [](const std::shared_ptr<const KovInstance> &) { return std::string("kov"); },
                              [](const CliqueInstance &) { return std::string("weighted-graph"); },
                              [](const std::shared_ptr<const PatternInstance> &) { return std::string("colourful"); },
                          },
            value);
    }

    auto Instance::arity() const -> int
    {
        return std::visit(overloaded{
                              [](const std::shared_ptr<const Hypergraph> & g) { return g->arity(); },
                              [](const std::shared_ptr<const KSumInstance> & s) { return s->k; },
                              [](const std::shared_ptr<const KovInstance> & s) { return s->arity(); },
                              [](const CliqueInstance & c) { return c.k; },
                              [](const std::shared_ptr<const PatternInstance> & p) { return p->arity(); },
                          },
            value);
    }

    auto Instance::operator==(const Instance & other) const -> bool
    {
        if (value.index() != other.value.index())
            return false;
        return std::visit(overloaded{
                              [&](const std::shared_ptr<const Hypergraph> & g) {
                                  const auto & h = *std::get<std::shared_ptr<const Hypergraph>>(other.value);
                                  return g->vertex_count() == h.vertex_count() && g->arity() == h.arity() && g->edges() == h.edges();
                              },
                              [&](const std::shared_ptr<const KSumInstance> & s) { return *s == *std::get<std::shared_ptr<const KSumInstance>>(other.value); },
                              [&](const std::shared_ptr<const KovInstance> & s) { return *s == *std::get<std::shared_ptr<const KovInstance>>(other.value); },
                              [&](const CliqueInstance & c) {
                                  const auto & d = std::get<CliqueInstance>(other.value);
                                  return c.k == d.k && *c.graph == *d.graph;
                              },
                              [&](const std::shared_ptr<const PatternInstance> & p) { return *p == *std::get<std::shared_ptr<const PatternInstance>>(other.value); },
                          },
            value);
    }

    auto parse_instance(const json & j) -> Instance
    {
        const auto & type = member(j, "type", "$");
        if (!type.is_string())
            malformed("$.type", "expected a string");
        const auto t = type.get<std::string>();
        if (t == "hypergraph")
            return {parse_hypergraph(j)};
        if (t == "ksum")
            return {parse_ksum(j)};
        if (t == "kov")
            return {parse_kov(j)};
        if (t == "weighted-graph")
            return {parse_clique(j)};
        if (t == "colourful")
            return {parse_colourful(j)};
        throw UnsupportedInstance("unsupported instance type '" + t + "'");
    }

    auto parse_instance_file(const std::string & path) -> Instance
    {
        std::ifstream in(path);
        if (!in)
            throw MalformedInstance(path + ": cannot open file");
        json j;
        try
        {
            in >> j;
        }
        catch (const json::parse_error & e)
        {
            throw MalformedInstance(path + ": invalid JSON (" + e.what() + ")");
        }
        return parse_instance(j);
    }

    auto serialize_instance(const Instance & instance) -> json
    {
        return std::visit(overloaded{
                              [](const std::shared_ptr<const Hypergraph> & g) -> json {
                                  return {{"type", "hypergraph"}, {"n", g->vertex_count()}, {"k", g->arity()}, {"edges", g->edges()}};
                              },
                              [](const std::shared_ptr<const KSumInstance> & s) -> json {
                                  return {{"type", "ksum"}, {"k", s->k}, {"values", s->values}};
                              },
                              [](const std::shared_ptr<const KovInstance> & s) -> json {
                                  json sets = json::array();
                                  for (const auto & list : s->sets)
                                  {
                                      json l = json::array();
                                      for (const auto & v : list)
                                          l.push_back(KovInstance::unpack(v, s->dimension));
                                      sets.push_back(std::move(l));
                                  }
                                  return {{"type", "kov"}, {"d", s->dimension}, {"sets", sets}};
                              },
                              [](const CliqueInstance & c) -> json {
                                  json edges = json::array();
                                  for (const auto & e : c.graph->edges)
                                      edges.push_back({e.u, e.v, e.w});
                                  json j{{"type", "weighted-graph"}, {"k", c.k}, {"n", c.graph->n}, {"edges", edges}};
                                  if (c.graph->max_weight > 0)
                                      j["max_weight"] = c.graph->max_weight;
                                  return j;
                              },
                              [](const std::shared_ptr<const PatternInstance> & p) -> json {
                                  return {{"type", "colourful"}, {"pattern", simple_graph_json(p->pattern)},
                                      {"graph", simple_graph_json(p->graph)}, {"colours", p->colours}};
                              },
                          },
            instance.value);
    }

    auto make_oracle(const Instance & instance) -> std::unique_ptr<IndependenceOracle>
    {
        return std::visit(overloaded{
                              [](const std::shared_ptr<const Hypergraph> & g) -> std::unique_ptr<IndependenceOracle> {
                                  return std::make_unique<HypergraphOracle>(g);
                              },
                              [](const std::shared_ptr<const KSumInstance> & s) -> std::unique_ptr<IndependenceOracle> {
                                  return std::make_unique<KSumOracle>(s, ksum_meet_in_middle_decider());
                              },
                              [](const std::shared_ptr<const KovInstance> & s) -> std::unique_ptr<IndependenceOracle> {
                                  return std::make_unique<KovOracle>(s, kov_brute_force_decider());
                              },
                              [](const CliqueInstance & c) -> std::unique_ptr<IndependenceOracle> {
                                  return std::make_unique<ExactWeightCliqueOracle>(c.graph, c.k, clique_brute_force_decider());
                              },
                              [](const std::shared_ptr<const PatternInstance> &) -> std::unique_ptr<IndependenceOracle> {
                                  throw UnsupportedInstance("colourful instances have no single oracle; use count or exact");
                              },
                          },
            instance.value);
    }

    auto brute_force_count(const Instance & instance) -> std::uint64_t
    {
        return std::visit(overloaded{
                              [](const std::shared_ptr<const Hypergraph> & g) -> std::uint64_t { return g->edge_count(); },
                              [](const std::shared_ptr<const KSumInstance> & s) -> std::uint64_t { return ksum_witnesses(*s).size(); },
                              [](const std::shared_ptr<const KovInstance> & s) -> std::uint64_t { return kov_witnesses(*s).size(); },
                              [](const CliqueInstance & c) -> std::uint64_t { return zero_weight_cliques(*c.graph, c.k).size(); },
                              [](const std::shared_ptr<const PatternInstance> & p) -> std::uint64_t {
                                  return colourful_copies_brute_force(*p);
                              },
                          },
            instance.value);
    }
}
