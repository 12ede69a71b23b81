#pragma once

#include "cindcount/core.hpp"
#include "cindcount/problems.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace cindcount
{
    class UnsupportedInstance : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Message starts with the JSON path of the offending field, e.g. "$.edges[3]: ...".
    class MalformedInstance : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct CliqueInstance
    {
        std::shared_ptr<const WeightedGraph> graph;
        int k = 3;
    };

    struct Instance
    {
        std::variant<std::shared_ptr<const Hypergraph>, std::shared_ptr<const KSumInstance>,
            std::shared_ptr<const KovInstance>, CliqueInstance, std::shared_ptr<const PatternInstance>>
            value;

        auto type() const -> std::string;
        auto arity() const -> int;

        /// Compares contents, not pointers.
        auto operator==(const Instance & other) const -> bool;
    };

    auto parse_instance(const nlohmann::json & j) -> Instance;
    auto parse_instance_file(const std::string & path) -> Instance;
    auto serialize_instance(const Instance & instance) -> nlohmann::json;

    /// Oracle over the instance's witness hypergraph. Colourful instances have one oracle per
    /// bijection and throw UnsupportedInstance here.
    auto make_oracle(const Instance & instance) -> std::unique_ptr<IndependenceOracle>;

    /// Witness count by brute force, independent of any oracle.
    auto brute_force_count(const Instance & instance) -> std::uint64_t;
}
