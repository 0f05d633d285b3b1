#pragma once
// Shared identifiers and error types.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kgsim {

using NodeId = std::uint32_t;
using TypeId = std::uint16_t;
using InstanceId = std::uint32_t;

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
constexpr TypeId kNoType = std::numeric_limits<TypeId>::max();

enum class NodeKind : std::uint8_t { Synset, Sense };

enum class RelationCategory : std::uint8_t {
    Taxonomic,
    NonTaxonomic,
    Structural,  // synset membership, labels; never scored
    Ignore,
};

// Typed directed edge. Synonym instances are stored once and treated as
// undirected by every consumer.
struct RelationInstance {
    TypeId type;
    NodeId subject;
    NodeId object;
};

// Raised when a query names a node or word the graph does not contain.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed or inconsistent input data (bad triples, bad mapping
// rows, datasets out of range, taxonomy cycles).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant is violated; maps to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kgsim
