#pragma once
// Immutable knowledge-graph model: synsets, lexical senses, taxonomic and
// non-taxonomic edge partitions, and the structural queries the IC and
// similarity formulas consume.
//
// The graph is frozen by GraphBuilder::build(); every query afterwards is a
// pure read. Structural tables (depth, descendant counts, subsumer sets) are
// precomputed at build time so concurrent readers never race on caches.

#include "kgsim/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace kgsim {

struct Node {
    std::string id;  // IRI or builder-supplied identifier, unique
    NodeKind kind = NodeKind::Synset;
    std::vector<std::string> labels;    // lowercased surface words
    NodeId synset = kNoNode;            // for senses: owning synset
    std::vector<NodeId> members;        // for synsets: member senses
};

struct RelationType {
    std::string name;
    RelationCategory category = RelationCategory::NonTaxonomic;
    std::string inverse;                // empty when none declared/inferred
    bool undirected = false;            // synonym
    std::uint64_t frequency = 0;        // instance count
    double prevalence = 0.0;            // share within its category
    TypeId parent = kNoType;            // optional relation-type hierarchy
    NodeId domain = kNoNode;            // optional domain/range concepts
    NodeId range = kNoNode;
};

// Outgoing arc in the non-taxonomic traversal graph. Mirrored directed
// instances (meronym/holonym pairs) collapse into one arc per direction.
struct Arc {
    NodeId to;
    TypeId type;
};

struct GraphOptions {
    bool leaf_counts_self = true;  // a leaf contributes 1 to leaf_count
};

class KnowledgeGraph;

class GraphBuilder {
public:
    NodeId add_synset(const std::string& id);
    NodeId add_sense(const std::string& id, const std::string& word, NodeId synset);
    void add_label(NodeId node, const std::string& word);

    TypeId add_relation_type(const std::string& name, RelationCategory category,
                             const std::string& inverse = "", bool undirected = false);
    TypeId type_id(const std::string& name) const;  // kNoType when absent

    // Typed instance; duplicates are dropped (undirected instances on the
    // unordered endpoint pair). Taxonomic instances also record a deduped
    // child->parent pair: type names containing "hyponym" read
    // parent->child, all other taxonomic names read child->parent.
    void add_instance(TypeId type, NodeId subject, NodeId object);

    // Optional relation-type taxonomy and domain/range concepts (ontologies
    // richer than WordNet).
    void set_type_parent(TypeId child, TypeId parent);
    void set_type_domain_range(TypeId type, NodeId domain, NodeId range);

    // Adds one undirected synonym instance per unordered pair of member
    // senses of every synset (n members -> C(n,2) instances). Registers the
    // "synonym" type if missing. Returns the number of instances added.
    std::size_t derive_synonym_edges();

    std::optional<NodeId> find_node(const std::string& id) const;
    std::size_t node_count() const { return nodes_.size(); }

    // Validates (unique root, acyclic taxonomy, membership), computes all
    // structural tables and freezes the graph. threads <= 1 selects the
    // serial reference path for the parallel kernels.
    KnowledgeGraph build(const GraphOptions& options = {}, int threads = 1);

private:
    friend class KnowledgeGraph;
    std::vector<Node> nodes_;
    std::vector<RelationType> types_;
    std::vector<RelationInstance> instances_;
    std::vector<std::pair<NodeId, NodeId>> tax_edges_;  // child -> parent, deduped
    std::unordered_map<std::string, NodeId> node_index_;
    std::unordered_map<std::string, TypeId> type_index_;
    std::unordered_map<std::uint64_t, std::uint8_t> tax_edge_seen_;
    std::unordered_map<std::uint64_t, std::uint8_t> instance_seen_;
    bool synonyms_derived_ = false;
};

// Compressed adjacency: offsets_[n]..offsets_[n+1] indexes into items_.
template <typename T>
struct CsrList {
    std::vector<std::uint32_t> offsets;
    std::vector<T> items;

    std::span<const T> row(NodeId n) const {
        return {items.data() + offsets[n], items.data() + offsets[n + 1]};
    }
};

class KnowledgeGraph {
public:
    // ---- structure ----
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t synset_count() const { return synset_count_; }
    std::size_t sense_count() const { return nodes_.size() - synset_count_; }
    const Node& node(NodeId n) const;
    NodeId node_id(const std::string& id) const;  // throws NotFoundError
    std::optional<NodeId> find_node(const std::string& id) const;
    bool is_synset(NodeId n) const { return nodes_[n].kind == NodeKind::Synset; }

    const std::vector<RelationType>& relation_types() const { return types_; }
    TypeId type_id(const std::string& name) const;  // throws NotFoundError
    TypeId inverse_type(TypeId t) const;            // kNoType when none
    // Non-taxonomic types in canonical (registration) order; fixes the
    // strategy-2 vector layout.
    const std::vector<TypeId>& nontaxonomic_types() const { return nontax_types_; }

    const std::vector<RelationInstance>& instances() const { return instances_; }
    // Instances a node participates in on its subject side (plus both sides
    // of undirected synonym edges), ordered by instance id.
    std::span<const InstanceId> incident_instances(NodeId n) const;
    // Undirected traversal arcs over non-taxonomic edges only.
    std::span<const Arc> arcs(NodeId n) const;

    // ---- taxonomy ----
    NodeId root() const { return root_; }
    std::span<const NodeId> parents(NodeId synset) const;
    std::span<const NodeId> children(NodeId synset) const;
    // depth(root) = 1; multiple inheritance resolves to the minimum.
    std::uint32_t depth(NodeId synset) const;
    // Transitive descendants excluding the node itself.
    std::uint64_t hypo_count(NodeId synset) const;
    // Transitive ancestors excluding the node itself.
    std::uint64_t hyper_count(NodeId synset) const;
    // Transitive ancestors including the node itself, sorted by id.
    std::span<const NodeId> subsumers(NodeId synset) const;
    std::uint64_t leaf_count(NodeId synset) const;
    std::uint32_t direct_hyponym_count(NodeId synset) const;
    // Distinct children of the node's parents, including the node.
    std::uint32_t sibling_count(NodeId synset) const;
    std::uint32_t max_depth() const { return max_depth_; }
    std::uint64_t max_wn() const { return synset_count_; }
    std::uint64_t max_leaves() const { return max_leaves_; }

    // Common subsumer maximizing ic[c]; ties broken by greater depth, then
    // lexicographically smaller id. ic is indexed by NodeId.
    NodeId lcs(NodeId a, NodeId b, std::span<const double> ic) const;
    std::vector<NodeId> common_subsumers(NodeId a, NodeId b) const;
    // Shortest undirected path length over taxonomic edges (BFS); 0 for a==b.
    std::uint32_t taxonomic_path_length(NodeId a, NodeId b) const;

    // Senses resolve to their synset; synsets pass through.
    NodeId resolve_synset(NodeId n) const;

    // ---- words ----
    // Lexical-sense nodes labeled with the (lowercased) word.
    std::vector<NodeId> senses_of(const std::string& word) const;
    // Senses plus their synsets plus synsets labeled directly; deduped,
    // sorted. Empty when the word is absent.
    std::vector<NodeId> word_nodes(const std::string& word) const;

    const GraphOptions& options() const { return options_; }

    // Stable content hash over nodes, types and edges; keys sidecar caches.
    std::uint64_t fingerprint() const;

private:
    friend class GraphBuilder;
    void require_synset(NodeId n, const char* op) const;
    void check_node(NodeId n) const;

    std::vector<Node> nodes_;
    std::vector<RelationType> types_;
    std::vector<TypeId> nontax_types_;
    std::vector<RelationInstance> instances_;
    std::unordered_map<std::string, NodeId> node_index_;
    std::unordered_map<std::string, TypeId> type_index_;
    std::unordered_map<std::string, std::vector<NodeId>> word_senses_;
    std::unordered_map<std::string, std::vector<NodeId>> word_synsets_;

    GraphOptions options_;
    std::size_t synset_count_ = 0;
    NodeId root_ = kNoNode;
    std::uint32_t max_depth_ = 0;
    std::uint64_t max_leaves_ = 0;

    CsrList<NodeId> parents_;
    CsrList<NodeId> children_;
    CsrList<InstanceId> incident_;
    CsrList<Arc> arcs_;
    CsrList<NodeId> subsumers_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint64_t> hypo_;
    std::vector<std::uint64_t> hyper_;
    std::vector<std::uint64_t> leaves_;
    std::vector<std::uint32_t> siblings_;
};

}  // namespace kgsim
