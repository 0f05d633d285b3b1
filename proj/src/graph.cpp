#include "kgsim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <deque>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgsim {

namespace {

constexpr std::uint32_t kMaxNodesBits = 26;  // packed dedupe keys below

std::uint64_t pack_pair(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t pack_instance(TypeId t, NodeId s, NodeId o) {
    return (static_cast<std::uint64_t>(t) << (2 * kMaxNodesBits)) |
           (static_cast<std::uint64_t>(s) << kMaxNodesBits) | o;
}

std::string lowercased(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

template <typename T>
CsrList<T> flatten(std::vector<std::vector<T>>&& rows) {
    CsrList<T> out;
    out.offsets.resize(rows.size() + 1, 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        total += rows[i].size();
        out.offsets[i + 1] = static_cast<std::uint32_t>(total);
    }
    out.items.reserve(total);
    for (auto& row : rows) {
        out.items.insert(out.items.end(), row.begin(), row.end());
        row.clear();
        row.shrink_to_fit();
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphBuilder

NodeId GraphBuilder::add_synset(const std::string& id) {
    if (auto it = node_index_.find(id); it != node_index_.end()) {
        if (nodes_[it->second].kind != NodeKind::Synset)
            throw DataError("node id reused with a different kind: " + id);
        return it->second;
    }
    if (nodes_.size() >= (1u << kMaxNodesBits))
        throw DataError("graph exceeds supported node count");
    NodeId n = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Node{id, NodeKind::Synset, {}, kNoNode, {}});
    node_index_.emplace(id, n);
    return n;
}

NodeId GraphBuilder::add_sense(const std::string& id, const std::string& word, NodeId synset) {
    if (synset >= nodes_.size() || nodes_[synset].kind != NodeKind::Synset)
        throw DataError("sense " + id + " references an unknown synset");
    auto it = node_index_.find(id);
    NodeId n;
    if (it != node_index_.end()) {
        n = it->second;
        if (nodes_[n].kind != NodeKind::Sense)
            throw DataError("node id reused with a different kind: " + id);
        if (nodes_[n].synset != kNoNode && nodes_[n].synset != synset)
            throw DataError("sense " + id + " is a member of two synsets");
    } else {
        if (nodes_.size() >= (1u << kMaxNodesBits))
            throw DataError("graph exceeds supported node count");
        n = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(Node{id, NodeKind::Sense, {}, kNoNode, {}});
        node_index_.emplace(id, n);
    }
    if (nodes_[n].synset == kNoNode) {
        nodes_[n].synset = synset;
        nodes_[synset].members.push_back(n);
    }
    if (!word.empty()) add_label(n, word);
    return n;
}

void GraphBuilder::add_label(NodeId node, const std::string& word) {
    if (node >= nodes_.size()) throw DataError("label on unknown node");
    std::string w = lowercased(word);
    auto& labels = nodes_[node].labels;
    if (std::find(labels.begin(), labels.end(), w) == labels.end()) labels.push_back(w);
}

TypeId GraphBuilder::add_relation_type(const std::string& name, RelationCategory category,
                                       const std::string& inverse, bool undirected) {
    if (auto it = type_index_.find(name); it != type_index_.end()) return it->second;
    TypeId t = static_cast<TypeId>(types_.size());
    RelationType rt;
    rt.name = name;
    rt.category = category;
    rt.inverse = inverse;
    rt.undirected = undirected;
    types_.push_back(std::move(rt));
    type_index_.emplace(name, t);
    return t;
}

TypeId GraphBuilder::type_id(const std::string& name) const {
    auto it = type_index_.find(name);
    return it == type_index_.end() ? kNoType : it->second;
}

void GraphBuilder::add_instance(TypeId type, NodeId subject, NodeId object) {
    if (type >= types_.size()) throw DataError("unknown relation type id");
    if (subject >= nodes_.size() || object >= nodes_.size())
        throw DataError("relation instance references an unknown node");
    if (subject == object) throw DataError("self-loop relation instance on " + nodes_[subject].id);
    const RelationType& rt = types_[type];
    if (rt.category == RelationCategory::Structural || rt.category == RelationCategory::Ignore)
        throw DataError("structural/ignored types cannot carry instances: " + rt.name);

    if (rt.undirected) {
        auto key = pack_instance(type, std::min(subject, object), std::max(subject, object));
        if (!instance_seen_.emplace(key, 1).second) return;
    } else {
        auto key = pack_instance(type, subject, object);
        if (!instance_seen_.emplace(key, 1).second) return;
    }
    instances_.push_back(RelationInstance{type, subject, object});

    if (rt.category == RelationCategory::Taxonomic) {
        if (nodes_[subject].kind != NodeKind::Synset || nodes_[object].kind != NodeKind::Synset)
            throw DataError("taxonomic edge endpoints must be synsets");
        // Type names pointing parent->child are the "hyponym" side of an
        // inverse pair; everything else reads subject->parent(object).
        bool subject_is_parent = rt.name.find("hyponym") != std::string::npos;
        NodeId child = subject_is_parent ? object : subject;
        NodeId parent = subject_is_parent ? subject : object;
        if (tax_edge_seen_.emplace(pack_pair(child, parent), 1).second)
            tax_edges_.emplace_back(child, parent);
    }
}

void GraphBuilder::set_type_parent(TypeId child, TypeId parent) {
    if (child >= types_.size() || parent >= types_.size())
        throw DataError("unknown relation type id");
    types_[child].parent = parent;
}

void GraphBuilder::set_type_domain_range(TypeId type, NodeId domain, NodeId range) {
    if (type >= types_.size()) throw DataError("unknown relation type id");
    types_[type].domain = domain;
    types_[type].range = range;
}

std::optional<NodeId> GraphBuilder::find_node(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GraphBuilder::derive_synonym_edges() {
    if (synonyms_derived_) return 0;
    synonyms_derived_ = true;
    TypeId syn = add_relation_type("synonym", RelationCategory::NonTaxonomic, "synonym", true);
    std::size_t added = 0;
    std::size_t node_count = nodes_.size();
    for (NodeId n = 0; n < node_count; ++n) {
        if (nodes_[n].kind != NodeKind::Synset) continue;
        const auto& members = nodes_[n].members;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                std::size_t before = instances_.size();
                add_instance(syn, members[i], members[j]);
                added += instances_.size() - before;
            }
    }
    return added;
}

// ---------------------------------------------------------------------------
// build(): validation + structural kernels

namespace {

// Per-node downward DFS computing |descendants| and leaf counts. The visited
// array is epoch-stamped so it never needs clearing; each worker owns one.
struct DescendantScratch {
    std::vector<std::uint32_t> stamp;
    std::vector<NodeId> stack;
    std::uint32_t epoch = 0;
};

void count_descendants(const CsrList<NodeId>& children, NodeId start, bool leaf_counts_self,
                       DescendantScratch& scr, std::uint64_t& hypo_out,
                       std::uint64_t& leaves_out) {
    ++scr.epoch;
    scr.stack.clear();
    std::uint64_t hypo = 0, leaves = 0;
    for (NodeId c : children.row(start)) {
        if (scr.stamp[c] == scr.epoch) continue;
        scr.stamp[c] = scr.epoch;
        scr.stack.push_back(c);
    }
    while (!scr.stack.empty()) {
        NodeId n = scr.stack.back();
        scr.stack.pop_back();
        ++hypo;
        auto kids = children.row(n);
        if (kids.empty()) ++leaves;
        for (NodeId c : kids) {
            if (scr.stamp[c] == scr.epoch) continue;
            scr.stamp[c] = scr.epoch;
            scr.stack.push_back(c);
        }
    }
    if (leaf_counts_self && children.row(start).empty()) ++leaves;
    hypo_out = hypo;
    leaves_out = leaves;
}

std::vector<NodeId> collect_subsumers(const CsrList<NodeId>& parents, NodeId start,
                                      DescendantScratch& scr) {
    ++scr.epoch;
    scr.stack.clear();
    std::vector<NodeId> out;
    out.push_back(start);
    scr.stamp[start] = scr.epoch;
    scr.stack.push_back(start);
    while (!scr.stack.empty()) {
        NodeId n = scr.stack.back();
        scr.stack.pop_back();
        for (NodeId p : parents.row(n)) {
            if (scr.stamp[p] == scr.epoch) continue;
            scr.stamp[p] = scr.epoch;
            out.push_back(p);
            scr.stack.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

KnowledgeGraph GraphBuilder::build(const GraphOptions& options, int threads) {
    KnowledgeGraph g;
    g.options_ = options;
    g.nodes_ = std::move(nodes_);
    g.types_ = std::move(types_);
    g.instances_ = std::move(instances_);
    g.node_index_ = std::move(node_index_);
    g.type_index_ = std::move(type_index_);

    const std::size_t n_nodes = g.nodes_.size();
    g.synset_count_ = 0;
    for (const auto& nd : g.nodes_)
        if (nd.kind == NodeKind::Synset) ++g.synset_count_;
    if (g.synset_count_ == 0) throw DataError("taxonomy is empty: no synsets loaded");

    for (const auto& nd : g.nodes_)
        if (nd.kind == NodeKind::Sense && nd.synset == kNoNode)
            throw DataError("lexical sense without a synset: " + nd.id);

    // Adjacency from deduped child->parent pairs.
    {
        std::vector<std::vector<NodeId>> par(n_nodes), chl(n_nodes);
        for (auto [child, parent] : tax_edges_) {
            if (child == parent) throw DataError("taxonomic self-loop on " + g.nodes_[child].id);
            par[child].push_back(parent);
            chl[parent].push_back(child);
        }
        for (auto& v : par) std::sort(v.begin(), v.end());
        for (auto& v : chl) std::sort(v.begin(), v.end());
        g.parents_ = flatten(std::move(par));
        g.children_ = flatten(std::move(chl));
    }

    // Unique root: exactly one parentless synset.
    g.root_ = kNoNode;
    for (NodeId i = 0; i < n_nodes; ++i) {
        if (g.nodes_[i].kind != NodeKind::Synset) continue;
        if (g.parents_.row(i).empty()) {
            if (g.root_ != kNoNode)
                throw DataError("taxonomy has multiple roots: " + g.nodes_[g.root_].id + ", " +
                                g.nodes_[i].id);
            g.root_ = i;
        }
    }
    if (g.root_ == kNoNode) throw DataError("taxonomy has no root (cycle through every node)");

    // Cycle check (Kahn over child->parent edges).
    {
        std::vector<std::uint32_t> pending(n_nodes, 0);
        std::deque<NodeId> ready;
        std::size_t synsets_seen = 0;
        for (NodeId i = 0; i < n_nodes; ++i) {
            if (g.nodes_[i].kind != NodeKind::Synset) continue;
            pending[i] = static_cast<std::uint32_t>(g.children_.row(i).size());
            if (pending[i] == 0) ready.push_back(i);
        }
        while (!ready.empty()) {
            NodeId n = ready.front();
            ready.pop_front();
            ++synsets_seen;
            for (NodeId p : g.parents_.row(n))
                if (--pending[p] == 0) ready.push_back(p);
        }
        if (synsets_seen != g.synset_count_)
            throw DataError("taxonomic subgraph contains a cycle");
    }

    // Depth: 1 + minimum parent depth == BFS hop count from the root.
    g.depth_.assign(n_nodes, 0);
    {
        std::deque<NodeId> queue;
        g.depth_[g.root_] = 1;
        queue.push_back(g.root_);
        std::size_t reached = 0;
        while (!queue.empty()) {
            NodeId n = queue.front();
            queue.pop_front();
            ++reached;
            for (NodeId c : g.children_.row(n)) {
                if (g.depth_[c] != 0) continue;
                g.depth_[c] = g.depth_[n] + 1;
                queue.push_back(c);
            }
        }
        if (reached != g.synset_count_)
            throw DataError("taxonomy node unreachable from the root");
    }
    g.max_depth_ = 0;
    for (NodeId i = 0; i < n_nodes; ++i) g.max_depth_ = std::max(g.max_depth_, g.depth_[i]);

    // Descendant counts and subsumer sets; data-parallel over synsets.
    g.hypo_.assign(n_nodes, 0);
    g.leaves_.assign(n_nodes, 0);
    std::vector<std::vector<NodeId>> subs(n_nodes);
    const bool lcs_self = options.leaf_counts_self;
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
        {
            DescendantScratch scr;
            scr.stamp.assign(n_nodes, 0);
#pragma omp for schedule(dynamic, 256)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_nodes); ++i) {
                NodeId n = static_cast<NodeId>(i);
                if (g.nodes_[n].kind != NodeKind::Synset) continue;
                count_descendants(g.children_, n, lcs_self, scr, g.hypo_[n], g.leaves_[n]);
                subs[n] = collect_subsumers(g.parents_, n, scr);
            }
        }
    } else
#endif
    {
        (void)threads;
        DescendantScratch scr;
        scr.stamp.assign(n_nodes, 0);
        for (NodeId n = 0; n < n_nodes; ++n) {
            if (g.nodes_[n].kind != NodeKind::Synset) continue;
            count_descendants(g.children_, n, lcs_self, scr, g.hypo_[n], g.leaves_[n]);
            subs[n] = collect_subsumers(g.parents_, n, scr);
        }
    }
    g.subsumers_ = flatten(std::move(subs));
    g.hyper_.assign(n_nodes, 0);
    for (NodeId i = 0; i < n_nodes; ++i) {
        auto s = g.subsumers_.row(i);
        g.hyper_[i] = s.empty() ? 0 : s.size() - 1;
    }
    g.max_leaves_ = g.leaves_[g.root_];

    // sibling_count: distinct children of the node's parents, self included.
    g.siblings_.assign(n_nodes, 0);
    {
        std::vector<NodeId> buf;
        for (NodeId i = 0; i < n_nodes; ++i) {
            if (g.nodes_[i].kind != NodeKind::Synset) continue;
            buf.clear();
            for (NodeId p : g.parents_.row(i)) {
                auto kids = g.children_.row(p);
                buf.insert(buf.end(), kids.begin(), kids.end());
            }
            std::sort(buf.begin(), buf.end());
            buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
            g.siblings_[i] = static_cast<std::uint32_t>(buf.size());
        }
    }

    // Per-category prevalence.
    {
        for (const auto& inst : g.instances_) ++g.types_[inst.type].frequency;
        std::uint64_t tax_total = 0, nontax_total = 0;
        for (const auto& t : g.types_) {
            if (t.category == RelationCategory::Taxonomic) tax_total += t.frequency;
            if (t.category == RelationCategory::NonTaxonomic) nontax_total += t.frequency;
        }
        for (auto& t : g.types_) {
            std::uint64_t denom = t.category == RelationCategory::Taxonomic ? tax_total
                                  : t.category == RelationCategory::NonTaxonomic ? nontax_total
                                                                                 : 0;
            t.prevalence = denom == 0 ? 0.0 : static_cast<double>(t.frequency) / denom;
        }
    }
    for (TypeId t = 0; t < g.types_.size(); ++t)
        if (g.types_[t].category == RelationCategory::NonTaxonomic)
            g.nontax_types_.push_back(t);

    // Incidence lists (subject side; both sides of undirected instances) and
    // the undirected traversal arcs over non-taxonomic edges.
    {
        std::vector<std::vector<InstanceId>> inc(n_nodes);
        std::vector<std::vector<Arc>> arcs(n_nodes);
        std::unordered_map<std::uint64_t, std::uint8_t> arc_seen;
        auto add_arc = [&](NodeId from, NodeId to, TypeId type) {
            if (arc_seen.emplace(pack_instance(type, from, to), 1).second)
                arcs[from].push_back(Arc{to, type});
        };
        for (InstanceId i = 0; i < g.instances_.size(); ++i) {
            const auto& inst = g.instances_[i];
            const auto& rt = g.types_[inst.type];
            if (rt.category != RelationCategory::NonTaxonomic) continue;
            inc[inst.subject].push_back(i);
            if (rt.undirected) inc[inst.object].push_back(i);
            add_arc(inst.subject, inst.object, inst.type);
            TypeId back = inst.type;
            if (!rt.undirected && !rt.inverse.empty()) {
                auto it = g.type_index_.find(rt.inverse);
                if (it != g.type_index_.end()) back = it->second;
            }
            add_arc(inst.object, inst.subject, back);
        }
        for (auto& row : arcs)
            std::sort(row.begin(), row.end(), [](const Arc& a, const Arc& b) {
                return a.to != b.to ? a.to < b.to : a.type < b.type;
            });
        g.incident_ = flatten(std::move(inc));
        g.arcs_ = flatten(std::move(arcs));
    }

    // Word lookup tables.
    for (NodeId i = 0; i < n_nodes; ++i) {
        auto& dst = g.nodes_[i].kind == NodeKind::Sense ? g.word_senses_ : g.word_synsets_;
        for (const auto& label : g.nodes_[i].labels) dst[label].push_back(i);
    }

    return g;
}

// ---------------------------------------------------------------------------
// KnowledgeGraph queries

void KnowledgeGraph::check_node(NodeId n) const {
    if (n >= nodes_.size()) throw NotFoundError("unknown node id");
}

void KnowledgeGraph::require_synset(NodeId n, const char* op) const {
    check_node(n);
    if (nodes_[n].kind != NodeKind::Synset)
        throw NotFoundError(std::string(op) + ": node " + nodes_[n].id + " is not in the taxonomy");
}

const Node& KnowledgeGraph::node(NodeId n) const {
    check_node(n);
    return nodes_[n];
}

NodeId KnowledgeGraph::node_id(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) throw NotFoundError("unknown node: " + id);
    return it->second;
}

std::optional<NodeId> KnowledgeGraph::find_node(const std::string& id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
}

TypeId KnowledgeGraph::type_id(const std::string& name) const {
    auto it = type_index_.find(name);
    if (it == type_index_.end()) throw NotFoundError("unknown relation type: " + name);
    return it->second;
}

TypeId KnowledgeGraph::inverse_type(TypeId t) const {
    if (t >= types_.size()) throw NotFoundError("unknown relation type id");
    if (types_[t].inverse.empty()) return kNoType;
    auto it = type_index_.find(types_[t].inverse);
    return it == type_index_.end() ? kNoType : it->second;
}

std::span<const InstanceId> KnowledgeGraph::incident_instances(NodeId n) const {
    check_node(n);
    return incident_.row(n);
}

std::span<const Arc> KnowledgeGraph::arcs(NodeId n) const {
    check_node(n);
    return arcs_.row(n);
}

std::span<const NodeId> KnowledgeGraph::parents(NodeId n) const {
    require_synset(n, "parents");
    return parents_.row(n);
}

std::span<const NodeId> KnowledgeGraph::children(NodeId n) const {
    require_synset(n, "children");
    return children_.row(n);
}

std::uint32_t KnowledgeGraph::depth(NodeId n) const {
    require_synset(n, "depth");
    return depth_[n];
}

std::uint64_t KnowledgeGraph::hypo_count(NodeId n) const {
    require_synset(n, "hypo_count");
    return hypo_[n];
}

std::uint64_t KnowledgeGraph::hyper_count(NodeId n) const {
    require_synset(n, "hyper_count");
    return hyper_[n];
}

std::span<const NodeId> KnowledgeGraph::subsumers(NodeId n) const {
    require_synset(n, "subsumers");
    return subsumers_.row(n);
}

std::uint64_t KnowledgeGraph::leaf_count(NodeId n) const {
    require_synset(n, "leaf_count");
    return leaves_[n];
}

std::uint32_t KnowledgeGraph::direct_hyponym_count(NodeId n) const {
    require_synset(n, "direct_hyponym_count");
    return static_cast<std::uint32_t>(children_.row(n).size());
}

std::uint32_t KnowledgeGraph::sibling_count(NodeId n) const {
    require_synset(n, "sibling_count");
    return siblings_[n];
}

std::vector<NodeId> KnowledgeGraph::common_subsumers(NodeId a, NodeId b) const {
    auto sa = subsumers(a);
    auto sb = subsumers(b);
    std::vector<NodeId> out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

NodeId KnowledgeGraph::lcs(NodeId a, NodeId b, std::span<const double> ic) const {
    auto common = common_subsumers(a, b);
    if (common.empty()) throw InternalError("no common subsumer in a rooted taxonomy");
    NodeId best = common.front();
    for (std::size_t i = 1; i < common.size(); ++i) {
        NodeId c = common[i];
        double dv = ic[c] - ic[best];
        if (dv > 0) {
            best = c;
        } else if (dv == 0) {
            if (depth_[c] > depth_[best] ||
                (depth_[c] == depth_[best] && nodes_[c].id < nodes_[best].id))
                best = c;
        }
    }
    return best;
}

namespace {
// Per-thread BFS scratch; epoch stamps avoid clearing between queries.
struct BfsScratch {
    std::vector<std::uint32_t> dist;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
};
thread_local BfsScratch tls_bfs;
}  // namespace

std::uint32_t KnowledgeGraph::taxonomic_path_length(NodeId a, NodeId b) const {
    require_synset(a, "taxonomic_path_length");
    require_synset(b, "taxonomic_path_length");
    if (a == b) return 0;
    auto& scr = tls_bfs;
    if (scr.stamp.size() < nodes_.size()) {
        scr.stamp.assign(nodes_.size(), 0);
        scr.dist.assign(nodes_.size(), 0);
        scr.epoch = 0;
    }
    ++scr.epoch;
    std::deque<NodeId> queue;
    scr.stamp[a] = scr.epoch;
    scr.dist[a] = 0;
    queue.push_back(a);
    while (!queue.empty()) {
        NodeId n = queue.front();
        queue.pop_front();
        if (n == b) return scr.dist[n];
        auto visit = [&](NodeId m) {
            if (scr.stamp[m] == scr.epoch) return;
            scr.stamp[m] = scr.epoch;
            scr.dist[m] = scr.dist[n] + 1;
            queue.push_back(m);
        };
        for (NodeId p : parents_.row(n)) visit(p);
        for (NodeId c : children_.row(n)) visit(c);
    }
    throw InternalError("taxonomy nodes disconnected despite a unique root");
}

NodeId KnowledgeGraph::resolve_synset(NodeId n) const {
    check_node(n);
    return nodes_[n].kind == NodeKind::Synset ? n : nodes_[n].synset;
}

std::vector<NodeId> KnowledgeGraph::senses_of(const std::string& word) const {
    std::vector<NodeId> out;
    auto it = word_senses_.find(lowercased(word));
    if (it == word_senses_.end()) return out;
    for (NodeId s : it->second) {
        out.push_back(s);
        if (nodes_[s].synset != kNoNode) out.push_back(nodes_[s].synset);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<NodeId> KnowledgeGraph::word_nodes(const std::string& word) const {
    std::vector<NodeId> out = senses_of(word);
    auto it = word_synsets_.find(lowercased(word));
    if (it != word_synsets_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t KnowledgeGraph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix_bytes = [&h](const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    auto mix_str = [&](const std::string& s) { mix_bytes(s.data(), s.size()); };
    auto mix_u64 = [&](std::uint64_t v) { mix_bytes(&v, sizeof v); };

    mix_u64(nodes_.size());
    for (const auto& n : nodes_) {
        mix_str(n.id);
        mix_u64(static_cast<std::uint64_t>(n.kind));
        mix_u64(n.synset);
        for (const auto& l : n.labels) mix_str(l);
    }
    mix_u64(types_.size());
    for (const auto& t : types_) {
        mix_str(t.name);
        mix_u64(static_cast<std::uint64_t>(t.category));
        mix_u64(t.frequency);
    }
    mix_u64(instances_.size());
    for (const auto& i : instances_) {
        mix_u64(i.type);
        mix_u64(pack_pair(i.subject, i.object));
    }
    mix_u64(options_.leaf_counts_self ? 1 : 0);
    return h;
}

}  // namespace kgsim
