#include "kgsim/paths.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace kgsim {

namespace {

// Global step guard for pathological neighborhoods (large synonym cliques);
// enumeration stays deterministic, the result is just marked truncated.
constexpr std::size_t kMaxDfsSteps = 5'000'000;

struct EnumState {
    const KnowledgeGraph& graph;
    std::vector<std::uint8_t> endpoint;  // source or target: excluded interior
    std::vector<std::uint8_t> is_target;
    std::vector<std::uint8_t> on_path;
    std::vector<std::uint32_t> dist_to_target;  // admissible prune bound
    std::size_t steps = 0;
};

// Exact-length DFS with an explicit stack; paths end at the first target.
bool collect_length(EnumState& st, NodeId source, std::size_t length, const PathParams& params,
                    PathSet& out) {
    struct Frame {
        NodeId node;
        std::size_t next_arc;
    };
    std::vector<Frame> stack{{source, 0}};
    std::vector<Arc> path;
    st.on_path[source] = 1;

    while (!stack.empty()) {
        Frame& f = stack.back();
        auto arcs = st.graph.arcs(f.node);
        std::size_t depth = stack.size() - 1;
        bool advanced = false;
        while (f.next_arc < arcs.size()) {
            const Arc a = arcs[f.next_arc++];
            if (++st.steps > kMaxDfsSteps) {
                out.truncated = true;
                break;
            }
            if (st.on_path[a.to]) continue;
            std::size_t new_depth = depth + 1;
            if (new_depth + st.dist_to_target[a.to] > length) continue;
            if (new_depth == length) {
                if (!st.is_target[a.to]) continue;
                RelationalPath p;
                p.start = source;
                p.hops = path;
                p.hops.push_back(a);
                out.paths.push_back(std::move(p));
                if (out.paths.size() >= params.max_paths) {
                    out.truncated = true;
                    break;
                }
                continue;
            }
            if (st.endpoint[a.to]) continue;  // interior stays clear of both sets
            stack.push_back({a.to, 0});
            st.on_path[a.to] = 1;
            path.push_back(a);
            advanced = true;
            break;
        }
        if (out.truncated) break;
        if (!advanced) {
            st.on_path[f.node] = 0;
            if (!path.empty()) path.pop_back();
            stack.pop_back();
        }
    }
    for (const Frame& f : stack) st.on_path[f.node] = 0;
    return !out.truncated;
}

}  // namespace

PathSet enumerate_paths(const KnowledgeGraph& graph, std::span<const NodeId> sources,
                        std::span<const NodeId> targets, const PathParams& params) {
    PathSet out;
    if (sources.empty() || targets.empty()) return out;
    std::size_t max_len = params.max_len > 0 ? params.max_len : graph.max_depth();

    EnumState st{graph, {}, {}, {}, {}, 0};
    const std::size_t n = graph.node_count();
    st.endpoint.assign(n, 0);
    st.is_target.assign(n, 0);
    st.on_path.assign(n, 0);
    for (NodeId s : sources) st.endpoint[s] = 1;
    for (NodeId t : targets) {
        st.endpoint[t] = 1;
        st.is_target[t] = 1;
    }

    // Distance-to-target lower bounds over the undirected arc graph; nodes
    // that cannot reach any target inside the cap are never expanded.
    st.dist_to_target.assign(n, std::numeric_limits<std::uint32_t>::max() / 2);
    {
        std::deque<NodeId> queue;
        for (NodeId t : targets) {
            st.dist_to_target[t] = 0;
            queue.push_back(t);
        }
        while (!queue.empty()) {
            NodeId v = queue.front();
            queue.pop_front();
            if (st.dist_to_target[v] >= max_len) continue;
            for (const Arc& a : graph.arcs(v)) {
                if (st.dist_to_target[a.to] <= st.dist_to_target[v] + 1) continue;
                st.dist_to_target[a.to] = st.dist_to_target[v] + 1;
                queue.push_back(a.to);
            }
        }
    }

    // Iterative deepening keeps emission order shortest-first, and within a
    // length lexicographic by source id then sorted arc order.
    for (std::size_t length = 1; length <= max_len && !out.truncated; ++length) {
        for (NodeId s : sources) {
            if (st.dist_to_target[s] > length) continue;
            if (!collect_length(st, s, length, params, out)) break;
        }
    }
    return out;
}

double path_distance(const KnowledgeGraph& graph, const RelationalPath& path) {
    const auto& types = graph.relation_types();
    double sum = 0.0;
    for (const Arc& a : path.hops) sum += std::exp(-types[a.type].prevalence);
    return sum / static_cast<double>(graph.max_depth());
}

double relatedness_from_distances(std::span<const double> distances) {
    if (distances.empty()) return 0.0;
    double sum = 0.0;
    for (double d : distances) sum += 1.0 - d;
    return sum / static_cast<double>(distances.size());
}

RelatednessResult relatedness(const KnowledgeGraph& graph, const std::string& word_a,
                              const std::string& word_b, const PathParams& params) {
    std::vector<NodeId> na = graph.word_nodes(word_a);
    std::vector<NodeId> nb = graph.word_nodes(word_b);
    // Canonical orientation: inverse-paired types carry slightly different
    // prevalences, so the two directions are only bit-identical if one is
    // always enumerated.
    if (std::lexicographical_compare(nb.begin(), nb.end(), na.begin(), na.end())) na.swap(nb);

    RelatednessResult out;
    if (na.empty() || nb.empty()) return out;
    PathSet set = enumerate_paths(graph, na, nb, params);
    out.path_count = set.paths.size();
    out.truncated = set.truncated;
    if (set.paths.empty()) return out;

    std::vector<double> distances;
    distances.reserve(set.paths.size());
    for (const auto& p : set.paths) distances.push_back(path_distance(graph, p));
    std::sort(distances.begin(), distances.end());
    out.value = relatedness_from_distances(distances);
    return out;
}

double sem_sim_rel_s4(double tax_sim, double rel_sim, double relatedness,
                      const S4Weights& weights) {
    return (1.0 - weights.alpha2 - weights.beta) * tax_sim + weights.alpha2 * rel_sim +
           weights.beta * relatedness;
}

}  // namespace kgsim
