#pragma once
// Non-taxonomic relational paths: bounded simple-path enumeration, the
// prevalence-weighted path distance, relatedness, and the strategy-4
// combination.

#include "kgsim/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kgsim {

// A path starts at `start` and follows `hops` over non-taxonomic arcs;
// length == hops.size() >= 1.
struct RelationalPath {
    NodeId start = kNoNode;
    std::vector<Arc> hops;
};

struct PathParams {
    std::size_t max_len = 0;      // 0 -> the taxonomy's max depth
    std::size_t max_paths = 1000; // enumeration cap; shortest kept first
};

struct PathSet {
    std::vector<RelationalPath> paths;
    bool truncated = false;
};

// All simple paths from a source node to a target node, shortest first,
// lexicographic within a length. Nodes from either endpoint set never appear
// in a path's interior, and zero-length overlaps are not paths.
PathSet enumerate_paths(const KnowledgeGraph& graph, std::span<const NodeId> sources,
                        std::span<const NodeId> targets, const PathParams& params = {});

// (1 / max_depth) * sum of e^(-prevalence) over the path's arcs.
double path_distance(const KnowledgeGraph& graph, const RelationalPath& path);

// Mean of (1 - distance) over the given per-path distances; 0 when empty.
double relatedness_from_distances(std::span<const double> distances);

struct RelatednessResult {
    double value = 0.0;
    std::size_t path_count = 0;
    bool truncated = false;
};

// Word-level relatedness over the words' sense/synset node sets. The pair
// is canonicalized internally so results are bit-identical under argument
// swap.
RelatednessResult relatedness(const KnowledgeGraph& graph, const std::string& word_a,
                              const std::string& word_b, const PathParams& params = {});

struct S4Weights {
    double alpha2 = 0.12;
    double beta = 0.55;
};

// (1 - alpha2 - beta) * tax + alpha2 * rel + beta * relatedness.
double sem_sim_rel_s4(double tax_sim, double rel_sim, double relatedness,
                      const S4Weights& weights = {});

}  // namespace kgsim
