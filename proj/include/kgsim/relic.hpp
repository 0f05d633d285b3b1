#pragma once
// Relation information content: taxonomic, global-context and local-context
// components with their weighted combination, plus relation prevalence.

#include "kgsim/graph.hpp"
#include "kgsim/ic.hpp"

#include <cstdint>
#include <vector>

namespace kgsim {

struct RicWeights {
    double alpha = 0.0;  // taxonomic component; 0 for WordNet's flat hierarchy
    double beta = 0.0;   // global context; WordNet declares no domain/range
    double gamma = 1.0;  // local context
};

// Base IC of the relation type inside the relation-type hierarchy; 0 when
// the graph declares no hierarchy (the WordNet case).
double relation_ic_tax(const KnowledgeGraph& graph, TypeId type, IcMetric metric,
                       const IcParams& params = {});

// |ic(domain) - ic(range)| ^ (1 / (depth(domain) + depth(range))) over
// normalized IC; 0 when the type declares no domain/range.
double relation_ic_gc(const KnowledgeGraph& graph, const IcTable& ic, TypeId type);

// |ic(subject) - ic(object)| ^ (1 / (depth(subject) + depth(object))) over
// normalized IC; endpoints resolve through their synsets.
double relation_ic_lc(const KnowledgeGraph& graph, const IcTable& ic,
                      const RelationInstance& instance);

double prevalence(const KnowledgeGraph& graph, TypeId type);

// Per-instance RIC under fixed weights; non-taxonomic instances only
// (others hold 0). OpenMP kernel with a serial reference path.
class RicTable {
public:
    static RicTable compute(const KnowledgeGraph& graph, const IcTable& ic,
                            const RicWeights& weights = {}, int threads = 1);

    double value(InstanceId i) const { return ric_[i]; }
    std::span<const double> values() const { return ric_; }
    const RicWeights& weights() const { return weights_; }

private:
    friend struct TableCodec;
    RicWeights weights_;
    std::vector<double> ric_;
};

}  // namespace kgsim
