#pragma once
// Non-taxonomic relational similarity at three granularities: scalar
// semantic IC (strategy 1), per-type average RIC vectors (strategy 2) and
// per-type instance RIC vectors (strategy 3), plus the prevalence-weighted
// combination with taxonomic similarity.

#include "kgsim/graph.hpp"
#include "kgsim/ic.hpp"
#include "kgsim/relic.hpp"
#include "kgsim/taxsim.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kgsim {

// A term is a set of graph nodes: for a word its senses and their synsets,
// for a synset the synset and its member senses. `instances` is the deduped
// union of non-taxonomic instances incident to any node of the set.
struct TermProfile {
    std::vector<NodeId> nodes;
    std::vector<InstanceId> instances;
    std::vector<TypeId> types;  // sorted unique types present
};

double mse(std::span<const double> a, std::span<const double> b);

class RelSimEngine {
public:
    RelSimEngine(const KnowledgeGraph& graph, const IcTable& ic, const RicTable& ric,
                 TaxMeasure measure, const TaxSimParams& params)
        : graph_(graph), ic_(ic), ric_(ric), measure_(measure), params_(params) {}

    TermProfile word_profile(const std::string& word) const;
    TermProfile node_profile(NodeId node) const;

    // Prevalence-weighted RIC aggregate, log(sum + 1).
    double semic_scalar(const TermProfile& p) const;
    // Average RIC per non-taxonomic type in canonical slot order.
    std::vector<double> type_vector(const TermProfile& p) const;
    // Descending instance RICs of one type; empty when absent.
    std::vector<double> instance_rics(const TermProfile& p, TypeId type) const;

    // Strategy 1: the taxonomic similarity formula with semantic IC
    // substituted for concept IC. Evaluated on the best taxonomic sense
    // pair and its LCS, each taken as a node profile, so identical terms
    // with non-zero semantic IC score 1 under ratio-style measures.
    double rel_sim_s1(NodeId best_a, NodeId best_b, NodeId lcs) const;
    // Strategy 2: 1 - MSE over the fixed type-slot vectors.
    double rel_sim_s2(const TermProfile& a, const TermProfile& b) const;
    // 1 - MSE over one type's aligned instance vectors (descending sort,
    // zero-padded to equal length).
    double rel_type_sim(TypeId type, const TermProfile& a, const TermProfile& b) const;
    // Strategy 3: prevalence-normalized mean of rel_type_sim over common
    // types; no common types -> no signal.
    std::optional<double> rel_sim_s3(const TermProfile& a, const TermProfile& b) const;

    // Total prevalence of the common non-taxonomic types, clamped to [0,1].
    double alpha1(const TermProfile& a, const TermProfile& b) const;
    std::vector<TypeId> common_types(const TermProfile& a, const TermProfile& b) const;

    const KnowledgeGraph& graph() const { return graph_; }

private:
    const KnowledgeGraph& graph_;
    const IcTable& ic_;
    const RicTable& ric_;
    TaxMeasure measure_;
    TaxSimParams params_;
};

// (1 - alpha1) * tax + alpha1 * rel.
double combine_semsim(double tax_sim, double rel_sim, double alpha1);

}  // namespace kgsim
