#pragma once
// IC-parameterized taxonomic similarity measures and the word-level
// max-over-senses policy.

#include "kgsim/graph.hpp"
#include "kgsim/ic.hpp"

#include <optional>
#include <string>

namespace kgsim {

enum class TaxMeasure { Resnik, Lin, JC, Cai1, Cai2, Zhang };

constexpr TaxMeasure kAllTaxMeasures[] = {TaxMeasure::Resnik, TaxMeasure::Lin,
                                          TaxMeasure::JC,     TaxMeasure::Cai1,
                                          TaxMeasure::Cai2,   TaxMeasure::Zhang};

std::string tax_measure_name(TaxMeasure m);
std::optional<TaxMeasure> parse_tax_measure(const std::string& name);

struct TaxSimParams {
    double cai_alpha = 0.5;  // exponent weights; unpublished, configurable
    double cai_beta = 0.5;
    bool zhang_log10 = false;  // natural log unless asked otherwise
};

struct PairSim {
    double value = 0.0;
    NodeId lcs = kNoNode;
};

// Both nodes resolve to synsets; symmetric. Lin/Zhang with a zero IC
// denominator score 1 for identical nodes and 0 otherwise.
PairSim tax_sim(const KnowledgeGraph& graph, const IcTable& ic, TaxMeasure measure,
                const TaxSimParams& params, NodeId a, NodeId b);

struct WordSim {
    double value = 0.0;
    bool known_a = false;
    bool known_b = false;
    NodeId best_a = kNoNode;  // argmax synset pair
    NodeId best_b = kNoNode;
    NodeId lcs = kNoNode;
};

// Max of tax_sim over the cross product of the words' candidate synsets.
// Unknown words yield value 0 with the known flag cleared.
WordSim word_tax_sim(const KnowledgeGraph& graph, const IcTable& ic, TaxMeasure measure,
                     const TaxSimParams& params, const std::string& word_a,
                     const std::string& word_b);

// Candidate synsets for a word, sorted; empty when unknown.
std::vector<NodeId> word_synsets(const KnowledgeGraph& graph, const std::string& word);

}  // namespace kgsim
