#include "kgsim/taxsim.hpp"

#include <algorithm>
#include <cmath>

namespace kgsim {

std::string tax_measure_name(TaxMeasure m) {
    switch (m) {
        case TaxMeasure::Resnik: return "resnik";
        case TaxMeasure::Lin: return "lin";
        case TaxMeasure::JC: return "jc";
        case TaxMeasure::Cai1: return "cai1";
        case TaxMeasure::Cai2: return "cai2";
        case TaxMeasure::Zhang: return "zhang";
    }
    throw InternalError("bad TaxMeasure");
}

std::optional<TaxMeasure> parse_tax_measure(const std::string& name) {
    for (TaxMeasure m : kAllTaxMeasures)
        if (tax_measure_name(m) == name) return m;
    if (name == "cai") return TaxMeasure::Cai1;
    return std::nullopt;
}

PairSim tax_sim(const KnowledgeGraph& graph, const IcTable& ic, TaxMeasure measure,
                const TaxSimParams& params, NodeId a, NodeId b) {
    a = graph.resolve_synset(a);
    b = graph.resolve_synset(b);
    PairSim out;
    out.lcs = graph.lcs(a, b, ic.raw_values());
    double ic_a = ic.raw(a);
    double ic_b = ic.raw(b);
    double ic_lcs = ic.raw(out.lcs);

    switch (measure) {
        case TaxMeasure::Resnik: {
            out.value = ic_lcs;
            break;
        }
        case TaxMeasure::Lin: {
            double denom = ic_a + ic_b;
            out.value = denom == 0.0 ? (a == b ? 1.0 : 0.0) : 2.0 * ic_lcs / denom;
            break;
        }
        case TaxMeasure::JC: {
            out.value = 1.0 - (ic_a + ic_b - 2.0 * ic_lcs) / 2.0;
            break;
        }
        case TaxMeasure::Cai1: {
            double spl_w = ic_a + ic_b - 2.0 * ic_lcs;
            double spl_n = static_cast<double>(graph.taxonomic_path_length(a, b)) /
                           (2.0 * static_cast<double>(graph.max_depth()));
            out.value = std::exp(-(params.cai_alpha * spl_w + params.cai_beta * spl_n));
            break;
        }
        case TaxMeasure::Cai2: {
            double spl_w = ic_a + ic_b - 2.0 * ic_lcs;
            double spl_o =
                std::log((static_cast<double>(graph.depth(a)) + graph.depth(b) + 1.0) /
                         (2.0 * static_cast<double>(graph.depth(out.lcs)) + 1.0));
            out.value = std::exp(-(params.cai_alpha * spl_w + params.cai_beta * spl_o));
            break;
        }
        case TaxMeasure::Zhang: {
            double denom = ic_a + ic_b;
            if (denom == 0.0) {
                out.value = a == b ? 1.0 : 0.0;
                break;
            }
            double ratio = 2.0 * ic_lcs / denom;
            if (2.0 - ratio <= 0.0) {
                out.value = 1.0;
                break;
            }
            double lg = std::log(2.0 - ratio);
            if (params.zhang_log10) lg /= std::log(10.0);
            out.value = 1.0 - lg;
            break;
        }
    }
    return out;
}

std::vector<NodeId> word_synsets(const KnowledgeGraph& graph, const std::string& word) {
    std::vector<NodeId> out;
    for (NodeId n : graph.word_nodes(word)) {
        NodeId s = graph.resolve_synset(n);
        if (s != kNoNode) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WordSim word_tax_sim(const KnowledgeGraph& graph, const IcTable& ic, TaxMeasure measure,
                     const TaxSimParams& params, const std::string& word_a,
                     const std::string& word_b) {
    WordSim out;
    auto ca = word_synsets(graph, word_a);
    auto cb = word_synsets(graph, word_b);
    out.known_a = !ca.empty();
    out.known_b = !cb.empty();
    if (!out.known_a || !out.known_b) return out;

    bool first = true;
    for (NodeId a : ca)
        for (NodeId b : cb) {
            PairSim s = tax_sim(graph, ic, measure, params, a, b);
            if (first || s.value > out.value) {
                out.value = s.value;
                out.best_a = a;
                out.best_b = b;
                out.lcs = s.lcs;
                first = false;
            }
        }
    return out;
}

}  // namespace kgsim
