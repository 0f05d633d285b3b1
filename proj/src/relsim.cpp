#include "kgsim/relsim.hpp"

#include <algorithm>
#include <cmath>

namespace kgsim {

double mse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InternalError("mse: vector dimensions differ");
    if (a.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.size());
}

namespace {

TermProfile profile_from_nodes(const KnowledgeGraph& graph, std::vector<NodeId> nodes) {
    TermProfile p;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    p.nodes = std::move(nodes);
    for (NodeId n : p.nodes) {
        auto inc = graph.incident_instances(n);
        p.instances.insert(p.instances.end(), inc.begin(), inc.end());
    }
    std::sort(p.instances.begin(), p.instances.end());
    p.instances.erase(std::unique(p.instances.begin(), p.instances.end()), p.instances.end());
    for (InstanceId i : p.instances) p.types.push_back(graph.instances()[i].type);
    std::sort(p.types.begin(), p.types.end());
    p.types.erase(std::unique(p.types.begin(), p.types.end()), p.types.end());
    return p;
}

}  // namespace

TermProfile RelSimEngine::word_profile(const std::string& word) const {
    std::vector<NodeId> nodes = graph_.word_nodes(word);
    std::vector<NodeId> expanded;
    for (NodeId n : nodes) {
        expanded.push_back(n);
        NodeId synset = graph_.resolve_synset(n);
        if (synset != kNoNode) expanded.push_back(synset);
    }
    return profile_from_nodes(graph_, std::move(expanded));
}

TermProfile RelSimEngine::node_profile(NodeId node) const {
    std::vector<NodeId> nodes{node};
    const Node& nd = graph_.node(node);
    if (nd.kind == NodeKind::Synset) {
        nodes.insert(nodes.end(), nd.members.begin(), nd.members.end());
    } else if (nd.synset != kNoNode) {
        nodes.push_back(nd.synset);
    }
    return profile_from_nodes(graph_, std::move(nodes));
}

double RelSimEngine::semic_scalar(const TermProfile& p) const {
    const auto& types = graph_.relation_types();
    double sum = 0.0;
    for (InstanceId i : p.instances) {
        const auto& inst = graph_.instances()[i];
        sum += types[inst.type].prevalence * ric_.value(i);
    }
    return std::log(sum + 1.0);
}

std::vector<double> RelSimEngine::type_vector(const TermProfile& p) const {
    const auto& slots = graph_.nontaxonomic_types();
    std::vector<double> sums(slots.size(), 0.0);
    std::vector<std::uint32_t> counts(slots.size(), 0);
    std::vector<std::size_t> slot_of(graph_.relation_types().size(), slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) slot_of[slots[s]] = s;
    for (InstanceId i : p.instances) {
        std::size_t s = slot_of[graph_.instances()[i].type];
        sums[s] += ric_.value(i);
        ++counts[s];
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
        if (counts[s] > 0) sums[s] /= static_cast<double>(counts[s]);
    return sums;
}

std::vector<double> RelSimEngine::instance_rics(const TermProfile& p, TypeId type) const {
    std::vector<double> out;
    for (InstanceId i : p.instances)
        if (graph_.instances()[i].type == type) out.push_back(ric_.value(i));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double RelSimEngine::rel_sim_s1(NodeId best_a, NodeId best_b, NodeId lcs) const {
    if (best_a == kNoNode || best_b == kNoNode) return 0.0;
    double sem_a = semic_scalar(node_profile(best_a));
    double sem_b = semic_scalar(node_profile(best_b));
    if (sem_a == 0.0 && sem_b == 0.0) return 0.0;
    double sem_lcs = lcs == kNoNode ? 0.0 : semic_scalar(node_profile(lcs));

    switch (measure_) {
        case TaxMeasure::Resnik: return sem_lcs;
        case TaxMeasure::Lin: {
            double denom = sem_a + sem_b;
            return denom == 0.0 ? 0.0 : 2.0 * sem_lcs / denom;
        }
        case TaxMeasure::JC: return 1.0 - (sem_a + sem_b - 2.0 * sem_lcs) / 2.0;
        case TaxMeasure::Cai1: {
            double spl_w = sem_a + sem_b - 2.0 * sem_lcs;
            double spl_n = 0.0;
            if (best_a != kNoNode && best_b != kNoNode)
                spl_n = static_cast<double>(graph_.taxonomic_path_length(best_a, best_b)) /
                        (2.0 * static_cast<double>(graph_.max_depth()));
            return std::exp(-(params_.cai_alpha * spl_w + params_.cai_beta * spl_n));
        }
        case TaxMeasure::Cai2: {
            double spl_w = sem_a + sem_b - 2.0 * sem_lcs;
            double spl_o = 0.0;
            if (best_a != kNoNode && best_b != kNoNode && lcs != kNoNode)
                spl_o = std::log(
                    (static_cast<double>(graph_.depth(best_a)) + graph_.depth(best_b) + 1.0) /
                    (2.0 * static_cast<double>(graph_.depth(lcs)) + 1.0));
            return std::exp(-(params_.cai_alpha * spl_w + params_.cai_beta * spl_o));
        }
        case TaxMeasure::Zhang: {
            double denom = sem_a + sem_b;
            if (denom == 0.0) return 0.0;
            double ratio = 2.0 * sem_lcs / denom;
            if (2.0 - ratio <= 0.0) return 1.0;
            double lg = std::log(2.0 - ratio);
            if (params_.zhang_log10) lg /= std::log(10.0);
            return 1.0 - lg;
        }
    }
    throw InternalError("bad TaxMeasure");
}

double RelSimEngine::rel_sim_s2(const TermProfile& a, const TermProfile& b) const {
    return 1.0 - mse(type_vector(a), type_vector(b));
}

double RelSimEngine::rel_type_sim(TypeId type, const TermProfile& a, const TermProfile& b) const {
    std::vector<double> va = instance_rics(a, type);
    std::vector<double> vb = instance_rics(b, type);
    std::size_t n = std::max(va.size(), vb.size());
    va.resize(n, 0.0);
    vb.resize(n, 0.0);
    return 1.0 - mse(va, vb);
}

std::vector<TypeId> RelSimEngine::common_types(const TermProfile& a, const TermProfile& b) const {
    std::vector<TypeId> out;
    std::set_intersection(a.types.begin(), a.types.end(), b.types.begin(), b.types.end(),
                          std::back_inserter(out));
    return out;
}

std::optional<double> RelSimEngine::rel_sim_s3(const TermProfile& a, const TermProfile& b) const {
    auto common = common_types(a, b);
    if (common.empty()) return std::nullopt;
    const auto& types = graph_.relation_types();
    double weight_sum = 0.0;
    double weighted = 0.0;
    for (TypeId t : common) {
        double p = types[t].prevalence;
        weight_sum += p;
        weighted += p * rel_type_sim(t, a, b);
    }
    if (weight_sum == 0.0) return 0.0;
    return weighted / weight_sum;
}

double RelSimEngine::alpha1(const TermProfile& a, const TermProfile& b) const {
    const auto& types = graph_.relation_types();
    double sum = 0.0;
    for (TypeId t : common_types(a, b)) sum += types[t].prevalence;
    return std::clamp(sum, 0.0, 1.0);
}

double combine_semsim(double tax_sim, double rel_sim, double alpha1) {
    return (1.0 - alpha1) * tax_sim + alpha1 * rel_sim;
}

}  // namespace kgsim
