#include "kgsim/ic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgsim {

std::string ic_metric_name(IcMetric m) {
    switch (m) {
        case IcMetric::Seco: return "seco";
        case IcMetric::Zhou: return "zhou";
        case IcMetric::Sebti: return "sebti";
        case IcMetric::Meng: return "meng";
        case IcMetric::Sanchez: return "sanchez";
        case IcMetric::Cai: return "cai";
        case IcMetric::Zhang: return "zhang";
    }
    throw InternalError("bad IcMetric");
}

std::optional<IcMetric> parse_ic_metric(const std::string& name) {
    for (IcMetric m : kAllIcMetrics)
        if (ic_metric_name(m) == name) return m;
    return std::nullopt;
}

namespace {

struct DfsScratch {
    std::vector<std::uint32_t> stamp;
    std::vector<NodeId> stack;
    std::uint32_t epoch = 0;
};

// Seco's hyponym ratio, shared by four of the metrics.
double seco_term(const KnowledgeGraph& g, NodeId n) {
    double log_max = std::log(static_cast<double>(g.max_wn()));
    if (log_max <= 0.0) return 0.0;
    return 1.0 - std::log(static_cast<double>(g.hypo_count(n)) + 1.0) / log_max;
}

double depth_term(const KnowledgeGraph& g, NodeId n) {
    double log_max = std::log(static_cast<double>(g.max_depth()));
    if (log_max <= 0.0) return 0.0;
    return std::log(static_cast<double>(g.depth(n))) / log_max;
}

// Sum of log branching factors over the node's transitive ancestors; equals
// -log of the product of inverse direct-hyponym counts without underflow.
double sebti_value(const KnowledgeGraph& g, NodeId n) {
    double sum = 0.0;
    for (NodeId a : g.subsumers(n)) {
        if (a == n) continue;
        sum += std::log(static_cast<double>(g.direct_hyponym_count(a)));
    }
    return sum;
}

double meng_value(const KnowledgeGraph& g, NodeId n, DfsScratch& scr) {
    double dt = depth_term(g, n);
    if (dt == 0.0) return 0.0;
    double log_max = std::log(static_cast<double>(g.max_wn()));
    if (log_max <= 0.0) return 0.0;
    // Inverse-depth sum over all transitive hyponyms; DFS order is fixed for
    // a frozen graph, so the accumulation is deterministic.
    ++scr.epoch;
    scr.stack.clear();
    double inv_depth_sum = 0.0;
    for (NodeId c : g.children(n)) {
        if (scr.stamp[c] == scr.epoch) continue;
        scr.stamp[c] = scr.epoch;
        scr.stack.push_back(c);
    }
    while (!scr.stack.empty()) {
        NodeId m = scr.stack.back();
        scr.stack.pop_back();
        inv_depth_sum += 1.0 / static_cast<double>(g.depth(m));
        for (NodeId c : g.children(m)) {
            if (scr.stamp[c] == scr.epoch) continue;
            scr.stamp[c] = scr.epoch;
            scr.stack.push_back(c);
        }
    }
    return dt * (1.0 - std::log(inv_depth_sum + 1.0) / log_max);
}

double sanchez_value(const KnowledgeGraph& g, NodeId n) {
    double leaves = static_cast<double>(g.leaf_count(n));
    double subsumers = static_cast<double>(g.subsumers(n).size());
    double max_leaves = static_cast<double>(g.max_leaves());
    return -std::log((leaves / subsumers + 1.0) / (max_leaves + 1.0));
}

// K-blended hyponym term minus the averaged per-parent log of the inverse
// sibling product. The printed formula dips below zero at leaves (K = 0);
// values are clamped into the documented [0, 1] contract.
double zhang_value(const KnowledgeGraph& g, NodeId n) {
    double hypo = static_cast<double>(g.hypo_count(n));
    double hyper = static_cast<double>(g.hyper_count(n));
    double k = (hypo + hyper) == 0.0 ? 0.0 : hypo / (hyper + hypo);
    auto parents = g.parents(n);
    double omega_term = 0.0;
    if (!parents.empty()) {
        double sum = 0.0;
        for (NodeId p : parents) {
            double product = 1.0;
            for (NodeId a : g.subsumers(p))
                product *= 1.0 / static_cast<double>(g.direct_hyponym_count(a));
            sum += std::log(product + 1.0);
        }
        omega_term = sum / static_cast<double>(parents.size());
    }
    double v = k * seco_term(g, n) - (1.0 - k) * omega_term;
    return std::clamp(v, 0.0, 1.0);
}

double node_ic_impl(const KnowledgeGraph& g, IcMetric metric, const IcParams& params, NodeId n,
                    DfsScratch& scr) {
    switch (metric) {
        case IcMetric::Seco: return seco_term(g, n);
        case IcMetric::Zhou:
            return params.zhou_k * seco_term(g, n) + (1.0 - params.zhou_k) * depth_term(g, n);
        case IcMetric::Sebti: return sebti_value(g, n);
        case IcMetric::Meng: return meng_value(g, n, scr);
        case IcMetric::Sanchez: return sanchez_value(g, n);
        case IcMetric::Cai:
            return seco_term(g, n) * std::tanh(static_cast<double>(g.depth(n)));
        case IcMetric::Zhang: return zhang_value(g, n);
    }
    throw InternalError("bad IcMetric");
}

}  // namespace

double node_ic(const KnowledgeGraph& graph, IcMetric metric, const IcParams& params, NodeId node) {
    NodeId synset = graph.resolve_synset(node);
    if (synset == kNoNode || !graph.is_synset(synset))
        throw NotFoundError("ic: node is not in the taxonomy");
    DfsScratch scr;
    scr.stamp.assign(graph.node_count(), 0);
    return node_ic_impl(graph, metric, params, synset, scr);
}

IcTable IcTable::compute(const KnowledgeGraph& graph, IcMetric metric, const IcParams& params,
                         int threads) {
    IcTable table;
    table.metric_ = metric;
    table.params_ = params;
    const std::size_t n = graph.node_count();
    table.raw_.assign(n, 0.0);

#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel num_threads(threads)
        {
            DfsScratch scr;
            scr.stamp.assign(n, 0);
#pragma omp for schedule(dynamic, 256)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
                NodeId node = static_cast<NodeId>(i);
                if (!graph.is_synset(node)) continue;
                table.raw_[node] = node_ic_impl(graph, metric, params, node, scr);
            }
        }
    } else
#endif
    {
        (void)threads;
        DfsScratch scr;
        scr.stamp.assign(n, 0);
        for (NodeId node = 0; node < n; ++node) {
            if (!graph.is_synset(node)) continue;
            table.raw_[node] = node_ic_impl(graph, metric, params, node, scr);
        }
    }

    table.raw_min_ = std::numeric_limits<double>::infinity();
    table.raw_max_ = -std::numeric_limits<double>::infinity();
    for (NodeId node = 0; node < n; ++node) {
        if (!graph.is_synset(node)) continue;
        table.raw_min_ = std::min(table.raw_min_, table.raw_[node]);
        table.raw_max_ = std::max(table.raw_max_, table.raw_[node]);
    }
    double span = table.raw_max_ - table.raw_min_;
    table.norm_.assign(n, 0.0);
    for (NodeId node = 0; node < n; ++node) {
        if (!graph.is_synset(node)) continue;
        table.norm_[node] = span > 0.0 ? (table.raw_[node] - table.raw_min_) / span : 0.0;
    }
    // Senses inherit their synset's position in the taxonomy.
    for (NodeId node = 0; node < n; ++node) {
        if (graph.is_synset(node)) continue;
        NodeId synset = graph.resolve_synset(node);
        table.raw_[node] = table.raw_[synset];
        table.norm_[node] = table.norm_[synset];
    }
    return table;
}

}  // namespace kgsim
