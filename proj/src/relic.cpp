#include "kgsim/relic.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgsim {

namespace {

// The relation-type hierarchy, when present, is itself a small taxonomy;
// reuse the concept IC machinery over a graph of type nodes.
struct TypeTaxonomy {
    bool present = false;
    KnowledgeGraph graph;
    std::vector<NodeId> node_of_type;
};

TypeTaxonomy build_type_taxonomy(const KnowledgeGraph& graph) {
    TypeTaxonomy out;
    const auto& types = graph.relation_types();
    bool any_parent = false;
    for (const auto& t : types) any_parent |= t.parent != kNoType;
    if (!any_parent) return out;

    GraphBuilder builder;
    TypeId isa = builder.add_relation_type("isa", RelationCategory::Taxonomic);
    out.node_of_type.assign(types.size(), kNoNode);
    std::vector<std::uint8_t> in_tree(types.size(), 0);
    for (TypeId t = 0; t < types.size(); ++t) {
        if (types[t].parent == kNoType) continue;
        in_tree[t] = 1;
        in_tree[types[t].parent] = 1;
    }
    for (TypeId t = 0; t < types.size(); ++t)
        if (in_tree[t]) out.node_of_type[t] = builder.add_synset(types[t].name);
    for (TypeId t = 0; t < types.size(); ++t)
        if (types[t].parent != kNoType)
            builder.add_instance(isa, out.node_of_type[t], out.node_of_type[types[t].parent]);
    out.graph = builder.build();
    out.present = true;
    return out;
}

}  // namespace

double relation_ic_tax(const KnowledgeGraph& graph, TypeId type, IcMetric metric,
                       const IcParams& params) {
    if (type >= graph.relation_types().size()) throw NotFoundError("unknown relation type id");
    TypeTaxonomy tree = build_type_taxonomy(graph);
    if (!tree.present || tree.node_of_type[type] == kNoNode) return 0.0;
    return node_ic(tree.graph, metric, params, tree.node_of_type[type]);
}

namespace {

double context_ic(const KnowledgeGraph& graph, const IcTable& ic, NodeId a, NodeId b) {
    double diff = std::fabs(ic.normalized(a) - ic.normalized(b));
    double exponent =
        1.0 / (static_cast<double>(graph.depth(a)) + static_cast<double>(graph.depth(b)));
    return std::pow(diff, exponent);
}

}  // namespace

double relation_ic_gc(const KnowledgeGraph& graph, const IcTable& ic, TypeId type) {
    const auto& rt = graph.relation_types().at(type);
    if (rt.domain == kNoNode || rt.range == kNoNode) return 0.0;
    return context_ic(graph, ic, graph.resolve_synset(rt.domain),
                      graph.resolve_synset(rt.range));
}

double relation_ic_lc(const KnowledgeGraph& graph, const IcTable& ic,
                      const RelationInstance& instance) {
    NodeId s = graph.resolve_synset(instance.subject);
    NodeId o = graph.resolve_synset(instance.object);
    if (s == kNoNode || o == kNoNode)
        throw NotFoundError("relation instance endpoint outside the taxonomy");
    return context_ic(graph, ic, s, o);
}

double prevalence(const KnowledgeGraph& graph, TypeId type) {
    return graph.relation_types().at(type).prevalence;
}

RicTable RicTable::compute(const KnowledgeGraph& graph, const IcTable& ic,
                           const RicWeights& weights, int threads) {
    RicTable table;
    table.weights_ = weights;
    const auto& instances = graph.instances();
    table.ric_.assign(instances.size(), 0.0);

    // Type-level components are shared by every instance of the type.
    const auto& types = graph.relation_types();
    std::vector<double> tax_part(types.size(), 0.0), gc_part(types.size(), 0.0);
    if (weights.alpha != 0.0) {
        TypeTaxonomy tree = build_type_taxonomy(graph);
        for (TypeId t = 0; t < types.size(); ++t)
            if (tree.present && tree.node_of_type[t] != kNoNode)
                tax_part[t] = node_ic(tree.graph, ic.metric(), ic.params(), tree.node_of_type[t]);
    }
    if (weights.beta != 0.0)
        for (TypeId t = 0; t < types.size(); ++t) gc_part[t] = relation_ic_gc(graph, ic, t);

    auto compute_one = [&](InstanceId i) {
        const auto& inst = instances[i];
        if (types[inst.type].category != RelationCategory::NonTaxonomic) return 0.0;
        double lc = weights.gamma != 0.0 ? relation_ic_lc(graph, ic, inst) : 0.0;
        return weights.alpha * tax_part[inst.type] + weights.beta * gc_part[inst.type] +
               weights.gamma * lc;
    };

#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(instances.size()); ++i)
            table.ric_[i] = compute_one(static_cast<InstanceId>(i));
    } else
#endif
    {
        (void)threads;
        for (InstanceId i = 0; i < instances.size(); ++i) table.ric_[i] = compute_one(i);
    }
    return table;
}

}  // namespace kgsim
