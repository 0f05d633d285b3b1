#pragma once
// Intrinsic information-content baselines. Every metric is a pure function
// of the frozen taxonomy; IcTable precomputes all nodes (OpenMP kernel with
// a serial reference path) and holds both raw and min-max normalized values.

#include "kgsim/graph.hpp"
#include "kgsim/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kgsim {

enum class IcMetric { Seco, Zhou, Sebti, Meng, Sanchez, Cai, Zhang };

constexpr IcMetric kAllIcMetrics[] = {IcMetric::Seco, IcMetric::Zhou,    IcMetric::Sebti,
                                      IcMetric::Meng, IcMetric::Sanchez, IcMetric::Cai,
                                      IcMetric::Zhang};

std::string ic_metric_name(IcMetric m);
std::optional<IcMetric> parse_ic_metric(const std::string& name);

struct IcParams {
    double zhou_k = 0.5;  // depth/hyponym blend; the published value is unknown
};

// Single-node evaluation; the table kernel and the tests share it.
double node_ic(const KnowledgeGraph& graph, IcMetric metric, const IcParams& params, NodeId node);

class IcTable {
public:
    static IcTable compute(const KnowledgeGraph& graph, IcMetric metric,
                           const IcParams& params = {}, int threads = 1);

    IcMetric metric() const { return metric_; }
    const IcParams& params() const { return params_; }

    // Senses answer with their synset's value.
    double raw(NodeId n) const { return raw_[n]; }
    // Min-max normalized over synsets; feeds the relation-IC exponentials.
    double normalized(NodeId n) const { return norm_[n]; }

    std::span<const double> raw_values() const { return raw_; }
    std::span<const double> normalized_values() const { return norm_; }
    double raw_min() const { return raw_min_; }
    double raw_max() const { return raw_max_; }

private:
    friend struct TableCodec;
    IcMetric metric_ = IcMetric::Seco;
    IcParams params_;
    std::vector<double> raw_;
    std::vector<double> norm_;
    double raw_min_ = 0.0;
    double raw_max_ = 0.0;
};

}  // namespace kgsim
