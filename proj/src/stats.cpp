#include "kgsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kgsim {

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DataError("pearson: length mismatch");
    std::size_t n = xs.size();
    if (n < 2) throw DataError("pearson: need at least two samples");
    double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(n);
    double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(n);
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mean_x;
        double dy = ys[i] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0) throw DataError("pearson: zero variance");
    return cov / std::sqrt(var_x * var_y);
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DataError("spearman: length mismatch");
    auto rx = fractional_ranks(xs);
    auto ry = fractional_ranks(ys);
    return pearson(rx, ry);
}

double gain(double poly_corr, double baseline_corr) {
    if (baseline_corr == 0.0) throw DataError("gain: zero baseline correlation");
    return (poly_corr - baseline_corr) / baseline_corr;
}

}  // namespace kgsim
