#pragma once
// Correlation metrics for the evaluation harness.

#include "kgsim/types.hpp"

#include <span>
#include <vector>

namespace kgsim {

// Sample Pearson correlation; requires n >= 2 and non-zero variance on both
// sides (DataError otherwise).
double pearson(std::span<const double> xs, std::span<const double> ys);

// 1-based fractional ranks; ties receive the average of their rank block.
std::vector<double> fractional_ranks(std::span<const double> values);

// Pearson over fractional ranks: equals the classic d^2 formula when there
// are no ties and stays correct under ties.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Relative correlation improvement over a baseline; baseline must be
// non-zero.
double gain(double poly_corr, double baseline_corr);

}  // namespace kgsim
