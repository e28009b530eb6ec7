#pragma once

#include <span>
#include <vector>

namespace langequity::stats {

/// Midranks (1-based, ties averaged).
std::vector<double> midranks(std::span<const double> values);

/// Spearman rank correlation with tie-aware midranks. Returns NaN when
/// either side has zero rank variance.
double spearman(std::span<const double> x, std::span<const double> y);

double pearson(std::span<const double> x, std::span<const double> y);

} // namespace langequity::stats
