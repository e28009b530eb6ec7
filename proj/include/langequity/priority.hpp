#pragma once

#include "langequity/metric.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace langequity {

/// Languages ordered by how much raising their utility to 1 would grow
/// M_tau: marginal gain d_l^(tau) * (1 - u_l).
struct PriorityRanking {
    double tau = 1.0;
    std::vector<std::pair<std::string, double>> ranked; // (iso3, gain) descending
    double basis_metric = 0.0;                          // M_tau before any improvement
};

/// Top-k languages by marginal gain, ties broken by iso3 ascending.
PriorityRanking priority_ranking(const UtilityView& utility,
                                 std::span<const LanguageRecord> universe, double tau,
                                 std::size_t k, const DemandOptions& options = {});
PriorityRanking priority_ranking(const UtilityTable& utility,
                                 std::span<const LanguageRecord> universe, double tau,
                                 std::size_t k, const DemandOptions& options = {});

/// M_tau as languages are forced to utility 1 in population order:
/// element 0 is the current metric, element i the metric after the i most
/// populous languages are served perfectly, and the last element is
/// exactly 1. Population ties break by iso3 ascending.
std::vector<double> greedy_population_curve(const UtilityView& utility,
                                            std::span<const LanguageRecord> universe,
                                            double tau = 1.0, const DemandOptions& options = {});
std::vector<double> greedy_population_curve(const UtilityTable& utility,
                                            std::span<const LanguageRecord> universe,
                                            double tau = 1.0, const DemandOptions& options = {});

} // namespace langequity
