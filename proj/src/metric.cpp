#include "langequity/metric.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

namespace langequity {

UtilityView::UtilityView(const UtilityTable& table)
    : policy_(table.default_policy), task_id_(table.task_id) {
    if (table.is_pair_table())
        raise(Errc::UniverseMismatch,
              "task '" + table.task_id + "' stores language pairs; a counterpart is required");
    for (const auto& [subject, utility] : table.entries) values_.emplace(subject.src, utility);
}

UtilityView::UtilityView(const UtilityTable& table, Counterpart counterpart)
    : policy_(table.default_policy), task_id_(table.task_id) {
    if (!table.entries.empty() && !table.is_pair_table())
        raise(Errc::UniverseMismatch,
              "task '" + table.task_id + "' is monolingual; counterpart '" + counterpart.iso3 +
                  "' does not apply");
    // Keep only pairs on the counterpart's side of the table.
    for (const auto& [subject, utility] : table.entries) {
        if (counterpart.side == PairSide::to && subject.tgt == counterpart.iso3)
            values_.emplace(subject.src, utility);
        else if (counterpart.side == PairSide::from && subject.src == counterpart.iso3)
            values_.emplace(subject.tgt, utility);
    }
}

UtilityView::UtilityView(const PivotEstimates& estimates, Counterpart counterpart,
                         DefaultPolicy policy)
    : policy_(policy), task_id_("mt") {
    // An unreachable pair carries estimate 0 with an empty path; it has
    // no stored utility, so it falls through to the default instead of
    // counting as covered.
    for (const auto& [key, estimate] : estimates) {
        if (estimate.path.empty()) continue;
        if (counterpart.side == PairSide::to && key.second == counterpart.iso3)
            values_.emplace(key.first, estimate.estimate);
        else if (counterpart.side == PairSide::from && key.first == counterpart.iso3)
            values_.emplace(key.second, estimate.estimate);
    }
}

double UtilityView::value(const std::string& iso3) const {
    auto it = values_.find(iso3);
    return it != values_.end() ? it->second : policy_.value();
}

bool UtilityView::covered(const std::string& iso3) const { return values_.contains(iso3); }

namespace {

MetricReport compute(const UtilityView& utility, const DemandVector& demand) {
    MetricReport report;
    report.task_id = utility.task_id();
    report.tau = demand.tau;
    for (const auto& [iso3, weight] : demand.weights) {
        const double contribution = weight * utility.value(iso3);
        report.contributions.emplace(iso3, contribution);
        report.value += contribution;
        if (utility.covered(iso3)) ++report.coverage;
    }
    return report;
}

} // namespace

MetricReport global_metric(const UtilityView& utility, const DemandVector& demand) {
    return compute(utility, demand);
}

MetricReport global_metric(const UtilityTable& utility, const DemandVector& demand) {
    return compute(UtilityView(utility), demand);
}

MetricReport global_metric(const UtilityTable& utility, const DemandVector& demand,
                           const Counterpart& counterpart) {
    if (demand.contains(counterpart.iso3))
        raise(Errc::UniverseMismatch,
              "counterpart '" + counterpart.iso3 + "' must be excluded from the demand universe");
    return compute(UtilityView(utility, counterpart), demand);
}

std::vector<MetricReport> metric_curve(const UtilityView& utility,
                                       std::span<const LanguageRecord> universe,
                                       std::span<const double> taus,
                                       const DemandOptions& options) {
    if (taus.empty()) raise(Errc::InvalidArgument, "tau grid is empty");
    std::vector<MetricReport> reports;
    reports.reserve(taus.size());
    for (double tau : taus)
        reports.push_back(compute(utility, demand_vector(universe, tau, options)));
    return reports;
}

std::vector<MetricReport> metric_curve(const UtilityTable& utility,
                                       std::span<const LanguageRecord> universe,
                                       std::span<const double> taus,
                                       const DemandOptions& options) {
    return metric_curve(UtilityView(utility), universe, taus, options);
}

std::vector<double> default_tau_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    return grid;
}

MetricReport restricted_metric(const UtilityView& utility, const DemandVector& demand,
                               std::span<const std::string> subset) {
    if (subset.empty()) raise(Errc::EmptySubset, "restricted metric over an empty subset");
    double total = 0.0;
    for (const std::string& iso3 : subset) total += demand.weight(iso3);
    if (total <= 0.0)
        raise(Errc::AllZeroPopulations, "subset carries no demand weight to renormalize");

    MetricReport report;
    report.task_id = utility.task_id();
    report.tau = demand.tau;
    std::set<std::string> seen;
    for (const std::string& iso3 : subset) {
        if (!seen.insert(iso3).second)
            raise(Errc::InvalidArgument, "duplicate subset language '" + iso3 + "'");
        const double contribution = demand.weight(iso3) / total * utility.value(iso3);
        report.contributions.emplace(iso3, contribution);
        report.value += contribution;
        if (utility.covered(iso3)) ++report.coverage;
    }
    return report;
}

MetricReport restricted_metric(const UtilityTable& utility, const DemandVector& demand,
                               std::span<const std::string> subset) {
    return restricted_metric(UtilityView(utility), demand, subset);
}

} // namespace langequity
