#pragma once

#include "langequity/demand.hpp"
#include "langequity/pivot.hpp"
#include "langequity/registry.hpp"
#include "langequity/utility.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace langequity {

/// For translation tasks, the language fixed on one side of every pair.
/// side == to: utilities are read from pairs (l -> iso3); side == from:
/// pairs (iso3 -> l). The counterpart never belongs to the demand
/// universe.
struct Counterpart {
    std::string iso3;
    PairSide side = PairSide::to;

    Subject subject_for(const std::string& language) const {
        return side == PairSide::to ? Subject::pair(language, iso3)
                                    : Subject::pair(iso3, language);
    }
};

/// Per-language utility lookup that hides whether values come from a
/// monolingual table, a pair table read against a fixed counterpart, or
/// pivot-path estimates. Missing languages fall back to the default
/// policy. Owns a flattened copy of the values, so it stays valid after
/// the source table is gone.
class UtilityView {
public:
    explicit UtilityView(const UtilityTable& table);
    UtilityView(const UtilityTable& table, Counterpart counterpart);
    UtilityView(const PivotEstimates& estimates, Counterpart counterpart,
                DefaultPolicy policy = DefaultPolicy::zero());

    /// Utility for a language, default applied.
    double value(const std::string& iso3) const;
    /// True when the language has a stored (non-default) utility.
    bool covered(const std::string& iso3) const;
    const std::string& task_id() const { return task_id_; }

private:
    std::map<std::string, double> values_;
    DefaultPolicy policy_;
    std::string task_id_;
};

/// One evaluation of the global metric: M_tau = sum_l d_l^(tau) * u_l,
/// always in [0,1]. Contributions hold each language's d*u term and sum
/// to the value; coverage counts universe languages with stored utility.
struct MetricReport {
    std::string task_id;
    double tau = 1.0;
    double value = 0.0;
    std::map<std::string, double> contributions;
    std::size_t coverage = 0;
};

MetricReport global_metric(const UtilityView& utility, const DemandVector& demand);
MetricReport global_metric(const UtilityTable& utility, const DemandVector& demand);
MetricReport global_metric(const UtilityTable& utility, const DemandVector& demand,
                           const Counterpart& counterpart);

/// M_tau at every grid point, with demand rebuilt per tau over the given
/// universe.
std::vector<MetricReport> metric_curve(const UtilityView& utility,
                                       std::span<const LanguageRecord> universe,
                                       std::span<const double> taus,
                                       const DemandOptions& options = {});
std::vector<MetricReport> metric_curve(const UtilityTable& utility,
                                       std::span<const LanguageRecord> universe,
                                       std::span<const double> taus,
                                       const DemandOptions& options = {});

/// Default tau grid for sweeps: 0, 0.1, ..., 1.0.
std::vector<double> default_tau_grid();

/// M_tau over a subset of the universe, with the subset's demand weights
/// renormalized to sum to 1. Every subset member must carry demand weight.
MetricReport restricted_metric(const UtilityView& utility, const DemandVector& demand,
                               std::span<const std::string> subset);
MetricReport restricted_metric(const UtilityTable& utility, const DemandVector& demand,
                               std::span<const std::string> subset);

} // namespace langequity
