#include "langequity/priority.hpp"

#include "langequity/errors.hpp"

#include <algorithm>

namespace langequity {

PriorityRanking priority_ranking(const UtilityView& utility,
                                 std::span<const LanguageRecord> universe, double tau,
                                 std::size_t k, const DemandOptions& options) {
    if (k == 0) raise(Errc::InvalidArgument, "ranking needs k >= 1");
    const DemandVector demand = demand_vector(universe, tau, options);

    PriorityRanking ranking;
    ranking.tau = tau;
    std::vector<std::pair<std::string, double>> gains;
    gains.reserve(demand.weights.size());
    for (const auto& [iso3, weight] : demand.weights) {
        const double u = utility.value(iso3);
        gains.emplace_back(iso3, weight * (1.0 - u));
        ranking.basis_metric += weight * u;
    }
    std::sort(gains.begin(), gains.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (gains.size() > k) gains.resize(k);
    ranking.ranked = std::move(gains);
    return ranking;
}

PriorityRanking priority_ranking(const UtilityTable& utility,
                                 std::span<const LanguageRecord> universe, double tau,
                                 std::size_t k, const DemandOptions& options) {
    return priority_ranking(UtilityView(utility), universe, tau, k, options);
}

std::vector<double> greedy_population_curve(const UtilityView& utility,
                                            std::span<const LanguageRecord> universe, double tau,
                                            const DemandOptions& options) {
    const DemandVector demand = demand_vector(universe, tau, options);

    // Force order: population descending, iso3 tie-break.
    std::vector<const LanguageRecord*> order;
    order.reserve(universe.size());
    for (const LanguageRecord& rec : universe) order.push_back(&rec);
    std::sort(order.begin(), order.end(), [](const LanguageRecord* a, const LanguageRecord* b) {
        if (a->population != b->population) return a->population > b->population;
        return a->iso3 < b->iso3;
    });

    std::vector<double> gap(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        gap[i] = demand.weight(order[i]->iso3) * (1.0 - utility.value(order[i]->iso3));

    // curve[i] = 1 - (remaining gap once the first i languages are forced
    // to utility 1). Suffix sums of nonnegative terms are nonincreasing,
    // which keeps the curve monotone, and the empty suffix makes the final
    // element exactly 1.
    std::vector<double> curve(order.size() + 1);
    double suffix = 0.0;
    curve[order.size()] = 1.0;
    for (std::size_t i = order.size(); i-- > 0;) {
        suffix += gap[i];
        curve[i] = 1.0 - suffix;
    }
    return curve;
}

std::vector<double> greedy_population_curve(const UtilityTable& utility,
                                            std::span<const LanguageRecord> universe, double tau,
                                            const DemandOptions& options) {
    return greedy_population_curve(UtilityView(utility), universe, tau, options);
}

} // namespace langequity
