#pragma once

#include "langequity/ingest.hpp"
#include "langequity/registry.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace langequity {

struct DemandOptions {
    /// Scale each population by (1 - excluded_fraction) before
    /// exponentiation (the L2-speaker exclusion).
    bool use_excluded_fraction = false;
};

/// Demand weights d_l^(tau) = n_l^tau / sum n^tau over the universe.
/// tau = 1 is demographic demand, tau = 0 linguistic (uniform); the map
/// keys are the universe.
struct DemandVector {
    double tau = 1.0;
    std::map<std::string, double> weights;

    bool contains(const std::string& iso3) const { return weights.contains(iso3); }
    double weight(const std::string& iso3) const;
};

DemandVector demand_vector(std::span<const LanguageRecord> universe, double tau,
                           const DemandOptions& options = {});

/// Economic demand over ordered language pairs, from trade-partner shares
/// renormalized per community (partial WITS coverage means the raw shares
/// rarely sum to 1).
struct PairDemand {
    Flow basis = Flow::import_flow;
    std::map<std::pair<std::string, std::string>, double> weights; // (source, target)
};

PairDemand econ_pair_demand(std::span<const TradeShare> trade, Flow basis);

/// Partner share attributed to one country, before the country-to-language
/// merge.
struct CountryShare {
    std::string country_code;
    double share = 0.0;
};

/// Folds per-country partner shares into per-language TradeShare rows,
/// summing countries that map to the same language.
std::vector<TradeShare> merge_country_weights(
    const std::string& community_iso3, Flow flow, std::span<const CountryShare> partner_shares,
    const std::map<std::string, std::string>& country_to_language);

} // namespace langequity
