#include "langequity/demand.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

#include <cmath>

namespace langequity {

double DemandVector::weight(const std::string& iso3) const {
    auto it = weights.find(iso3);
    if (it == weights.end())
        raise(Errc::UniverseMismatch, "'" + iso3 + "' is not in the demand universe");
    return it->second;
}

DemandVector demand_vector(std::span<const LanguageRecord> universe, double tau,
                           const DemandOptions& options) {
    if (!(tau >= 0.0 && tau <= 1.0))
        raise(Errc::InvalidArgument, "tau must be in [0,1], got " + tsv::format_double(tau));
    if (universe.empty()) raise(Errc::EmptyUniverse, "demand over an empty language set");

    DemandVector demand;
    demand.tau = tau;

    // n^tau with 0^0 = 1, which std::pow already guarantees.
    double total = 0.0;
    for (const LanguageRecord& rec : universe) {
        double population = rec.population;
        if (options.use_excluded_fraction) population *= 1.0 - rec.excluded_fraction;
        const double mass = std::pow(population, tau);
        auto [it, inserted] = demand.weights.emplace(rec.iso3, mass);
        (void)it;
        if (!inserted)
            raise(Errc::InvalidArgument, "duplicate language '" + rec.iso3 + "' in universe");
        total += mass;
    }
    if (total <= 0.0)
        raise(Errc::AllZeroPopulations, "tau = " + tsv::format_double(tau) +
                                            " with no positive population in the universe");
    for (auto& [iso3, weight] : demand.weights) weight /= total;
    return demand;
}

PairDemand econ_pair_demand(std::span<const TradeShare> trade, Flow basis) {
    PairDemand demand;
    demand.basis = basis;

    std::map<std::string, double> totals;
    for (const TradeShare& row : trade)
        if (row.flow == basis) totals[row.importer_iso3] += row.share;
    if (totals.empty())
        raise(Errc::NoRowsForFlow, std::string(flow_name(basis)) + " rows absent from trade data");

    for (const TradeShare& row : trade) {
        if (row.flow != basis) continue;
        const double total = totals[row.importer_iso3];
        if (total <= 0.0)
            raise(Errc::InvalidArgument,
                  "'" + row.importer_iso3 + "' has all-zero " + std::string(flow_name(basis)) +
                      " shares");
        // Import basis: partner -> community; export basis: community -> partner.
        auto key = basis == Flow::import_flow
                       ? std::make_pair(row.partner_iso3, row.importer_iso3)
                       : std::make_pair(row.importer_iso3, row.partner_iso3);
        demand.weights[key] += row.share / total;
    }
    return demand;
}

std::vector<TradeShare> merge_country_weights(
    const std::string& community_iso3, Flow flow, std::span<const CountryShare> partner_shares,
    const std::map<std::string, std::string>& country_to_language) {
    std::map<std::string, double> merged;
    for (const CountryShare& share : partner_shares) {
        auto it = country_to_language.find(share.country_code);
        if (it == country_to_language.end())
            raise(Errc::UnmappedCountry, "'" + share.country_code + "' has no language mapping");
        merged[it->second] += share.share;
    }
    std::vector<TradeShare> out;
    out.reserve(merged.size());
    for (const auto& [iso3, share] : merged)
        out.push_back(TradeShare{community_iso3, iso3, share, flow});
    return out;
}

} // namespace langequity
