#include "langequity/registry.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace langequity {

bool is_iso3(std::string_view code) {
    return code.size() == 3 &&
           std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

namespace {

std::string require_iso3(std::string_view raw, std::size_t line) {
    std::string code = tsv::ascii_lower(raw);
    if (!is_iso3(code))
        raise(Errc::ParseError,
              "line " + std::to_string(line) + ": iso3 code must match [a-z]{3}, got '" +
                  std::string(raw) + "'");
    return code;
}

} // namespace

Registry Registry::load(const std::filesystem::path& path) {
    std::vector<LanguageRecord> records;
    for (const tsv::Row& row : tsv::read_file(path)) {
        if (row.fields.size() < 5 || row.fields.size() > 7)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": expected 5-7 columns, got " +
                      std::to_string(row.fields.size()));
        LanguageRecord rec;
        rec.iso3 = require_iso3(row.fields[0], row.line);
        rec.names = tsv::split_list(row.fields[1]);
        rec.endonyms = tsv::split_list(row.fields[2]);
        rec.population = tsv::parse_double(row.fields[3], row.line, "population");
        rec.gdp = tsv::parse_double(row.fields[4], row.line, "gdp");
        if (row.fields.size() >= 6 && !row.fields[5].empty())
            rec.member_of = require_iso3(row.fields[5], row.line);
        if (row.fields.size() >= 7 && !row.fields[6].empty())
            rec.excluded_fraction = tsv::parse_double(row.fields[6], row.line, "excluded_fraction");
        if (rec.population < 0)
            raise(Errc::ParseError, "line " + std::to_string(row.line) + ": negative population");
        if (rec.gdp < 0)
            raise(Errc::ParseError, "line " + std::to_string(row.line) + ": negative gdp");
        if (rec.excluded_fraction < 0 || rec.excluded_fraction > 1)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": excluded_fraction outside [0,1]");
        records.push_back(std::move(rec));
    }
    return from_records(std::move(records));
}

Registry Registry::from_records(std::vector<LanguageRecord> records) {
    Registry reg;
    std::sort(records.begin(), records.end(),
              [](const LanguageRecord& a, const LanguageRecord& b) { return a.iso3 < b.iso3; });
    reg.records_ = std::move(records);

    std::set<std::string> macro_targets;
    for (std::size_t i = 0; i < reg.records_.size(); ++i) {
        const LanguageRecord& rec = reg.records_[i];
        if (!is_iso3(rec.iso3))
            raise(Errc::ParseError, "iso3 code must match [a-z]{3}, got '" + rec.iso3 + "'");
        if (!(rec.population >= 0) || !std::isfinite(rec.population))
            raise(Errc::ParseError, "'" + rec.iso3 + "': population must be finite and >= 0");
        if (!(rec.gdp >= 0) || !std::isfinite(rec.gdp))
            raise(Errc::ParseError, "'" + rec.iso3 + "': gdp must be finite and >= 0");
        if (!(rec.excluded_fraction >= 0 && rec.excluded_fraction <= 1))
            raise(Errc::ParseError, "'" + rec.iso3 + "': excluded_fraction outside [0,1]");
        auto [it, inserted] = reg.by_code_.emplace(rec.iso3, i);
        (void)it;
        if (!inserted)
            raise(Errc::ParseError,
                  "duplicate iso3 '" + rec.iso3 + "' (population would be double-counted)");
        if (rec.member_of) macro_targets.insert(*rec.member_of);
        for (const std::string& name : rec.names)
            reg.by_name_[tsv::ascii_lower(name)].push_back(i);
        for (const std::string& name : rec.endonyms)
            reg.by_name_[tsv::ascii_lower(name)].push_back(i);
    }
    // A member row must never itself be the target of another row's member_of.
    for (const LanguageRecord& rec : reg.records_)
        if (rec.member_of && macro_targets.contains(rec.iso3))
            raise(Errc::ParseError,
                  "'" + rec.iso3 + "' is both a macro-language and a member of '" +
                      *rec.member_of + "'");
    return reg;
}

const LanguageRecord& Registry::resolve(std::string_view code_or_name) const {
    const std::string lowered = tsv::ascii_lower(code_or_name);
    if (auto it = by_code_.find(lowered); it != by_code_.end()) return records_[it->second];
    if (auto it = by_name_.find(lowered); it != by_name_.end()) {
        std::set<std::string> codes;
        for (std::size_t idx : it->second) codes.insert(records_[idx].iso3);
        if (codes.size() > 1) {
            std::string detail = "'" + std::string(code_or_name) + "' names";
            for (const std::string& c : codes) detail += " " + c;
            detail += "; query by iso3 to disambiguate";
            raise(Errc::AmbiguousName, detail);
        }
        return records_[it->second.front()];
    }
    raise(Errc::UnknownLanguage, "'" + std::string(code_or_name) + "' is not in the registry");
}

const LanguageRecord* Registry::find(std::string_view iso3) const {
    auto it = by_code_.find(tsv::ascii_lower(iso3));
    return it == by_code_.end() ? nullptr : &records_[it->second];
}

std::vector<LanguageRecord> Registry::universe() const {
    std::vector<LanguageRecord> out;
    for (const LanguageRecord& rec : records_)
        if (!rec.member_of) out.push_back(rec);
    return out;
}

std::vector<LanguageRecord> Registry::members_of(std::string_view macro_iso3) const {
    const std::string macro = tsv::ascii_lower(macro_iso3);
    std::vector<LanguageRecord> out;
    for (const LanguageRecord& rec : records_)
        if (rec.member_of && *rec.member_of == macro) out.push_back(rec);
    return out;
}

LanguageRecord aggregate_macrolanguage(std::string_view macro_iso3,
                                       std::span<const LanguageRecord> members) {
    if (members.empty())
        raise(Errc::EmptyMemberSet, "macro-language '" + std::string(macro_iso3) + "' has no members");
    LanguageRecord out;
    out.iso3 = tsv::ascii_lower(macro_iso3);
    for (const LanguageRecord& member : members) {
        if (!member.member_of || *member.member_of != out.iso3)
            raise(Errc::InvalidArgument,
                  "'" + member.iso3 + "' is not a member of '" + out.iso3 + "'");
        out.population += member.population;
        out.gdp += member.gdp;
    }
    return out;
}

double gdp_for_language(std::string_view iso3,
                        std::span<const LanguageCountryShare> shares,
                        std::span<const CountryStat> countries) {
    std::map<std::string, const CountryStat*> by_country;
    for (const CountryStat& c : countries) by_country.emplace(c.country_code, &c);

    double total = 0.0;
    for (const LanguageCountryShare& share : shares) {
        if (share.iso3 != iso3) continue;
        auto it = by_country.find(share.country_code);
        if (it == by_country.end())
            raise(Errc::UnknownCountry, "'" + share.country_code + "' has no CountryStat");
        const CountryStat& country = *it->second;
        if (country.population <= 0)
            raise(Errc::ZeroCountryPopulation, "'" + country.country_code + "'");
        total += share.speaker_count / country.population * country.gdp;
    }
    return total;
}

} // namespace langequity
