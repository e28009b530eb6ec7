#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langequity {

/// Canonical identity of one language, with the demographic and economic
/// attributes demand weighting needs.
struct LanguageRecord {
    std::string iso3;                     // lowercase ISO 639-3 code
    std::vector<std::string> names;       // English names
    std::vector<std::string> endonyms;    // native names
    double population = 0.0;              // speaker count, >= 0
    double gdp = 0.0;                     // attributed GDP in USD, >= 0
    std::optional<std::string> member_of; // macro-language this row belongs to
    double excluded_fraction = 0.0;       // population share dropped under L2 exclusion

    bool operator==(const LanguageRecord&) const = default;
};

struct CountryStat {
    std::string country_code; // 3-letter code
    double population = 0.0;  // > 0
    double gdp = 0.0;         // >= 0
};

/// Carrier for GDP attribution: how many speakers of a language live in
/// a given country.
struct LanguageCountryShare {
    std::string iso3;
    std::string country_code;
    double speaker_count = 0.0;
};

/// Immutable after load; concurrent reads are safe.
class Registry {
public:
    /// Loads `languages.tsv`: iso3, names, endonyms, population, gdp,
    /// member_of, excluded_fraction (optional, default 0). Names and
    /// endonyms are pipe-separated lists. Duplicate iso3 rows are a hard
    /// error.
    static Registry load(const std::filesystem::path& path);

    static Registry from_records(std::vector<LanguageRecord> records);

    /// Looks up by iso3 code, English name, or endonym, case-insensitively.
    /// An exact code match wins outright; a name shared by several
    /// languages raises AmbiguousName.
    const LanguageRecord& resolve(std::string_view code_or_name) const;

    const LanguageRecord* find(std::string_view iso3) const;
    bool contains(std::string_view iso3) const { return find(iso3) != nullptr; }

    std::span<const LanguageRecord> records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    /// Records that are not members of a macro-language. This is the
    /// default demand universe: macro rows carry the aggregate population,
    /// so counting their member rows too would double-count speakers.
    std::vector<LanguageRecord> universe() const;

    std::vector<LanguageRecord> members_of(std::string_view macro_iso3) const;

private:
    std::vector<LanguageRecord> records_; // sorted by iso3
    std::map<std::string, std::size_t> by_code_;
    std::map<std::string, std::vector<std::size_t>> by_name_; // lowercased
};

/// Sums population and gdp over the members of a macro-language.
/// Every member must declare member_of = macro_iso3.
LanguageRecord aggregate_macrolanguage(std::string_view macro_iso3,
                                       std::span<const LanguageRecord> members);

/// GDP attributed to a language: sum over countries of
/// (speakers there / country population) * country GDP.
double gdp_for_language(std::string_view iso3,
                        std::span<const LanguageCountryShare> shares,
                        std::span<const CountryStat> countries);

/// True iff the string is exactly three lowercase ASCII letters.
bool is_iso3(std::string_view code);

} // namespace langequity
