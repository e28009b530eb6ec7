#pragma once

#include "langequity/registry.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langequity {

/// Surface forms to search for per language, plus the deny-list of forms
/// that collide with common words, placenames, or author names and must
/// never match on their own.
struct MentionLexicon {
    struct Entry {
        std::string iso3;
        std::vector<std::string> names;
        std::vector<std::string> endonyms;
        std::string glottocode; // optional
    };
    std::vector<Entry> entries;
    std::set<std::string> denylist;

    static MentionLexicon from_registry(const Registry& registry, std::set<std::string> denylist);
    /// lexicon.tsv: iso3, names, endonyms, glottocode (optional column).
    static MentionLexicon load(const std::filesystem::path& path, std::set<std::string> denylist);
};

/// The deny-list shipped by default: common words, placenames, author
/// names, and math notation that collide with language names.
std::set<std::string> default_denylist();

/// One form per line; '#' comments allowed.
std::set<std::string> load_denylist(const std::filesystem::path& path);

/// Token-sequence matcher compiled from a lexicon. Names and endonyms
/// match whole-token, case-insensitively, multi-word names as contiguous
/// token runs; ISO and Glottolog codes match case-sensitively. Deny-listed
/// forms are dropped at compile time. Read-only after construction, so
/// scanning many documents concurrently is safe.
class LexiconMatcher {
public:
    explicit LexiconMatcher(const MentionLexicon& lexicon);

    std::set<std::string> scan(std::string_view text) const;

private:
    std::map<std::vector<std::string>, std::set<std::string>> name_phrases_; // lowercased
    std::map<std::string, std::set<std::string>> codes_;                     // exact
    std::size_t max_phrase_ = 1;
};

/// Convenience wrapper: compile then scan once.
std::set<std::string> scan_languages(std::string_view text, const MentionLexicon& lexicon);

struct PaperRecord {
    std::string paper_id;
    int year = 0;
    std::string venue;
    std::string text;
    long citations = 0;
    std::set<std::string> languages;            // filled by scanning
    std::optional<double> citation_percentile;  // filled by grouping
};

/// Reads metadata (paper_id, year, venue, citations) and, for each row,
/// `<paper_id>.txt` from the corpus directory.
std::vector<PaperRecord> load_corpus(const std::filesystem::path& corpus_dir,
                                     const std::filesystem::path& metadata_tsv);

void scan_corpus(std::vector<PaperRecord>& papers, const LexiconMatcher& matcher);

/// Opt-in heuristic: a paper that names no language is assumed to deal
/// with English.
void apply_english_default(std::vector<PaperRecord>& papers);

/// Midrank citation percentile within each (year, venue) group:
/// (strictly below + half the ties, self included) / group size. Always
/// in (0,1]; singleton groups land on 0.5.
void citation_percentiles(std::vector<PaperRecord>& papers);

/// Midrank percentiles for one group of citation counts.
std::vector<double> percentiles_for_group(std::span<const long> citations);

struct CorrelationReport {
    std::size_t sample_size = 0;
    double spearman = 0.0; // NaN when degenerate
    std::map<std::pair<int, std::string>, std::size_t> group_sizes;
};

/// Rank correlation between language count and citation percentile;
/// purely descriptive.
CorrelationReport languages_vs_citations_summary(std::span<const PaperRecord> papers);

struct LanguagePubRow {
    std::string iso3;
    std::size_t paper_count = 0;
    double log_gdp = 0.0;        // -inf when gdp is 0
    double log_population = 0.0; // -inf when population is 0
};

struct PubSummary {
    std::vector<LanguagePubRow> rows; // sorted by paper_count desc, iso3 asc
    double spearman_gdp = 0.0;        // over rows with finite log_gdp
    double spearman_population = 0.0; // over rows with finite log_population
};

/// Papers mentioning each language, with the economic and demographic
/// covariates the correlations are computed against.
PubSummary papers_per_language_summary(std::span<const PaperRecord> papers,
                                       const Registry& registry);

} // namespace langequity
