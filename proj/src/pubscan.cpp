#include "langequity/pubscan.hpp"

#include "langequity/errors.hpp"
#include "langequity/stats.hpp"
#include "langequity/tsv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace langequity {

namespace {

bool is_word_byte(unsigned char c) {
    return std::isalnum(c) || c == '\'' || c >= 0x80;
}

// Maximal runs of word bytes; hyphens and other punctuation separate
// tokens, so "Serbo-Croatian" matches the two-token phrase.
std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && !is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> lowered_tokens(std::string_view form) {
    std::vector<std::string> tokens = tokenize(form);
    for (std::string& token : tokens) token = tsv::ascii_lower(token);
    return tokens;
}

} // namespace

MentionLexicon MentionLexicon::from_registry(const Registry& registry,
                                             std::set<std::string> denylist) {
    MentionLexicon lexicon;
    lexicon.denylist = std::move(denylist);
    for (const LanguageRecord& rec : registry.records())
        lexicon.entries.push_back(Entry{rec.iso3, rec.names, rec.endonyms, {}});
    return lexicon;
}

MentionLexicon MentionLexicon::load(const std::filesystem::path& path,
                                    std::set<std::string> denylist) {
    MentionLexicon lexicon;
    lexicon.denylist = std::move(denylist);
    for (const tsv::Row& row : tsv::read_file(path)) {
        if (row.fields.size() < 3 || row.fields.size() > 4)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": expected 3-4 columns, got " +
                      std::to_string(row.fields.size()));
        Entry entry;
        entry.iso3 = tsv::ascii_lower(row.fields[0]);
        if (!is_iso3(entry.iso3))
            raise(Errc::ParseError, "line " + std::to_string(row.line) + ": invalid iso3 '" +
                                        row.fields[0] + "'");
        entry.names = tsv::split_list(row.fields[1]);
        entry.endonyms = tsv::split_list(row.fields[2]);
        if (row.fields.size() == 4) entry.glottocode = row.fields[3];
        lexicon.entries.push_back(std::move(entry));
    }
    return lexicon;
}

std::set<std::string> default_denylist() {
    return {"She", "Male", "Label", "Even", "The", "Are", "Colorado", "Nara",
            "Sydney", "Su", "Kim", "Dan", "Ali", "Rama", "Dji", "Dii"};
}

std::set<std::string> load_denylist(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoError, "cannot open " + path.string());
    std::set<std::string> forms;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        forms.insert(line);
    }
    return forms;
}

LexiconMatcher::LexiconMatcher(const MentionLexicon& lexicon) {
    // Names are matched case-insensitively, so a deny-listed name kills
    // every case variant of that form; codes are case-sensitive and are
    // denied only on an exact entry.
    std::set<std::vector<std::string>> denied_phrases;
    for (const std::string& form : lexicon.denylist) {
        auto tokens = lowered_tokens(form);
        if (!tokens.empty()) denied_phrases.insert(std::move(tokens));
    }

    for (const MentionLexicon::Entry& entry : lexicon.entries) {
        auto add_name = [&](const std::string& form) {
            auto tokens = lowered_tokens(form);
            if (tokens.empty() || denied_phrases.contains(tokens)) return;
            max_phrase_ = std::max(max_phrase_, tokens.size());
            name_phrases_[std::move(tokens)].insert(entry.iso3);
        };
        for (const std::string& name : entry.names) add_name(name);
        for (const std::string& endonym : entry.endonyms) add_name(endonym);
        if (!lexicon.denylist.contains(entry.iso3)) codes_[entry.iso3].insert(entry.iso3);
        if (!entry.glottocode.empty() && !lexicon.denylist.contains(entry.glottocode))
            codes_[entry.glottocode].insert(entry.iso3);
    }
}

std::set<std::string> LexiconMatcher::scan(std::string_view text) const {
    const std::vector<std::string> tokens = tokenize(text);
    std::vector<std::string> lowered(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) lowered[i] = tsv::ascii_lower(tokens[i]);

    std::set<std::string> found;
    std::vector<std::string> phrase;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (auto it = codes_.find(tokens[i]); it != codes_.end())
            found.insert(it->second.begin(), it->second.end());
        phrase.clear();
        for (std::size_t len = 1; len <= max_phrase_ && i + len <= tokens.size(); ++len) {
            phrase.push_back(lowered[i + len - 1]);
            if (auto it = name_phrases_.find(phrase); it != name_phrases_.end())
                found.insert(it->second.begin(), it->second.end());
        }
    }
    return found;
}

std::set<std::string> scan_languages(std::string_view text, const MentionLexicon& lexicon) {
    return LexiconMatcher(lexicon).scan(text);
}

std::vector<PaperRecord> load_corpus(const std::filesystem::path& corpus_dir,
                                     const std::filesystem::path& metadata_tsv) {
    std::vector<PaperRecord> papers;
    for (const tsv::Row& row : tsv::read_file(metadata_tsv)) {
        // A fifth column (research area, from upstream classifiers) is
        // tolerated but plays no role here.
        if (row.fields.size() < 4 || row.fields.size() > 5)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": expected 4-5 columns, got " +
                      std::to_string(row.fields.size()));
        PaperRecord paper;
        paper.paper_id = row.fields[0];
        paper.year = static_cast<int>(tsv::parse_int(row.fields[1], row.line, "year"));
        paper.venue = row.fields[2];
        paper.citations = tsv::parse_int(row.fields[3], row.line, "citations");
        if (paper.citations < 0)
            raise(Errc::ParseError, "line " + std::to_string(row.line) + ": negative citations");

        const std::filesystem::path text_path = corpus_dir / (paper.paper_id + ".txt");
        std::ifstream in(text_path, std::ios::binary);
        if (!in) raise(Errc::IoError, "cannot open " + text_path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        paper.text = std::move(buffer).str();
        papers.push_back(std::move(paper));
    }
    return papers;
}

void scan_corpus(std::vector<PaperRecord>& papers, const LexiconMatcher& matcher) {
    for (PaperRecord& paper : papers) paper.languages = matcher.scan(paper.text);
}

void apply_english_default(std::vector<PaperRecord>& papers) {
    for (PaperRecord& paper : papers)
        if (paper.languages.empty()) paper.languages = {"eng"};
}

std::vector<double> percentiles_for_group(std::span<const long> citations) {
    if (citations.empty()) raise(Errc::EmptyGroup, "citation percentile over an empty group");
    std::vector<double> out(citations.size());
    for (std::size_t i = 0; i < citations.size(); ++i) {
        std::size_t below = 0, tied = 0;
        for (long other : citations) {
            if (other < citations[i]) ++below;
            else if (other == citations[i]) ++tied;
        }
        out[i] = (2.0 * static_cast<double>(below) + static_cast<double>(tied)) /
                 (2.0 * static_cast<double>(citations.size()));
    }
    return out;
}

void citation_percentiles(std::vector<PaperRecord>& papers) {
    std::map<std::pair<int, std::string>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < papers.size(); ++i)
        groups[{papers[i].year, papers[i].venue}].push_back(i);
    for (const auto& [key, indices] : groups) {
        std::vector<long> citations;
        citations.reserve(indices.size());
        for (std::size_t idx : indices) citations.push_back(papers[idx].citations);
        const std::vector<double> percentiles = percentiles_for_group(citations);
        for (std::size_t j = 0; j < indices.size(); ++j)
            papers[indices[j]].citation_percentile = percentiles[j];
    }
}

CorrelationReport languages_vs_citations_summary(std::span<const PaperRecord> papers) {
    CorrelationReport report;
    std::vector<double> counts, percentiles;
    for (const PaperRecord& paper : papers) {
        if (!paper.citation_percentile) continue;
        counts.push_back(static_cast<double>(paper.languages.size()));
        percentiles.push_back(*paper.citation_percentile);
        ++report.group_sizes[{paper.year, paper.venue}];
    }
    if (counts.size() < 3)
        raise(Errc::InsufficientData,
              "need at least 3 papers with citation percentiles, have " +
                  std::to_string(counts.size()));
    report.sample_size = counts.size();
    report.spearman = stats::spearman(counts, percentiles);
    return report;
}

PubSummary papers_per_language_summary(std::span<const PaperRecord> papers,
                                       const Registry& registry) {
    std::map<std::string, std::size_t> counts;
    for (const PaperRecord& paper : papers)
        for (const std::string& iso3 : paper.languages) ++counts[iso3];

    PubSummary summary;
    for (const auto& [iso3, count] : counts) {
        LanguagePubRow row;
        row.iso3 = iso3;
        row.paper_count = count;
        const LanguageRecord* rec = registry.find(iso3);
        const double gdp = rec ? rec->gdp : 0.0;
        const double population = rec ? rec->population : 0.0;
        row.log_gdp = gdp > 0 ? std::log(gdp) : -std::numeric_limits<double>::infinity();
        row.log_population =
            population > 0 ? std::log(population) : -std::numeric_limits<double>::infinity();
        summary.rows.push_back(std::move(row));
    }
    std::sort(summary.rows.begin(), summary.rows.end(),
              [](const LanguagePubRow& a, const LanguagePubRow& b) {
                  if (a.paper_count != b.paper_count) return a.paper_count > b.paper_count;
                  return a.iso3 < b.iso3;
              });

    auto correlate = [&summary](auto covariate) {
        std::vector<double> counts_v, cov;
        for (const LanguagePubRow& row : summary.rows) {
            const double value = covariate(row);
            if (!std::isfinite(value)) continue;
            counts_v.push_back(static_cast<double>(row.paper_count));
            cov.push_back(value);
        }
        if (counts_v.size() < 3) return std::numeric_limits<double>::quiet_NaN();
        return stats::spearman(counts_v, cov);
    };
    summary.spearman_gdp = correlate([](const LanguagePubRow& row) { return row.log_gdp; });
    summary.spearman_population =
        correlate([](const LanguagePubRow& row) { return row.log_population; });
    return summary;
}

} // namespace langequity
