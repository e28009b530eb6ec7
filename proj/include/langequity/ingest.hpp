#pragma once

#include "langequity/registry.hpp"

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langequity {

enum class MetricKind { accuracy, fscore, bleu, las, mcd };
enum class Direction { higher_better, lower_better };
enum class Flow { import_flow, export_flow };

std::string_view metric_kind_name(MetricKind kind);
std::string_view flow_name(Flow flow);

/// How raw scores map into [0,1].
struct Normalizer {
    enum class Kind {
        theoretical,    // divide by the task's theoretical maximum
        empirical,      // divide by the best observed score
        fixed_constant, // divide by a fixed constant Z
        range_invert,   // (x_max - x) / (x_max - x_min), for lower-is-better
    };
    Kind kind = Kind::theoretical;
    double constant = 0.0; // Z, for fixed_constant
};

struct TaskSpec {
    std::string task_id;
    MetricKind metric = MetricKind::accuracy;
    Direction direction = Direction::higher_better;
    std::optional<double> theoretical_max;
    Normalizer normalizer;

    /// Enforces the cross-field invariants (mcd implies lower_better +
    /// range_invert; bleu implies fixed_constant with Z > 0).
    void validate() const;
};

/// Built-in specs for the six evaluated tasks: dep (LAS, empirical max),
/// inflection and nli (accuracy / 100), qa (F-score / 100), tts (MCD,
/// inverted min-max), mt (BLEU / 70).
TaskSpec builtin_task_spec(std::string_view task_id);
bool has_builtin_task(std::string_view task_id);
std::vector<std::string> builtin_task_ids();

/// Score subject: a single language, or an ordered (source, target) pair
/// for translation tasks. Monolingual subjects leave tgt empty.
struct Subject {
    std::string src;
    std::string tgt;

    static Subject mono(std::string iso3) { return {std::move(iso3), {}}; }
    static Subject pair(std::string source, std::string target) {
        return {std::move(source), std::move(target)};
    }
    bool is_pair() const { return !tgt.empty(); }
    std::string str() const { return is_pair() ? src + "-" + tgt : src; }

    auto operator<=>(const Subject&) const = default;
};

struct RawResult {
    std::string task_id;
    Subject subject;
    double score = 0.0;
    std::string source_tag;
};

/// Per-task results after deduplication: one best score per subject.
struct TaskResultSet {
    std::string task_id;
    std::map<Subject, RawResult> best;

    bool empty() const { return best.empty(); }
};

/// Parses `results.tsv` (task_id, source_iso3, target_iso3, score,
/// source_tag; target empty for monolingual tasks), keeping only rows for
/// spec.task_id. Per subject only the best score survives: maximum for
/// higher_better metrics, minimum for lower_better. On a tie the
/// first-seen row's source_tag is kept.
TaskResultSet load_results(const std::filesystem::path& path, const TaskSpec& spec,
                           const Registry& registry);

TaskResultSet results_from_rows(std::vector<RawResult> rows, const TaskSpec& spec,
                                const Registry* registry = nullptr);

void write_results(const std::filesystem::path& path, const TaskResultSet& results);

/// Keep only pairs translating into `target` / out of `source`.
TaskResultSet filter_to_target(const TaskResultSet& results, std::string_view target);
TaskResultSet filter_from_source(const TaskResultSet& results, std::string_view source);

/// One trade-partner share row. For import flow, `importer_iso3` is the
/// community doing the importing; for export flow it is the exporting
/// community and `partner_iso3` the destination.
struct TradeShare {
    std::string importer_iso3;
    std::string partner_iso3;
    double share = 0.0; // in [0,1]
    Flow flow = Flow::import_flow;
};

/// Parses `trade.tsv` (importer_iso3, partner_iso3, share, flow). Shares
/// per (community, flow) may cover only part of the trade volume but must
/// not exceed 1.
std::vector<TradeShare> load_trade(const std::filesystem::path& path);

} // namespace langequity
