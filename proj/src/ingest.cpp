#include "langequity/ingest.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

#include <cmath>
#include <fstream>

namespace langequity {

std::string_view metric_kind_name(MetricKind kind) {
    switch (kind) {
    case MetricKind::accuracy: return "accuracy";
    case MetricKind::fscore: return "fscore";
    case MetricKind::bleu: return "bleu";
    case MetricKind::las: return "las";
    case MetricKind::mcd: return "mcd";
    }
    return "?";
}

std::string_view flow_name(Flow flow) {
    return flow == Flow::import_flow ? "import" : "export";
}

void TaskSpec::validate() const {
    if (metric == MetricKind::mcd &&
        (direction != Direction::lower_better || normalizer.kind != Normalizer::Kind::range_invert))
        raise(Errc::InvalidArgument,
              "task '" + task_id + "': mcd requires lower_better direction and range_invert");
    if (metric == MetricKind::bleu &&
        (normalizer.kind != Normalizer::Kind::fixed_constant || normalizer.constant <= 0))
        raise(Errc::InvalidArgument,
              "task '" + task_id + "': bleu requires a fixed_constant normalizer with Z > 0");
    if (normalizer.kind == Normalizer::Kind::theoretical && !theoretical_max)
        raise(Errc::InvalidArgument, "task '" + task_id + "': theoretical normalizer needs a max");
}

namespace {

// Highest BLEU in the collected literature (Serbian-Croatian); the fixed
// normalization constant for all MT utilities.
constexpr double kBleuNormalizer = 70.0;

const std::vector<std::pair<std::string, TaskSpec>>& builtin_specs() {
    static const std::vector<std::pair<std::string, TaskSpec>> specs = [] {
        std::vector<std::pair<std::string, TaskSpec>> out;
        auto add = [&out](TaskSpec spec) { out.emplace_back(spec.task_id, std::move(spec)); };
        add({"dep", MetricKind::las, Direction::higher_better, std::nullopt,
             {Normalizer::Kind::empirical, 0.0}});
        add({"inflection", MetricKind::accuracy, Direction::higher_better, 100.0,
             {Normalizer::Kind::theoretical, 0.0}});
        add({"mt", MetricKind::bleu, Direction::higher_better, std::nullopt,
             {Normalizer::Kind::fixed_constant, kBleuNormalizer}});
        add({"tts", MetricKind::mcd, Direction::lower_better, std::nullopt,
             {Normalizer::Kind::range_invert, 0.0}});
        add({"nli", MetricKind::accuracy, Direction::higher_better, 100.0,
             {Normalizer::Kind::theoretical, 0.0}});
        add({"qa", MetricKind::fscore, Direction::higher_better, 100.0,
             {Normalizer::Kind::theoretical, 0.0}});
        return out;
    }();
    return specs;
}

bool percent_scale(MetricKind kind) {
    return kind == MetricKind::accuracy || kind == MetricKind::fscore || kind == MetricKind::las;
}

void check_score(const TaskSpec& spec, double score, std::size_t line) {
    if (!std::isfinite(score))
        raise(Errc::OutOfRangeScore, "line " + std::to_string(line) + ": score is not finite");
    if (percent_scale(spec.metric) && (score < 0.0 || score > 100.0))
        raise(Errc::OutOfRangeScore,
              "line " + std::to_string(line) + ": " + std::string(metric_kind_name(spec.metric)) +
                  " score " + tsv::format_double(score) + " outside [0,100]");
    if ((spec.metric == MetricKind::bleu || spec.metric == MetricKind::mcd) && score < 0.0)
        raise(Errc::OutOfRangeScore,
              "line " + std::to_string(line) + ": negative " +
                  std::string(metric_kind_name(spec.metric)) + " score");
}

std::string check_code(const std::string& raw, const Registry* registry, std::size_t line) {
    std::string code = tsv::ascii_lower(raw);
    if (!is_iso3(code))
        raise(Errc::ParseError,
              "line " + std::to_string(line) + ": invalid iso3 '" + raw + "'");
    if (registry && !registry->contains(code))
        raise(Errc::UnknownLanguage, "line " + std::to_string(line) + ": '" + code + "'");
    return code;
}

} // namespace

TaskSpec builtin_task_spec(std::string_view task_id) {
    for (const auto& [id, spec] : builtin_specs())
        if (id == task_id) return spec;
    raise(Errc::UnknownTask, "'" + std::string(task_id) + "'");
}

bool has_builtin_task(std::string_view task_id) {
    for (const auto& [id, spec] : builtin_specs())
        if (id == task_id) return true;
    return false;
}

std::vector<std::string> builtin_task_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, spec] : builtin_specs()) ids.push_back(id);
    return ids;
}

TaskResultSet results_from_rows(std::vector<RawResult> rows, const TaskSpec& spec,
                                const Registry* registry) {
    spec.validate();
    TaskResultSet out;
    out.task_id = spec.task_id;
    for (RawResult& row : rows) {
        if (row.task_id != spec.task_id) continue;
        check_score(spec, row.score, 0);
        if (registry) {
            if (!registry->contains(row.subject.src))
                raise(Errc::UnknownLanguage, "'" + row.subject.src + "'");
            if (row.subject.is_pair() && !registry->contains(row.subject.tgt))
                raise(Errc::UnknownLanguage, "'" + row.subject.tgt + "'");
        }
        auto it = out.best.find(row.subject);
        if (it == out.best.end()) {
            out.best.emplace(row.subject, std::move(row));
            continue;
        }
        const bool better = spec.direction == Direction::higher_better
                                ? row.score > it->second.score
                                : row.score < it->second.score;
        if (better) it->second = std::move(row);
    }
    return out;
}

TaskResultSet load_results(const std::filesystem::path& path, const TaskSpec& spec,
                           const Registry& registry) {
    spec.validate();
    TaskResultSet out;
    out.task_id = spec.task_id;
    for (const tsv::Row& row : tsv::read_file(path)) {
        if (row.fields.size() != 5)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": expected 5 columns, got " +
                      std::to_string(row.fields.size()));
        if (row.fields[0] != spec.task_id) continue;

        RawResult result;
        result.task_id = row.fields[0];
        const std::string src = check_code(row.fields[1], &registry, row.line);
        if (row.fields[2].empty()) {
            result.subject = Subject::mono(src);
        } else {
            result.subject = Subject::pair(src, check_code(row.fields[2], &registry, row.line));
        }
        result.score = tsv::parse_double(row.fields[3], row.line, "score");
        check_score(spec, result.score, row.line);
        result.source_tag = row.fields[4];

        auto it = out.best.find(result.subject);
        if (it == out.best.end()) {
            out.best.emplace(result.subject, std::move(result));
            continue;
        }
        const bool better = spec.direction == Direction::higher_better
                                ? result.score > it->second.score
                                : result.score < it->second.score;
        if (better) it->second = std::move(result);
    }
    return out;
}

void write_results(const std::filesystem::path& path, const TaskResultSet& results) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::IoError, "cannot write " + path.string());
    out << "# columns: task_id\tsource_iso3\ttarget_iso3\tscore\tsource_tag\n";
    for (const auto& [subject, result] : results.best)
        out << result.task_id << '\t' << subject.src << '\t' << subject.tgt << '\t'
            << tsv::format_double(result.score) << '\t' << result.source_tag << '\n';
}

TaskResultSet filter_to_target(const TaskResultSet& results, std::string_view target) {
    TaskResultSet out;
    out.task_id = results.task_id;
    for (const auto& [subject, result] : results.best)
        if (subject.is_pair() && subject.tgt == target) out.best.emplace(subject, result);
    return out;
}

TaskResultSet filter_from_source(const TaskResultSet& results, std::string_view source) {
    TaskResultSet out;
    out.task_id = results.task_id;
    for (const auto& [subject, result] : results.best)
        if (subject.is_pair() && subject.src == source) out.best.emplace(subject, result);
    return out;
}

std::vector<TradeShare> load_trade(const std::filesystem::path& path) {
    std::vector<TradeShare> rows;
    std::map<std::pair<std::string, Flow>, double> sums;
    for (const tsv::Row& row : tsv::read_file(path)) {
        if (row.fields.size() != 4)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": expected 4 columns, got " +
                      std::to_string(row.fields.size()));
        TradeShare share;
        share.importer_iso3 = check_code(row.fields[0], nullptr, row.line);
        share.partner_iso3 = check_code(row.fields[1], nullptr, row.line);
        share.share = tsv::parse_double(row.fields[2], row.line, "share");
        if (share.share < 0.0 || share.share > 1.0)
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": share outside [0,1]");
        if (row.fields[3] == "import")
            share.flow = Flow::import_flow;
        else if (row.fields[3] == "export")
            share.flow = Flow::export_flow;
        else
            raise(Errc::ParseError,
                  "line " + std::to_string(row.line) + ": flow must be import or export, got '" +
                      row.fields[3] + "'");

        double& sum = sums[{share.importer_iso3, share.flow}];
        sum += share.share;
        if (sum > 1.0 + 1e-9)
            raise(Errc::ShareSumExceedsOne,
                  "'" + share.importer_iso3 + "' " + std::string(flow_name(share.flow)) +
                      " shares sum to " + tsv::format_double(sum));
        rows.push_back(std::move(share));
    }
    return rows;
}

} // namespace langequity
