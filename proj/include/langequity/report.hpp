#pragma once

#include "langequity/metric.hpp"
#include "langequity/priority.hpp"
#include "langequity/pubscan.hpp"

#include <span>
#include <string>
#include <vector>

namespace langequity::report {

/// Fixed six fractional digits; all report output goes through this so
/// identical inputs render byte-identically. Negative zero is normalized.
std::string fixed6(double value);

/// Deterministic JSON emission with fixed6 number formatting (generic
/// JSON libraries print shortest-round-trip doubles, which breaks the
/// fixed-width contract).
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value_number(double v);
    JsonWriter& value_int(long long v);
    JsonWriter& value_string(std::string_view v);
    JsonWriter& value_null();
    JsonWriter& value_raw(std::string_view v);

    const std::string& str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_;
    bool pending_key_ = false;
};

std::string escape_json(std::string_view s);

// MetricReport: {task, tau, value, coverage, contributions:
//   [{iso3, demand, utility, product}]}
std::string metric_json(const MetricReport& report, const DemandVector& demand,
                        const UtilityView& utility);
std::string metric_tsv(std::span<const MetricReport> reports);

/// Accumulates report objects (possibly across different tasks and
/// utility views) into one JSON array.
class ReportCollector {
public:
    void add(const MetricReport& report, const DemandVector& demand, const UtilityView& utility);
    std::string finish();
    std::size_t size() const { return count_; }

private:
    JsonWriter json_;
    bool open_ = false;
    std::size_t count_ = 0;
};

std::string curve_tsv(std::span<const MetricReport> reports);
std::string curve_json(std::span<const MetricReport> reports);
std::string curve_svg(std::span<const MetricReport> reports, std::string_view title);

std::string ranking_csv(const PriorityRanking& ranking);
std::string ranking_json(std::string_view task_id, const PriorityRanking& ranking);

std::string estimates_csv(const PivotEstimates& estimates);
std::string estimate_json(const PivotEstimate& estimate);
std::string estimates_json(const PivotEstimates& estimates);

std::string mentions_tsv(std::span<const PaperRecord> papers);
std::string pubscan_summary_json(std::span<const PaperRecord> papers,
                                 const CorrelationReport& citations, const PubSummary& summary);

/// Minimal static bar rendering of the top contributions in a report.
std::string contributions_svg(const MetricReport& report, std::size_t max_bars = 20);

} // namespace langequity::report
