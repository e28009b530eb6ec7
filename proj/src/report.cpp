#include "langequity/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace langequity::report {

std::string fixed6(double value) {
    if (value == 0.0) value = 0.0; // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

namespace {

std::string fixed2(double value) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

} // namespace

std::string escape_json(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

void JsonWriter::comma() {
    if (!first_.empty()) {
        if (!first_.back() && !pending_key_) out_ += ',';
        first_.back() = false;
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    comma();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    if (!first_.empty() && !first_.back()) out_ += ',';
    if (!first_.empty()) first_.back() = false;
    out_ += '"';
    out_ += escape_json(name);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value_number(double v) {
    comma();
    if (std::isfinite(v))
        out_ += fixed6(v);
    else
        out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value_int(long long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value_string(std::string_view v) {
    comma();
    out_ += '"';
    out_ += escape_json(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value_null() {
    comma();
    out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value_raw(std::string_view v) {
    comma();
    out_ += v;
    return *this;
}

namespace {

void write_report_object(JsonWriter& json, const MetricReport& report, const DemandVector* demand,
                         const UtilityView* utility) {
    json.begin_object();
    json.key("task").value_string(report.task_id);
    json.key("tau").value_number(report.tau);
    json.key("value").value_number(report.value);
    json.key("coverage").value_int(static_cast<long long>(report.coverage));
    json.key("contributions").begin_array();
    for (const auto& [iso3, product] : report.contributions) {
        json.begin_object();
        json.key("iso3").value_string(iso3);
        if (demand) json.key("demand").value_number(demand->weight(iso3));
        if (utility) json.key("utility").value_number(utility->value(iso3));
        json.key("product").value_number(product);
        json.end_object();
    }
    json.end_array();
    json.end_object();
}

} // namespace

std::string metric_json(const MetricReport& report, const DemandVector& demand,
                        const UtilityView& utility) {
    JsonWriter json;
    write_report_object(json, report, &demand, &utility);
    return json.str() + "\n";
}

void ReportCollector::add(const MetricReport& report, const DemandVector& demand,
                          const UtilityView& utility) {
    if (!open_) {
        json_.begin_array();
        open_ = true;
    }
    write_report_object(json_, report, &demand, &utility);
    ++count_;
}

std::string ReportCollector::finish() {
    if (!open_) {
        json_.begin_array();
        open_ = true;
    }
    json_.end_array();
    return json_.str() + "\n";
}

std::string metric_tsv(std::span<const MetricReport> reports) {
    std::string out = "# columns: task\ttau\tvalue\tcoverage\n";
    for (const MetricReport& report : reports) {
        out += report.task_id;
        out += '\t';
        out += fixed6(report.tau);
        out += '\t';
        out += fixed6(report.value);
        out += '\t';
        out += std::to_string(report.coverage);
        out += '\n';
    }
    return out;
}

std::string curve_tsv(std::span<const MetricReport> reports) {
    std::string out = "# columns: tau\tvalue\n";
    for (const MetricReport& report : reports) {
        out += fixed6(report.tau);
        out += '\t';
        out += fixed6(report.value);
        out += '\n';
    }
    return out;
}

std::string curve_json(std::span<const MetricReport> reports) {
    JsonWriter json;
    json.begin_object();
    json.key("task").value_string(reports.empty() ? "" : reports.front().task_id);
    json.key("points").begin_array();
    for (const MetricReport& report : reports) {
        json.begin_object();
        json.key("tau").value_number(report.tau);
        json.key("value").value_number(report.value);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    return json.str() + "\n";
}

std::string curve_svg(std::span<const MetricReport> reports, std::string_view title) {
    constexpr double width = 640, height = 400;
    constexpr double left = 60, right = 20, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    auto x_of = [&](double tau) { return left + tau * plot_w; };
    auto y_of = [&](double v) { return top + (1.0 - v) * plot_h; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
                      "viewBox=\"0 0 640 400\">\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           escape_json(title) + "</text>\n";
    // axes
    svg += "<line x1=\"" + fixed2(left) + "\" y1=\"" + fixed2(top) + "\" x2=\"" + fixed2(left) +
           "\" y2=\"" + fixed2(top + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fixed2(left) + "\" y1=\"" + fixed2(top + plot_h) + "\" x2=\"" +
           fixed2(left + plot_w) + "\" y2=\"" + fixed2(top + plot_h) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 10; i += 2) {
        const double tau = i / 10.0;
        svg += "<text x=\"" + fixed2(x_of(tau)) + "\" y=\"" + fixed2(top + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               fixed2(tau) + "</text>\n";
    }
    for (int i = 0; i <= 10; i += 2) {
        const double v = i / 10.0;
        svg += "<text x=\"" + fixed2(left - 8) + "\" y=\"" + fixed2(y_of(v) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fixed2(v) +
               "</text>\n";
    }
    svg += "<text x=\"" + fixed2(left + plot_w / 2) + "\" y=\"" + fixed2(height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">tau</text>\n";

    std::string points;
    for (const MetricReport& report : reports) {
        if (!points.empty()) points += ' ';
        points += fixed2(x_of(report.tau)) + "," + fixed2(y_of(report.value));
    }
    svg += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"" + points +
           "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string ranking_csv(const PriorityRanking& ranking) {
    std::string out = "rank,iso3,gain\n";
    for (std::size_t i = 0; i < ranking.ranked.size(); ++i)
        out += std::to_string(i + 1) + "," + ranking.ranked[i].first + "," +
               fixed6(ranking.ranked[i].second) + "\n";
    return out;
}

std::string ranking_json(std::string_view task_id, const PriorityRanking& ranking) {
    JsonWriter json;
    json.begin_object();
    json.key("task").value_string(task_id);
    json.key("tau").value_number(ranking.tau);
    json.key("basis_metric").value_number(ranking.basis_metric);
    json.key("ranked").begin_array();
    for (std::size_t i = 0; i < ranking.ranked.size(); ++i) {
        json.begin_object();
        json.key("rank").value_int(static_cast<long long>(i + 1));
        json.key("iso3").value_string(ranking.ranked[i].first);
        json.key("gain").value_number(ranking.ranked[i].second);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    return json.str() + "\n";
}

namespace {

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '-';
        out += path[i];
    }
    return out;
}

} // namespace

std::string estimates_csv(const PivotEstimates& estimates) {
    std::string out = "source,target,estimate,path\n";
    for (const auto& [key, estimate] : estimates)
        out += key.first + "," + key.second + "," + fixed6(estimate.estimate) + "," +
               join_path(estimate.path) + "\n";
    return out;
}

std::string estimate_json(const PivotEstimate& estimate) {
    JsonWriter json;
    json.begin_object();
    json.key("source").value_string(estimate.source);
    json.key("target").value_string(estimate.target);
    json.key("estimate").value_number(estimate.estimate);
    json.key("path").begin_array();
    for (const std::string& node : estimate.path) json.value_string(node);
    json.end_array();
    json.end_object();
    return json.str() + "\n";
}

std::string estimates_json(const PivotEstimates& estimates) {
    JsonWriter json;
    json.begin_array();
    for (const auto& [key, estimate] : estimates) {
        json.begin_object();
        json.key("source").value_string(key.first);
        json.key("target").value_string(key.second);
        json.key("estimate").value_number(estimate.estimate);
        json.key("path").begin_array();
        for (const std::string& node : estimate.path) json.value_string(node);
        json.end_array();
        json.end_object();
    }
    json.end_array();
    return json.str() + "\n";
}

std::string mentions_tsv(std::span<const PaperRecord> papers) {
    std::string out = "# columns: paper_id\tlanguages\n";
    for (const PaperRecord& paper : papers) {
        out += paper.paper_id;
        out += '\t';
        bool first = true;
        for (const std::string& iso3 : paper.languages) {
            if (!first) out += '|';
            out += iso3;
            first = false;
        }
        out += '\n';
    }
    return out;
}

std::string pubscan_summary_json(std::span<const PaperRecord> papers,
                                 const CorrelationReport& citations, const PubSummary& summary) {
    JsonWriter json;
    json.begin_object();
    json.key("papers").value_int(static_cast<long long>(papers.size()));
    json.key("languages_vs_citations").begin_object();
    json.key("sample_size").value_int(static_cast<long long>(citations.sample_size));
    json.key("spearman").value_number(citations.spearman);
    json.key("groups").begin_array();
    for (const auto& [key, size] : citations.group_sizes) {
        json.begin_object();
        json.key("year").value_int(key.first);
        json.key("venue").value_string(key.second);
        json.key("papers").value_int(static_cast<long long>(size));
        json.end_object();
    }
    json.end_array();
    json.end_object();
    json.key("papers_per_language").begin_object();
    json.key("spearman_log_gdp").value_number(summary.spearman_gdp);
    json.key("spearman_log_population").value_number(summary.spearman_population);
    json.key("rows").begin_array();
    for (const LanguagePubRow& row : summary.rows) {
        json.begin_object();
        json.key("iso3").value_string(row.iso3);
        json.key("paper_count").value_int(static_cast<long long>(row.paper_count));
        json.key("log_gdp").value_number(row.log_gdp);
        json.key("log_population").value_number(row.log_population);
        json.end_object();
    }
    json.end_array();
    json.end_object();
    json.end_object();
    return json.str() + "\n";
}

std::string contributions_svg(const MetricReport& report, std::size_t max_bars) {
    std::vector<std::pair<std::string, double>> top(report.contributions.begin(),
                                                    report.contributions.end());
    std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (top.size() > max_bars) top.resize(max_bars);

    constexpr double width = 640, bar_h = 16, gap = 6, left = 70, top_margin = 40;
    const double height = top_margin + static_cast<double>(top.size()) * (bar_h + gap) + 20;
    double max_value = 0.0;
    for (const auto& [iso3, v] : top) max_value = std::max(max_value, v);
    if (max_value <= 0) max_value = 1.0;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"" +
                      fixed2(height) + "\" viewBox=\"0 0 640 " + fixed2(height) + "\">\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" +
           escape_json(report.task_id) + " tau=" + fixed2(report.tau) + " M=" +
           fixed6(report.value) + "</text>\n";
    for (std::size_t i = 0; i < top.size(); ++i) {
        const double y = top_margin + static_cast<double>(i) * (bar_h + gap);
        const double w = top[i].second / max_value * (width - left - 90);
        svg += "<text x=\"" + fixed2(left - 6) + "\" y=\"" + fixed2(y + bar_h - 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">" +
               top[i].first + "</text>\n";
        svg += "<rect x=\"" + fixed2(left) + "\" y=\"" + fixed2(y) + "\" width=\"" + fixed2(w) +
               "\" height=\"" + fixed2(bar_h) + "\" fill=\"#2980b9\"/>\n";
        svg += "<text x=\"" + fixed2(left + w + 4) + "\" y=\"" + fixed2(y + bar_h - 4) +
               "\" font-family=\"monospace\" font-size=\"11\">" + fixed6(top[i].second) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace langequity::report
