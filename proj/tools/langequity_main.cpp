// Command-line front end: computes global utility metrics, tau sweeps,
// priority rankings, pivot estimates, and publication scans over a data
// directory of TSV files.

#include "langequity/demand.hpp"
#include "langequity/errors.hpp"
#include "langequity/ingest.hpp"
#include "langequity/metric.hpp"
#include "langequity/pivot.hpp"
#include "langequity/priority.hpp"
#include "langequity/pubscan.hpp"
#include "langequity/registry.hpp"
#include "langequity/report.hpp"
#include "langequity/tsv.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace langequity;

namespace {

struct DataContext {
    fs::path dir;
    Registry registry;
};

DataContext load_data(const std::string& data_dir) {
    DataContext ctx;
    ctx.dir = data_dir;
    const fs::path languages = ctx.dir / "languages.tsv";
    if (!fs::exists(languages))
        raise(Errc::IoError, "missing " + languages.string());
    ctx.registry = Registry::load(languages);
    return ctx;
}

/// What to compute for one --task value. Monolingual tasks use their
/// results directly; mt-to-X / mt-from-X read published pairs against a
/// fixed counterpart; mt-all-to-X / mt-all-from-X add pivot-path
/// estimates for unevaluated pairs.
struct TaskRun {
    std::string display_id;
    TaskSpec spec;
    std::optional<Counterpart> counterpart;
    bool use_pivot = false;
};

TaskRun parse_task(const std::string& task) {
    TaskRun run;
    run.display_id = task;
    auto mt_counterpart = [&run](std::string_view rest, PairSide side, bool pivot) {
        if (!is_iso3(rest))
            raise(Errc::UnknownTask, "'" + run.display_id + "': counterpart must be an iso3 code");
        run.spec = builtin_task_spec("mt");
        run.counterpart = Counterpart{std::string(rest), side};
        run.use_pivot = pivot;
    };
    if (task.starts_with("mt-to-")) {
        mt_counterpart(std::string_view(task).substr(6), PairSide::to, false);
    } else if (task.starts_with("mt-from-")) {
        mt_counterpart(std::string_view(task).substr(8), PairSide::from, false);
    } else if (task.starts_with("mt-all-to-")) {
        mt_counterpart(std::string_view(task).substr(10), PairSide::to, true);
    } else if (task.starts_with("mt-all-from-")) {
        mt_counterpart(std::string_view(task).substr(12), PairSide::from, true);
    } else if (task == "mt") {
        raise(Errc::UnknownTask, "'mt' needs a counterpart: use mt-to-<code> or mt-from-<code>");
    } else if (has_builtin_task(task)) {
        run.spec = builtin_task_spec(task);
    } else {
        raise(Errc::UnknownTask, "'" + task + "'");
    }
    return run;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& warning : warnings) std::cerr << "WARN " << warning << "\n";
}

/// Loads results and builds the per-language utility view for a task run.
/// Keeps the table/graph/estimates alive alongside the view.
struct TaskData {
    UtilityTable table;
    PivotGraph graph;
    PivotEstimates estimates;
    std::optional<UtilityView> view;
};

TaskData build_task_data(const TaskRun& run, const DataContext& ctx) {
    TaskData data;
    const fs::path results_path = ctx.dir / "results.tsv";
    TaskResultSet results = load_results(results_path, run.spec, ctx.registry);
    if (!run.counterpart) {
        data.table = build_utility_table(results, run.spec, default_policy_for(run.spec.task_id));
        print_warnings(data.table.warnings);
        data.view.emplace(data.table);
        return data;
    }
    if (!ctx.registry.contains(run.counterpart->iso3))
        raise(Errc::UnknownLanguage, "'" + run.counterpart->iso3 + "'");
    if (run.use_pivot) {
        data.graph = build_graph(results, run.spec);
        print_warnings(data.graph.warnings);
        if (!data.graph.has_node(run.counterpart->iso3))
            raise(Errc::UnknownNode,
                  "'" + run.counterpart->iso3 + "' has no published MT results");
        data.estimates =
            one_sided_estimates(data.graph, run.counterpart->iso3, run.counterpart->side);
        data.view.emplace(data.estimates, *run.counterpart);
        return data;
    }
    TaskResultSet side = run.counterpart->side == PairSide::to
                             ? filter_to_target(results, run.counterpart->iso3)
                             : filter_from_source(results, run.counterpart->iso3);
    data.table = build_utility_table(side, run.spec, default_policy_for(run.spec.task_id));
    print_warnings(data.table.warnings);
    data.view.emplace(data.table, *run.counterpart);
    return data;
}

/// Demand universe for a run: top-level registry rows (or an explicit
/// subset), never including the MT counterpart.
std::vector<LanguageRecord> build_universe(const DataContext& ctx, const TaskRun& run,
                                           const std::string& subset_name) {
    std::vector<LanguageRecord> universe;
    if (subset_name.empty()) {
        universe = ctx.registry.universe();
    } else {
        const fs::path subsets = ctx.dir / "subsets.tsv";
        if (!fs::exists(subsets)) raise(Errc::IoError, "missing " + subsets.string());
        std::vector<std::string> codes;
        for (const tsv::Row& row : tsv::read_file(subsets)) {
            if (row.fields.size() != 2)
                raise(Errc::ParseError, "line " + std::to_string(row.line) +
                                            ": expected subset_id and members");
            if (row.fields[0] == subset_name) {
                codes = tsv::split_list(row.fields[1]);
                break;
            }
        }
        if (codes.empty())
            raise(Errc::EmptySubset, "subset '" + subset_name + "' not found or empty");
        for (const std::string& code : codes) universe.push_back(ctx.registry.resolve(code));
    }
    if (run.counterpart)
        std::erase_if(universe, [&run](const LanguageRecord& rec) {
            return rec.iso3 == run.counterpart->iso3;
        });
    return universe;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) raise(Errc::IoError, "cannot write " + out_path);
    out << content;
}

std::vector<double> tau_grid(const std::vector<double>& taus, double tau, bool tau_set) {
    if (!taus.empty()) return taus;
    if (tau_set) return {tau};
    return {1.0};
}

struct CommonArgs {
    std::string data_dir;
    std::string task;
    std::string subset;
    std::string format = "tsv";
    std::string out;
    double tau = 1.0;
    bool tau_set = false;
    std::vector<double> taus;
    bool exclude_l2 = false;
};

int cmd_metric(const CommonArgs& args) {
    const DataContext ctx = load_data(args.data_dir);
    const TaskRun run = parse_task(args.task);
    const TaskData data = build_task_data(run, ctx);
    const std::vector<LanguageRecord> universe = build_universe(ctx, run, args.subset);
    const DemandOptions options{args.exclude_l2};

    std::vector<MetricReport> reports;
    std::vector<DemandVector> demands;
    for (double tau : tau_grid(args.taus, args.tau, args.tau_set)) {
        demands.push_back(demand_vector(universe, tau, options));
        MetricReport rep = global_metric(*data.view, demands.back());
        rep.task_id = run.display_id;
        reports.push_back(std::move(rep));
    }

    if (args.format == "json") {
        if (reports.size() == 1) {
            emit(report::metric_json(reports[0], demands[0], *data.view), args.out);
        } else {
            report::ReportCollector collector;
            for (std::size_t i = 0; i < reports.size(); ++i)
                collector.add(reports[i], demands[i], *data.view);
            emit(collector.finish(), args.out);
        }
    } else if (args.format == "svg") {
        emit(report::contributions_svg(reports[0]), args.out);
    } else if (args.format == "tsv") {
        emit(report::metric_tsv(reports), args.out);
    } else {
        raise(Errc::Usage, "unknown format '" + args.format + "'");
    }
    return 0;
}

int cmd_curve(const CommonArgs& args) {
    const DataContext ctx = load_data(args.data_dir);
    const TaskRun run = parse_task(args.task);
    const TaskData data = build_task_data(run, ctx);
    const std::vector<LanguageRecord> universe = build_universe(ctx, run, args.subset);

    std::vector<double> taus = args.taus;
    if (taus.empty()) taus = default_tau_grid();
    std::vector<MetricReport> reports =
        metric_curve(*data.view, universe, taus, DemandOptions{args.exclude_l2});
    for (MetricReport& rep : reports) rep.task_id = run.display_id;

    if (args.format == "json")
        emit(report::curve_json(reports), args.out);
    else if (args.format == "svg")
        emit(report::curve_svg(reports, run.display_id), args.out);
    else if (args.format == "tsv")
        emit(report::curve_tsv(reports), args.out);
    else
        raise(Errc::Usage, "unknown format '" + args.format + "'");
    return 0;
}

int cmd_rank(const CommonArgs& args, std::size_t top) {
    const DataContext ctx = load_data(args.data_dir);
    const TaskRun run = parse_task(args.task);
    const TaskData data = build_task_data(run, ctx);
    const std::vector<LanguageRecord> universe = build_universe(ctx, run, args.subset);

    const PriorityRanking ranking = priority_ranking(*data.view, universe, args.tau, top,
                                                     DemandOptions{args.exclude_l2});
    if (args.format == "json")
        emit(report::ranking_json(run.display_id, ranking), args.out);
    else if (args.format == "csv" || args.format == "tsv")
        emit(report::ranking_csv(ranking), args.out);
    else
        raise(Errc::Usage, "unknown format '" + args.format + "'");
    return 0;
}

int cmd_pivot(const CommonArgs& args, const std::string& source, const std::string& target,
              bool all_pairs) {
    const DataContext ctx = load_data(args.data_dir);
    const TaskSpec spec = builtin_task_spec("mt");
    const TaskResultSet results = load_results(ctx.dir / "results.tsv", spec, ctx.registry);
    const PivotGraph graph = build_graph(results, spec);
    print_warnings(graph.warnings);

    if (all_pairs) {
        const PivotEstimates estimates = all_pairs_estimates(graph);
        emit(args.format == "json" ? report::estimates_json(estimates)
                                   : report::estimates_csv(estimates),
             args.out);
        return 0;
    }

    const std::string src = ctx.registry.resolve(source).iso3;
    const std::string tgt = ctx.registry.resolve(target).iso3;
    if (src == tgt)
        raise(Errc::SelfPair, "'" + src + "': same-language translation is undefined");
    PivotEstimate estimate;
    estimate.source = src;
    estimate.target = tgt;
    // A language with no published MT results is simply unreachable.
    if (graph.has_node(src) && graph.has_node(tgt)) estimate = best_pivot_path(graph, src, tgt);

    if (args.format == "json") {
        emit(report::estimate_json(estimate), args.out);
    } else {
        std::string path;
        for (std::size_t i = 0; i < estimate.path.size(); ++i) {
            if (i) path += '-';
            path += estimate.path[i];
        }
        emit("# columns: source\ttarget\testimate\tpath\n" + src + "\t" + tgt + "\t" +
                 report::fixed6(estimate.estimate) + "\t" + path + "\n",
             args.out);
    }
    return 0;
}

int cmd_pubscan(const CommonArgs& args, const std::string& corpus, const std::string& metadata,
                const std::string& lexicon_path, const std::string& denylist_path,
                bool english_default) {
    const DataContext ctx = load_data(args.data_dir);

    std::set<std::string> denylist;
    if (!denylist_path.empty())
        denylist = load_denylist(denylist_path);
    else if (fs::exists(ctx.dir / "denylist.txt"))
        denylist = load_denylist(ctx.dir / "denylist.txt");
    else
        denylist = default_denylist();

    MentionLexicon lexicon;
    if (!lexicon_path.empty())
        lexicon = MentionLexicon::load(lexicon_path, std::move(denylist));
    else if (fs::exists(ctx.dir / "lexicon.tsv"))
        lexicon = MentionLexicon::load(ctx.dir / "lexicon.tsv", std::move(denylist));
    else
        lexicon = MentionLexicon::from_registry(ctx.registry, std::move(denylist));

    const fs::path corpus_dir = corpus;
    const fs::path metadata_path = metadata.empty() ? corpus_dir / "papers.tsv" : fs::path(metadata);
    std::vector<PaperRecord> papers = load_corpus(corpus_dir, metadata_path);

    const LexiconMatcher matcher(lexicon);
    scan_corpus(papers, matcher);
    if (english_default) apply_english_default(papers);
    citation_percentiles(papers);

    const CorrelationReport citations = languages_vs_citations_summary(papers);
    const PubSummary summary = papers_per_language_summary(papers, ctx.registry);

    const fs::path out_dir = args.out.empty() ? fs::path(".") : fs::path(args.out);
    fs::create_directories(out_dir);
    emit(report::mentions_tsv(papers), (out_dir / "mentions.tsv").string());
    emit(report::pubscan_summary_json(papers, citations, summary),
         (out_dir / "summary.json").string());
    return 0;
}

int cmd_report(const CommonArgs& args, const std::vector<std::string>& tasks) {
    const DataContext ctx = load_data(args.data_dir);
    const DemandOptions options{args.exclude_l2};
    std::vector<std::string> task_list = tasks;
    if (task_list.empty()) task_list = {"dep", "inflection", "nli", "qa", "tts"};

    report::ReportCollector collector;
    for (const std::string& task : task_list) {
        const TaskRun run = parse_task(task);
        const TaskData data = build_task_data(run, ctx);
        const std::vector<LanguageRecord> universe = build_universe(ctx, run, args.subset);
        for (double tau : tau_grid(args.taus, args.tau, args.tau_set)) {
            const DemandVector demand = demand_vector(universe, tau, options);
            MetricReport rep = global_metric(*data.view, demand);
            rep.task_id = run.display_id;
            collector.add(rep, demand, *data.view);
        }
    }
    emit(collector.finish(), args.out);
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Global utility metrics for language technologies"};
    app.require_subcommand(1);

    CommonArgs args;

    auto add_common = [&args](CLI::App* cmd, bool with_task) {
        cmd->add_option("--data-dir", args.data_dir,
                        "Directory with languages.tsv, results.tsv, ...")
            ->envname("LANGEQUITY_DATA")
            ->default_val(".");
        if (with_task)
            cmd->add_option("--task", args.task, "Task id (dep, inflection, nli, qa, tts, "
                                                 "mt-to-<code>, mt-from-<code>, mt-all-to-<code>, "
                                                 "mt-all-from-<code>)")
                ->required();
        cmd->add_option("--format", args.format, "Output format");
        cmd->add_option("--out", args.out, "Output file (default: stdout)");
        cmd->add_option("--subset", args.subset, "Restrict the universe to a named subset");
        cmd->add_flag("--exclude-l2", args.exclude_l2,
                      "Scale populations by the excluded_fraction column");
    };

    CLI::App* metric = app.add_subcommand("metric", "Compute M_tau for a task");
    add_common(metric, true);
    metric->add_option("--tau", args.tau, "Demand exponent")->check(CLI::Range(0.0, 1.0));
    metric->add_option("--taus", args.taus, "Comma-separated tau grid")->delimiter(',');

    CLI::App* curve = app.add_subcommand("curve", "Sweep M_tau over a tau grid");
    add_common(curve, true);
    curve->add_option("--taus", args.taus, "Comma-separated tau grid (default 0,0.1,...,1)")
        ->delimiter(',');

    std::size_t top = 10;
    CLI::App* rank = app.add_subcommand("rank", "Rank languages by marginal gain to M_tau");
    add_common(rank, true);
    rank->add_option("--tau", args.tau, "Demand exponent")->check(CLI::Range(0.0, 1.0));
    rank->add_option("--top", top, "How many languages to list")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));

    std::string source, target;
    bool all_pairs = false;
    CLI::App* pivot = app.add_subcommand("pivot", "Estimate MT quality through pivot paths");
    add_common(pivot, false);
    pivot->add_option("--source", source, "Source language");
    pivot->add_option("--target", target, "Target language");
    pivot->add_flag("--all", all_pairs, "Estimate every ordered pair");

    std::string corpus, metadata, lexicon_path, denylist_path;
    bool english_default = false;
    CLI::App* pubscan = app.add_subcommand("pubscan", "Scan publication text for language mentions");
    add_common(pubscan, false);
    pubscan->add_option("--corpus", corpus, "Directory of <paper_id>.txt files")->required();
    pubscan->add_option("--metadata", metadata, "Metadata TSV (default <corpus>/papers.tsv)");
    pubscan->add_option("--lexicon", lexicon_path, "Lexicon TSV (default: registry names)");
    pubscan->add_option("--denylist", denylist_path, "Deny-list file (one form per line)");
    pubscan->add_flag("--english-default", english_default,
                      "Assign {eng} to papers mentioning no language");

    std::vector<std::string> tasks;
    CLI::App* report_cmd = app.add_subcommand("report", "Full JSON report over several tasks");
    add_common(report_cmd, false);
    report_cmd->add_option("--tasks", tasks, "Task ids (default dep,inflection,nli,qa,tts)")
        ->delimiter(',');
    report_cmd->add_option("--tau", args.tau, "Demand exponent")->check(CLI::Range(0.0, 1.0));
    report_cmd->add_option("--taus", args.taus, "Comma-separated tau grid")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ERROR Usage: " << e.what() << "\n";
        return 2;
    }
    args.tau_set = metric->count("--tau") > 0 || rank->count("--tau") > 0 ||
                   report_cmd->count("--tau") > 0;

    if (metric->parsed()) return cmd_metric(args);
    if (curve->parsed()) return cmd_curve(args);
    if (rank->parsed()) return cmd_rank(args, top);
    if (pivot->parsed()) {
        if (!all_pairs && (source.empty() || target.empty()))
            raise(Errc::Usage, "pivot needs --source and --target, or --all");
        return cmd_pivot(args, source, target, all_pairs);
    }
    if (pubscan->parsed())
        return cmd_pubscan(args, corpus, metadata, lexicon_path, denylist_path, english_default);
    if (report_cmd->parsed()) return cmd_report(args, tasks);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "ERROR " << errc_name(e.code()) << ": " << e.detail() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ERROR Internal: " << e.what() << "\n";
        return 1;
    }
}
