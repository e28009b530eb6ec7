#include "langequity/pivot.hpp"

#include "langequity/errors.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace langequity;

namespace {

TaskResultSet mt_rows(std::vector<std::tuple<std::string, std::string, double>> rows) {
    std::vector<RawResult> results;
    for (auto& [src, tgt, bleu] : rows)
        results.push_back(RawResult{"mt", Subject::pair(src, tgt), bleu, "t"});
    return results_from_rows(std::move(results), builtin_task_spec("mt"));
}

PivotGraph graph_from_edges(const oracle::EdgeMap& edges) {
    PivotGraph graph;
    for (const auto& [key, weight] : edges) {
        graph.nodes.insert(key.first);
        graph.nodes.insert(key.second);
        if (weight > 0) graph.edges.emplace(key, weight);
    }
    return graph;
}

std::string node_name(std::size_t i) { return std::string("n") + char('a' + i) + "x"; }

} // namespace

TEST_CASE("graph construction normalizes and deduplicates edges") {
    SUBCASE("BLEU 35 becomes weight 0.5") {
        const PivotGraph graph = build_graph(mt_rows({{"aaa", "bbb", 35.0}}),
                                             builtin_task_spec("mt"));
        CHECK(graph.edge("aaa", "bbb") == 0.5);
        CHECK(graph.edge("bbb", "aaa") == 0.0); // directed
        CHECK(graph.nodes.size() == 2);
    }
    SUBCASE("duplicate pair keeps the maximum: {28, 42} -> 0.6") {
        const PivotGraph graph = build_graph(
            mt_rows({{"aaa", "bbb", 28.0}, {"aaa", "bbb", 42.0}}), builtin_task_spec("mt"));
        CHECK(graph.edge("aaa", "bbb") == doctest::Approx(0.6).epsilon(1e-15));
    }
    SUBCASE("Serbian-Croatian at BLEU 70 is a weight-1 edge") {
        const PivotGraph graph = build_graph(mt_rows({{"srp", "hrv", 70.0}}),
                                             builtin_task_spec("mt"));
        CHECK(graph.edge("srp", "hrv") == 1.0);
        CHECK(graph.warnings.empty());
    }
    SUBCASE("BLEU above 70 clamps with a warning") {
        const PivotGraph graph = build_graph(mt_rows({{"srp", "hrv", 71.5}}),
                                             builtin_task_spec("mt"));
        CHECK(graph.edge("srp", "hrv") == 1.0);
        CHECK(graph.warnings.size() == 1);
    }
    SUBCASE("zero scores leave no edge but keep the nodes") {
        const PivotGraph graph = build_graph(mt_rows({{"aaa", "bbb", 0.0}}),
                                             builtin_task_spec("mt"));
        CHECK(graph.edges.empty());
        CHECK(graph.nodes.size() == 2);
    }
}

TEST_CASE("best pivot path maximizes the product") {
    SUBCASE("single direct edge") {
        const PivotGraph graph = graph_from_edges({{{"src", "tgt"}, 0.9}});
        const PivotEstimate est = best_pivot_path(graph, "src", "tgt");
        CHECK(est.estimate == 0.9);
        CHECK(est.path == std::vector<std::string>{"src", "tgt"});
    }
    SUBCASE("two 0.8 hops compose to exactly their product") {
        const PivotGraph graph =
            graph_from_edges({{{"src", "pvt"}, 0.8}, {{"pvt", "tgt"}, 0.8}});
        const PivotEstimate est = best_pivot_path(graph, "src", "tgt");
        CHECK(est.estimate == 0.8 * 0.8);
        CHECK(est.estimate == doctest::Approx(0.64).epsilon(1e-12));
        CHECK(est.path == std::vector<std::string>{"src", "pvt", "tgt"});
    }
    SUBCASE("pivoting beats a weak direct edge") {
        const PivotGraph graph = graph_from_edges(
            {{{"src", "tgt"}, 0.5}, {{"src", "pvt"}, 0.8}, {{"pvt", "tgt"}, 0.7}});
        const PivotEstimate est = best_pivot_path(graph, "src", "tgt");
        CHECK(est.estimate == doctest::Approx(0.56).epsilon(1e-12));
        CHECK(est.path == std::vector<std::string>{"src", "pvt", "tgt"});

        const auto oracle_best = oracle::enumerate_all_paths(
            {{{"src", "tgt"}, 0.5}, {{"src", "pvt"}, 0.8}, {{"pvt", "tgt"}, 0.7}}, "src", "tgt");
        CHECK(est.estimate == oracle_best.product);
    }
    SUBCASE("disconnected pair estimates 0 with an empty path") {
        const PivotGraph graph = graph_from_edges({{{"aaa", "bbb"}, 0.5}, {{"ccc", "ddd"}, 0.5}});
        const PivotEstimate est = best_pivot_path(graph, "aaa", "ddd");
        CHECK(est.estimate == 0.0);
        CHECK(est.path.empty());
    }
    SUBCASE("unknown node") {
        const PivotGraph graph = graph_from_edges({{{"aaa", "bbb"}, 0.5}});
        try {
            best_pivot_path(graph, "aaa", "zzz");
            FAIL("expected UnknownNode");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownNode);
        }
    }
    SUBCASE("self pairs are rejected") {
        const PivotGraph graph = graph_from_edges({{{"aaa", "bbb"}, 0.5}});
        try {
            best_pivot_path(graph, "aaa", "aaa");
            FAIL("expected SelfPair");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::SelfPair);
        }
    }
}

TEST_CASE("pivot search matches exhaustive enumeration on random graphs") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> weight(0.05, 1.0);

    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 2 + rng() % 5; // up to 6 nodes
        oracle::EdgeMap edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || rng() % 3 == 0) continue;
                edges[{node_name(i), node_name(j)}] = weight(rng);
            }
        const PivotGraph graph = graph_from_edges(edges);

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const std::string s = node_name(i), t = node_name(j);
                if (!graph.has_node(s) || !graph.has_node(t)) continue;
                const PivotEstimate est = best_pivot_path(graph, s, t);
                const auto expected = oracle::enumerate_all_paths(edges, s, t);
                CHECK(est.estimate == doctest::Approx(expected.product).epsilon(1e-12));

                // Never below the direct edge.
                CHECK(est.estimate >= graph.edge(s, t));

                // The reported product is the product of the path's edges.
                if (!est.path.empty()) {
                    double product = 1.0;
                    for (std::size_t k = 0; k + 1 < est.path.size(); ++k)
                        product *= graph.edge(est.path[k], est.path[k + 1]);
                    CHECK(est.estimate == doctest::Approx(product).epsilon(1e-12));
                }
            }
    }
}

TEST_CASE("adding an edge never lowers any estimate") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> weight(0.05, 1.0);

    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 3 + rng() % 3;
        oracle::EdgeMap edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rng() % 2 == 0) edges[{node_name(i), node_name(j)}] = weight(rng);

        // Pick a missing edge to add.
        oracle::EdgeMap larger = edges;
        for (std::size_t i = 0; i < n && larger.size() == edges.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !edges.contains({node_name(i), node_name(j)})) {
                    larger[{node_name(i), node_name(j)}] = weight(rng);
                    break;
                }
        if (larger.size() == edges.size()) continue; // dense draw, nothing to add

        PivotGraph before = graph_from_edges(edges);
        PivotGraph after = graph_from_edges(larger);
        // Align node sets so estimates are comparable.
        for (std::size_t i = 0; i < n; ++i) {
            before.nodes.insert(node_name(i));
            after.nodes.insert(node_name(i));
        }
        const PivotEstimates ea = all_pairs_estimates(before);
        const PivotEstimates eb = all_pairs_estimates(after);
        for (const auto& [key, est] : ea)
            CHECK(eb.at(key).estimate >= est.estimate - 1e-15);
    }
}

TEST_CASE("all-pairs estimates cover every ordered pair") {
    SUBCASE("two nodes, one edge: exactly one nonzero estimate") {
        const PivotGraph graph = graph_from_edges({{{"aaa", "bbb"}, 0.5}});
        const PivotEstimates estimates = all_pairs_estimates(graph);
        REQUIRE(estimates.size() == 2);
        CHECK(estimates.at({"aaa", "bbb"}).estimate == 0.5);
        CHECK(estimates.at({"bbb", "aaa"}).estimate == 0.0);
    }
    SUBCASE("agrees with best_pivot_path pairwise") {
        const PivotGraph graph = graph_from_edges({{{"aaa", "bbb"}, 0.9},
                                                   {{"bbb", "ccc"}, 0.8},
                                                   {{"ccc", "aaa"}, 0.7},
                                                   {{"aaa", "ccc"}, 0.5}});
        const PivotEstimates estimates = all_pairs_estimates(graph);
        for (const auto& [key, est] : estimates) {
            const PivotEstimate direct = best_pivot_path(graph, key.first, key.second);
            CHECK(est.estimate == direct.estimate);
            CHECK(est.path == direct.path);
        }
    }
    SUBCASE("one-sided estimates match the all-pairs slice") {
        const PivotGraph graph = graph_from_edges(
            {{{"aaa", "eng"}, 0.9}, {{"bbb", "eng"}, 0.6}, {{"eng", "ccc"}, 0.4}});
        const PivotEstimates all = all_pairs_estimates(graph);
        const PivotEstimates to_eng = one_sided_estimates(graph, "eng", PairSide::to);
        REQUIRE(to_eng.size() == 3);
        for (const auto& [key, est] : to_eng) {
            CHECK(key.second == "eng");
            CHECK(est.estimate == all.at(key).estimate);
        }
        const PivotEstimates from_eng = one_sided_estimates(graph, "eng", PairSide::from);
        REQUIRE(from_eng.size() == 3);
        for (const auto& [key, est] : from_eng) CHECK(key.first == "eng");
    }
}
