#pragma once

#include "langequity/ingest.hpp"
#include "langequity/utility.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace langequity {

/// Directed translation-quality graph. Edge (s,t) carries the best
/// normalized BLEU observed for s->t translation; pairs with no published
/// result (or a zero score) have no edge. Immutable after build.
struct PivotGraph {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, double> edges; // weight in (0,1]
    std::vector<std::string> warnings;

    bool has_node(const std::string& iso3) const { return nodes.contains(iso3); }
    double edge(const std::string& source, const std::string& target) const; // 0 if absent
};

/// Estimated quality of s->t translation: the maximum product of edge
/// weights over any path. An unreachable pair has estimate 0 and an empty
/// path; otherwise the path lists every node from source to target.
struct PivotEstimate {
    std::string source;
    std::string target;
    double estimate = 0.0;
    std::vector<std::string> path;
};

using PivotEstimates = std::map<std::pair<std::string, std::string>, PivotEstimate>;

/// Builds the graph from deduplicated MT results under a BLEU spec.
/// Scores above the normalizer are clamped to weight 1 with a warning
/// (a weight > 1 would make longer paths spuriously better).
PivotGraph build_graph(const TaskResultSet& mt_results, const TaskSpec& spec);

/// Globally optimal multiplicative path from source to target. A direct
/// edge counts as a length-1 path, so the estimate is never below it.
/// Since every weight is <= 1 the optimum is always a simple path.
PivotEstimate best_pivot_path(const PivotGraph& graph, const std::string& source,
                              const std::string& target);

/// best_pivot_path for every ordered node pair.
PivotEstimates all_pairs_estimates(const PivotGraph& graph);

/// Estimates from one language (side == from) or into one language
/// (side == to) for every other node.
enum class PairSide { to, from };
PivotEstimates one_sided_estimates(const PivotGraph& graph, const std::string& counterpart,
                                   PairSide side);

} // namespace langequity
