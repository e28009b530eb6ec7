#include "langequity/pivot.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

#include <algorithm>
#include <queue>

namespace langequity {

double PivotGraph::edge(const std::string& source, const std::string& target) const {
    auto it = edges.find({source, target});
    return it == edges.end() ? 0.0 : it->second;
}

PivotGraph build_graph(const TaskResultSet& mt_results, const TaskSpec& spec) {
    spec.validate();
    if (spec.metric != MetricKind::bleu)
        raise(Errc::InvalidArgument, "pivot graph needs BLEU results, got " +
                                         std::string(metric_kind_name(spec.metric)));
    PivotGraph graph;
    const NormalizeContext context; // fixed-constant normalizer, nothing to resolve
    for (const auto& [subject, result] : mt_results.best) {
        if (!subject.is_pair())
            raise(Errc::InvalidArgument, "MT result for '" + subject.src + "' has no target");
        graph.nodes.insert(subject.src);
        graph.nodes.insert(subject.tgt);
        bool clamped = false;
        const double weight = normalize_score(spec, result.score, context, &clamped);
        if (clamped)
            graph.warnings.push_back("BLEU " + tsv::format_double(result.score) + " for " +
                                     subject.str() + " exceeds Z = " +
                                     tsv::format_double(spec.normalizer.constant) +
                                     "; edge clamped to 1");
        if (weight > 0.0) {
            double& slot = graph.edges[{subject.src, subject.tgt}];
            slot = std::max(slot, weight);
        }
    }
    return graph;
}

namespace {

// Dijkstra maximizing the product of weights. Valid because every weight
// is in (0,1]: extending a path never increases its product, so the node
// with the largest tentative product is settled. Products are accumulated
// by plain multiplication; the estimate for a chain is bit-identical to
// multiplying its edge weights in path order.
struct SearchState {
    std::map<std::string, double> best;
    std::map<std::string, std::string> parent;
};

SearchState run_search(const PivotGraph& graph, const std::string& source) {
    std::map<std::string, std::vector<std::pair<std::string, double>>> adjacency;
    for (const auto& [key, weight] : graph.edges) adjacency[key.first].emplace_back(key.second, weight);

    SearchState state;
    state.best[source] = 1.0;
    using Entry = std::pair<double, std::string>;
    std::priority_queue<Entry> queue;
    queue.push({1.0, source});
    while (!queue.empty()) {
        auto [product, node] = queue.top();
        queue.pop();
        auto settled = state.best.find(node);
        if (settled == state.best.end() || product < settled->second) continue;
        auto neighbors = adjacency.find(node);
        if (neighbors == adjacency.end()) continue;
        for (const auto& [next, weight] : neighbors->second) {
            const double candidate = product * weight;
            auto it = state.best.find(next);
            if (it == state.best.end() || candidate > it->second) {
                state.best[next] = candidate;
                state.parent[next] = node;
                queue.push({candidate, next});
            }
        }
    }
    return state;
}

PivotEstimate extract(const SearchState& state, const std::string& source,
                      const std::string& target) {
    PivotEstimate estimate;
    estimate.source = source;
    estimate.target = target;
    auto it = state.best.find(target);
    if (it == state.best.end()) return estimate; // unreachable: 0, empty path
    estimate.estimate = it->second;
    std::vector<std::string> path{target};
    std::string node = target;
    while (node != source) {
        node = state.parent.at(node);
        path.push_back(node);
    }
    std::reverse(path.begin(), path.end());
    estimate.path = std::move(path);
    return estimate;
}

void require_node(const PivotGraph& graph, const std::string& iso3) {
    if (!graph.has_node(iso3))
        raise(Errc::UnknownNode, "'" + iso3 + "' is not in the pivot graph");
}

} // namespace

PivotEstimate best_pivot_path(const PivotGraph& graph, const std::string& source,
                              const std::string& target) {
    require_node(graph, source);
    require_node(graph, target);
    if (source == target)
        raise(Errc::SelfPair, "'" + source + "': same-language translation is undefined");
    return extract(run_search(graph, source), source, target);
}

PivotEstimates all_pairs_estimates(const PivotGraph& graph) {
    PivotEstimates estimates;
    for (const std::string& source : graph.nodes) {
        const SearchState state = run_search(graph, source);
        for (const std::string& target : graph.nodes) {
            if (target == source) continue;
            estimates.emplace(std::make_pair(source, target), extract(state, source, target));
        }
    }
    return estimates;
}

PivotEstimates one_sided_estimates(const PivotGraph& graph, const std::string& counterpart,
                                   PairSide side) {
    require_node(graph, counterpart);
    PivotEstimates estimates;
    if (side == PairSide::from) {
        const SearchState state = run_search(graph, counterpart);
        for (const std::string& target : graph.nodes) {
            if (target == counterpart) continue;
            estimates.emplace(std::make_pair(counterpart, target),
                              extract(state, counterpart, target));
        }
    } else {
        for (const std::string& source : graph.nodes) {
            if (source == counterpart) continue;
            const SearchState state = run_search(graph, source);
            estimates.emplace(std::make_pair(source, counterpart),
                              extract(state, source, counterpart));
        }
    }
    return estimates;
}

} // namespace langequity
