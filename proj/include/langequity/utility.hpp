#pragma once

#include "langequity/ingest.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace langequity {

/// Utility assigned to languages with no published results: 0 for
/// generation-style tasks, the expected quality of random outputs (1/k)
/// for k-way classification.
struct DefaultPolicy {
    enum class Kind { zero, random_baseline };
    Kind kind = Kind::zero;
    int num_classes = 0;

    static DefaultPolicy zero() { return {Kind::zero, 0}; }
    static DefaultPolicy random_baseline(int k) { return {Kind::random_baseline, k}; }

    double value() const;
};

/// Default policy used for a built-in task (nli -> random baseline over
/// three classes, everything else -> zero).
DefaultPolicy default_policy_for(std::string_view task_id);

/// Data-dependent constants a normalizer needs: the empirical maximum, or
/// the observed score range for the inverted min-max transform.
struct NormalizeContext {
    std::optional<double> empirical_max;
    std::optional<double> x_min;
    std::optional<double> x_max;
};

/// Scans a result set for the constants spec's normalizer requires.
NormalizeContext resolve_context(const TaskResultSet& results, const TaskSpec& spec);

/// Maps a raw score into [0,1] per the spec's normalizer. Monotone
/// nondecreasing in `raw` for higher_better metrics, nonincreasing for
/// lower_better. Values that would exceed 1 (BLEU above Z) are clamped;
/// `clamped`, when given, reports that.
double normalize_score(const TaskSpec& spec, double raw, const NormalizeContext& context,
                       bool* clamped = nullptr);

struct UtilityTable {
    std::string task_id;
    std::map<Subject, double> entries; // utility in [0,1] per subject
    DefaultPolicy default_policy;
    TaskSpec spec_used;
    NormalizeContext context_used; // resolved normalizer constants
    std::vector<std::string> warnings;

    bool is_pair_table() const {
        return !entries.empty() && entries.begin()->first.is_pair();
    }
};

/// Normalizes every retained result. Under empirical or range_invert
/// normalization the best observed subject lands at exactly 1.0.
UtilityTable build_utility_table(const TaskResultSet& results, const TaskSpec& spec,
                                 DefaultPolicy policy = DefaultPolicy::zero());

/// Stored utility if present, else the table's default.
double utility_or_default(const UtilityTable& table, const Subject& subject);

} // namespace langequity
