#include "langequity/utility.hpp"

#include "langequity/errors.hpp"
#include "langequity/tsv.hpp"

#include <algorithm>
#include <cmath>

namespace langequity {

double DefaultPolicy::value() const {
    if (kind == Kind::random_baseline) {
        if (num_classes <= 0) raise(Errc::InvalidArgument, "random_baseline needs k >= 1");
        return 1.0 / num_classes;
    }
    return 0.0;
}

DefaultPolicy default_policy_for(std::string_view task_id) {
    if (task_id == "nli") return DefaultPolicy::random_baseline(3);
    return DefaultPolicy::zero();
}

NormalizeContext resolve_context(const TaskResultSet& results, const TaskSpec& spec) {
    NormalizeContext context;
    if (spec.normalizer.kind == Normalizer::Kind::empirical) {
        if (results.empty())
            raise(Errc::MissingContext, "task '" + spec.task_id + "': no results for empirical max");
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [subject, result] : results.best) best = std::max(best, result.score);
        context.empirical_max = best;
    } else if (spec.normalizer.kind == Normalizer::Kind::range_invert) {
        if (results.empty())
            raise(Errc::MissingContext, "task '" + spec.task_id + "': no results for score range");
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& [subject, result] : results.best) {
            lo = std::min(lo, result.score);
            hi = std::max(hi, result.score);
        }
        context.x_min = lo;
        context.x_max = hi;
    }
    return context;
}

double normalize_score(const TaskSpec& spec, double raw, const NormalizeContext& context,
                       bool* clamped) {
    if (clamped) *clamped = false;
    double value = 0.0;
    switch (spec.normalizer.kind) {
    case Normalizer::Kind::theoretical: {
        if (!spec.theoretical_max)
            raise(Errc::MissingContext, "task '" + spec.task_id + "': theoretical_max unset");
        if (*spec.theoretical_max <= 0)
            raise(Errc::DegenerateRange, "task '" + spec.task_id + "': theoretical_max <= 0");
        value = raw / *spec.theoretical_max;
        break;
    }
    case Normalizer::Kind::empirical: {
        if (!context.empirical_max)
            raise(Errc::MissingContext, "task '" + spec.task_id + "': empirical_max unresolved");
        if (*context.empirical_max <= 0)
            raise(Errc::DegenerateRange, "task '" + spec.task_id + "': empirical_max <= 0");
        value = raw / *context.empirical_max;
        break;
    }
    case Normalizer::Kind::fixed_constant: {
        if (spec.normalizer.constant <= 0)
            raise(Errc::MissingContext, "task '" + spec.task_id + "': fixed constant unset");
        value = raw / spec.normalizer.constant;
        break;
    }
    case Normalizer::Kind::range_invert: {
        if (!context.x_min || !context.x_max)
            raise(Errc::MissingContext, "task '" + spec.task_id + "': score range unresolved");
        if (*context.x_max == *context.x_min)
            raise(Errc::DegenerateRange,
                  "task '" + spec.task_id + "': all scores equal " +
                      tsv::format_double(*context.x_min) + ", inverted range undefined");
        value = (*context.x_max - raw) / (*context.x_max - *context.x_min);
        break;
    }
    }
    if (value > 1.0) {
        if (clamped) *clamped = true;
        value = 1.0;
    }
    return std::max(value, 0.0);
}

UtilityTable build_utility_table(const TaskResultSet& results, const TaskSpec& spec,
                                 DefaultPolicy policy) {
    spec.validate();
    if (results.empty())
        raise(Errc::InvalidArgument, "task '" + spec.task_id + "': no results to normalize");

    UtilityTable table;
    table.task_id = spec.task_id;
    table.default_policy = policy;
    table.spec_used = spec;
    table.context_used = resolve_context(results, spec);
    for (const auto& [subject, result] : results.best) {
        bool clamped = false;
        table.entries.emplace(subject,
                              normalize_score(spec, result.score, table.context_used, &clamped));
        if (clamped)
            table.warnings.push_back("score " + tsv::format_double(result.score) + " for " +
                                     subject.str() + " exceeds the normalizer; clamped to 1");
    }
    return table;
}

double utility_or_default(const UtilityTable& table, const Subject& subject) {
    auto it = table.entries.find(subject);
    if (it != table.entries.end()) return it->second;
    return table.default_policy.value();
}

} // namespace langequity
