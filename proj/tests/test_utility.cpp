#include "langequity/utility.hpp"

#include "langequity/errors.hpp"

#include <doctest.h>

#include <random>

using namespace langequity;

namespace {

TaskResultSet mono_results(const std::string& task, const TaskSpec& spec,
                           std::vector<std::pair<std::string, double>> scores) {
    std::vector<RawResult> rows;
    for (auto& [code, score] : scores)
        rows.push_back(RawResult{task, Subject::mono(code), score, "t"});
    return results_from_rows(std::move(rows), spec);
}

} // namespace

TEST_CASE("normalize_score covers every normalizer") {
    SUBCASE("accuracy against the theoretical max") {
        const TaskSpec spec = builtin_task_spec("nli");
        CHECK(normalize_score(spec, 64.0, {}) == doctest::Approx(0.64).epsilon(1e-12));
        CHECK(normalize_score(spec, 100.0, {}) == 1.0);
        CHECK(normalize_score(spec, 0.0, {}) == 0.0);
    }
    SUBCASE("BLEU 70 with Z = 70 is exactly 1") {
        const TaskSpec spec = builtin_task_spec("mt");
        CHECK(normalize_score(spec, 70.0, {}) == 1.0);
        CHECK(normalize_score(spec, 35.0, {}) == 0.5);
    }
    SUBCASE("BLEU above Z clamps to 1 and reports it") {
        const TaskSpec spec = builtin_task_spec("mt");
        bool clamped = false;
        CHECK(normalize_score(spec, 75.0, {}, &clamped) == 1.0);
        CHECK(clamped);
    }
    SUBCASE("MCD inverted min-max hits the endpoints exactly") {
        const TaskSpec spec = builtin_task_spec("tts");
        NormalizeContext ctx;
        ctx.x_min = 4.0;
        ctx.x_max = 8.0;
        CHECK(normalize_score(spec, 8.0, ctx) == 0.0);
        CHECK(normalize_score(spec, 4.0, ctx) == 1.0);
        CHECK(normalize_score(spec, 6.0, ctx) == 0.5);
    }
    SUBCASE("missing context") {
        TaskSpec spec = builtin_task_spec("dep");
        CHECK_THROWS_AS(normalize_score(spec, 50.0, {}), Error);
        try {
            normalize_score(builtin_task_spec("tts"), 5.0, {});
            FAIL("expected MissingContext");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::MissingContext);
        }
    }
    SUBCASE("degenerate inverted range") {
        NormalizeContext ctx;
        ctx.x_min = 5.0;
        ctx.x_max = 5.0;
        try {
            normalize_score(builtin_task_spec("tts"), 5.0, ctx);
            FAIL("expected DegenerateRange");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DegenerateRange);
        }
    }
    SUBCASE("monotone in the raw score") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> las(0.0, 100.0);
        NormalizeContext ctx;
        ctx.empirical_max = 100.0;
        const TaskSpec dep = builtin_task_spec("dep");
        const TaskSpec tts = builtin_task_spec("tts");
        NormalizeContext mcd_ctx;
        mcd_ctx.x_min = 2.0;
        mcd_ctx.x_max = 12.0;
        for (int i = 0; i < 200; ++i) {
            double a = las(rng), b = las(rng);
            if (a > b) std::swap(a, b);
            CHECK(normalize_score(dep, a, ctx) <= normalize_score(dep, b, ctx));
            const double ma = 2.0 + a / 10.0, mb = 2.0 + b / 10.0;
            CHECK(normalize_score(tts, ma, mcd_ctx) >= normalize_score(tts, mb, mcd_ctx));
        }
    }
}

TEST_CASE("build_utility_table resolves constants from the data") {
    SUBCASE("empirical normalization puts the best language at exactly 1") {
        const TaskSpec spec = builtin_task_spec("dep");
        const UtilityTable table = build_utility_table(
            mono_results("dep", spec, {{"aaa", 81.0}, {"bbb", 90.0}, {"ccc", 45.0}}), spec);
        CHECK(table.entries.size() == 3);
        CHECK(table.entries.at(Subject::mono("bbb")) == 1.0);
        CHECK(table.entries.at(Subject::mono("aaa")) == doctest::Approx(0.9).epsilon(1e-12));
        CHECK(*table.context_used.empirical_max == 90.0);
        for (const auto& [subject, u] : table.entries) {
            CHECK(u >= 0.0);
            CHECK(u <= 1.0);
        }
    }
    SUBCASE("two-language MCD set maps to {1, 0}") {
        const TaskSpec spec = builtin_task_spec("tts");
        const UtilityTable table =
            build_utility_table(mono_results("tts", spec, {{"aaa", 4.0}, {"bbb", 8.0}}), spec);
        CHECK(table.entries.at(Subject::mono("aaa")) == 1.0);
        CHECK(table.entries.at(Subject::mono("bbb")) == 0.0);
    }
    SUBCASE("single-language inverted range is rejected, not defaulted") {
        const TaskSpec spec = builtin_task_spec("tts");
        CHECK_THROWS_AS(
            build_utility_table(mono_results("tts", spec, {{"aaa", 5.0}}), spec), Error);
    }
    SUBCASE("empty result set is rejected") {
        const TaskSpec spec = builtin_task_spec("nli");
        TaskResultSet empty;
        empty.task_id = "nli";
        CHECK_THROWS_AS(build_utility_table(empty, spec), Error);
    }
    SUBCASE("ratio invariance under empirical normalization") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> las(1.0, 100.0);
        const TaskSpec spec = builtin_task_spec("dep");
        for (int round = 0; round < 30; ++round) {
            std::vector<std::pair<std::string, double>> scores;
            for (char c = 'a'; c < 'a' + 8; ++c)
                scores.emplace_back(std::string(3, c), las(rng));
            const double scale = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
            auto scaled = scores;
            for (auto& [code, s] : scaled) s *= scale;
            const UtilityTable base = build_utility_table(mono_results("dep", spec, scores), spec);
            const UtilityTable after =
                build_utility_table(mono_results("dep", spec, scaled), spec);
            for (const auto& [subject, u] : base.entries)
                CHECK(after.entries.at(subject) == doctest::Approx(u).epsilon(1e-12));
        }
    }
    SUBCASE("clamped scores leave a warning") {
        const TaskSpec spec = builtin_task_spec("mt");
        std::vector<RawResult> rows{{"mt", Subject::pair("srp", "hrv"), 75.0, "t"}};
        const UtilityTable table =
            build_utility_table(results_from_rows(std::move(rows), spec), spec);
        CHECK(table.entries.at(Subject::pair("srp", "hrv")) == 1.0);
        REQUIRE(table.warnings.size() == 1);
    }
}

TEST_CASE("unseen languages fall back to the task's default") {
    const TaskSpec nli = builtin_task_spec("nli");
    const UtilityTable nli_table = build_utility_table(
        mono_results("nli", nli, {{"eng", 91.0}}), nli, default_policy_for("nli"));
    CHECK(utility_or_default(nli_table, Subject::mono("eng")) == 0.91);
    CHECK(utility_or_default(nli_table, Subject::mono("yux")) == doctest::Approx(1.0 / 3));
    CHECK(utility_or_default(nli_table, Subject::mono("yux")) == doctest::Approx(0.3333).epsilon(1e-3));

    const TaskSpec qa = builtin_task_spec("qa");
    const UtilityTable qa_table =
        build_utility_table(mono_results("qa", qa, {{"eng", 80.0}}), qa, default_policy_for("qa"));
    CHECK(utility_or_default(qa_table, Subject::mono("yux")) == 0.0);

    SUBCASE("zero-policy default never exceeds the stored maximum") {
        double max_stored = 0.0;
        for (const auto& [subject, u] : qa_table.entries) max_stored = std::max(max_stored, u);
        CHECK(utility_or_default(qa_table, Subject::mono("yux")) <= max_stored);
    }
}
