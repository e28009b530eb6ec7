#include "langequity/metric.hpp"

#include "langequity/errors.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace langequity;

namespace {

LanguageRecord lang(std::string code, double population) {
    return LanguageRecord{std::move(code), {}, {}, population, 0.0, std::nullopt, 0};
}

UtilityTable mono_table(const std::string& task,
                        std::vector<std::pair<std::string, double>> utilities,
                        DefaultPolicy policy = DefaultPolicy::zero()) {
    UtilityTable table;
    table.task_id = task;
    table.default_policy = policy;
    for (auto& [code, u] : utilities) table.entries.emplace(Subject::mono(code), u);
    return table;
}

std::string code_for(std::size_t i) {
    std::string code = "aaa";
    code[1] = char('a' + i / 26);
    code[2] = char('a' + i % 26);
    return code;
}

} // namespace

TEST_CASE("global metric is the demand-weighted utility sum") {
    std::vector<LanguageRecord> langs{lang("aaa", 300), lang("bbb", 100)};
    const DemandVector demand = demand_vector(langs, 1.0); // {0.75, 0.25}

    SUBCASE("perfect technology everywhere gives 1") {
        const auto table = mono_table("t", {{"aaa", 1.0}, {"bbb", 1.0}});
        CHECK(global_metric(table, demand).value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("no technology anywhere gives 0") {
        const auto table = mono_table("t", {{"aaa", 0.0}, {"bbb", 0.0}});
        CHECK(global_metric(table, demand).value == 0.0);
    }
    SUBCASE("hand-computed dot product") {
        const auto table = mono_table("t", {{"aaa", 0.8}, {"bbb", 0.4}});
        const MetricReport report = global_metric(table, demand);
        CHECK(report.value == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(report.coverage == 2);
        CHECK(report.contributions.at("aaa") == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(report.contributions.at("bbb") == doctest::Approx(0.1).epsilon(1e-12));
    }
    SUBCASE("unseen languages use the default policy") {
        const auto table = mono_table("t", {{"aaa", 0.8}});
        const MetricReport report = global_metric(table, demand);
        CHECK(report.value == doctest::Approx(0.6).epsilon(1e-12));
        CHECK(report.coverage == 1);

        const auto nli = mono_table("nli", {{"aaa", 0.8}}, DefaultPolicy::random_baseline(3));
        CHECK(global_metric(nli, demand).value ==
              doctest::Approx(0.6 + 0.25 / 3).epsilon(1e-12));
    }
}

TEST_CASE("metric agrees with the oracle dot product on random fixtures") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> pop(0.0, 1e9);
    std::uniform_real_distribution<double> util(0.0, 1.0);
    std::uniform_real_distribution<double> tau_dist(0.0, 1.0);

    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + rng() % 30;
        std::vector<LanguageRecord> langs;
        std::vector<std::pair<std::string, double>> utilities;
        for (std::size_t i = 0; i < n; ++i) {
            langs.push_back(lang(code_for(i), pop(rng)));
            if (rng() % 4 != 0) utilities.emplace_back(code_for(i), util(rng));
        }
        const auto table = mono_table("t", utilities);
        const DemandVector demand = demand_vector(langs, tau_dist(rng));
        const MetricReport report = global_metric(table, demand);

        std::vector<double> d, u;
        for (const auto& [iso3, weight] : demand.weights) {
            d.push_back(weight);
            u.push_back(utility_or_default(table, Subject::mono(iso3)));
        }
        CHECK(report.value == doctest::Approx(oracle::dot_product_metric(d, u)).epsilon(1e-9));
        CHECK(report.value >= 0.0);
        CHECK(report.value <= 1.0 + 1e-12);

        double contribution_sum = 0.0;
        for (const auto& [iso3, c] : report.contributions) {
            CHECK(c <= demand.weights.at(iso3) + 1e-15);
            contribution_sum += c;
        }
        CHECK(report.value == doctest::Approx(contribution_sum).epsilon(1e-9));
    }
}

TEST_CASE("raising one utility never lowers the metric") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> pop(0.0, 1e8);
    std::uniform_real_distribution<double> util(0.0, 1.0);

    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 2 + rng() % 20;
        std::vector<LanguageRecord> langs;
        std::vector<std::pair<std::string, double>> utilities;
        for (std::size_t i = 0; i < n; ++i) {
            langs.push_back(lang(code_for(i), pop(rng)));
            utilities.emplace_back(code_for(i), util(rng));
        }
        const DemandVector demand = demand_vector(langs, 1.0);
        const auto table = mono_table("t", utilities);
        const double before = global_metric(table, demand).value;

        const std::size_t target = rng() % n;
        auto raised = utilities;
        const double bump = util(rng) * (1.0 - raised[target].second);
        raised[target].second += bump;
        const double after = global_metric(mono_table("t", raised), demand).value;

        CHECK(after >= before - 1e-15);
        if (demand.weights.at(code_for(target)) > 0 && bump > 1e-12)
            CHECK(after > before);
    }
}

TEST_CASE("metric is linear in the utility table") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> util(0.0, 1.0);
    std::vector<LanguageRecord> langs{lang("aaa", 500), lang("bbb", 300), lang("ccc", 200)};
    const DemandVector demand = demand_vector(langs, 1.0);

    for (int round = 0; round < 50; ++round) {
        std::vector<std::pair<std::string, double>> ua, ub, mix;
        const double alpha = util(rng);
        for (const std::string code : {"aaa", "bbb", "ccc"}) {
            const double a = util(rng), b = util(rng);
            ua.emplace_back(code, a);
            ub.emplace_back(code, b);
            mix.emplace_back(code, alpha * a + (1 - alpha) * b);
        }
        const double ma = global_metric(mono_table("t", ua), demand).value;
        const double mb = global_metric(mono_table("t", ub), demand).value;
        const double mmix = global_metric(mono_table("t", mix), demand).value;
        CHECK(mmix == doctest::Approx(alpha * ma + (1 - alpha) * mb).epsilon(1e-12));
    }
}

TEST_CASE("pair tables need a counterpart and an exclusive universe") {
    UtilityTable table;
    table.task_id = "mt";
    table.entries.emplace(Subject::pair("aaa", "eng"), 0.5);
    table.entries.emplace(Subject::pair("bbb", "eng"), 0.25);

    std::vector<LanguageRecord> langs{lang("aaa", 300), lang("bbb", 100)};
    const DemandVector demand = demand_vector(langs, 1.0);

    SUBCASE("counterpart view reads the correct side") {
        const MetricReport report = global_metric(table, demand, Counterpart{"eng", PairSide::to});
        CHECK(report.value == doctest::Approx(0.75 * 0.5 + 0.25 * 0.25).epsilon(1e-12));
        CHECK(report.coverage == 2);
    }
    SUBCASE("pair table without a counterpart is a universe mismatch") {
        try {
            global_metric(table, demand);
            FAIL("expected UniverseMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UniverseMismatch);
        }
    }
    SUBCASE("counterpart inside the demand universe is rejected") {
        std::vector<LanguageRecord> with_eng{lang("aaa", 300), lang("eng", 100)};
        const DemandVector bad = demand_vector(with_eng, 1.0);
        CHECK_THROWS_AS(global_metric(table, bad, Counterpart{"eng", PairSide::to}), Error);
    }
    SUBCASE("from-side counterpart") {
        UtilityTable from;
        from.task_id = "mt";
        from.entries.emplace(Subject::pair("eng", "aaa"), 0.9);
        const MetricReport report = global_metric(from, demand, Counterpart{"eng", PairSide::from});
        CHECK(report.value == doctest::Approx(0.75 * 0.9).epsilon(1e-12));
        CHECK(report.coverage == 1);
    }
}

TEST_CASE("restricted metric renormalizes over the subset") {
    std::vector<LanguageRecord> langs{lang("aaa", 500), lang("bbb", 300), lang("ccc", 200)};
    const DemandVector demand = demand_vector(langs, 1.0);
    const auto table = mono_table("t", {{"aaa", 1.0}, {"bbb", 0.5}, {"ccc", 0.1}});

    SUBCASE("whole universe equals the global metric") {
        const std::vector<std::string> all{"aaa", "bbb", "ccc"};
        CHECK(restricted_metric(table, demand, all).value ==
              doctest::Approx(global_metric(table, demand).value).epsilon(1e-12));
    }
    SUBCASE("two-language subset, hand-computed") {
        const std::vector<std::string> subset{"bbb", "ccc"};
        // weights renormalize to 0.6 / 0.4
        CHECK(restricted_metric(table, demand, subset).value ==
              doctest::Approx(0.6 * 0.5 + 0.4 * 0.1).epsilon(1e-12));
    }
    SUBCASE("empty subset") {
        try {
            restricted_metric(table, demand, {});
            FAIL("expected EmptySubset");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::EmptySubset);
        }
    }
    SUBCASE("subset member outside the universe") {
        const std::vector<std::string> subset{"aaa", "zzz"};
        try {
            restricted_metric(table, demand, subset);
            FAIL("expected UniverseMismatch");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UniverseMismatch);
        }
    }
}

TEST_CASE("metric curves sweep tau") {
    SUBCASE("uniform utility is constant across tau") {
        std::vector<LanguageRecord> langs{lang("aaa", 900), lang("bbb", 100), lang("ccc", 10)};
        const auto table = mono_table("t", {{"aaa", 0.37}, {"bbb", 0.37}, {"ccc", 0.37}});
        const auto grid = default_tau_grid();
        const auto reports = metric_curve(table, langs, grid);
        REQUIRE(reports.size() == 11);
        for (const MetricReport& r : reports)
            CHECK(r.value == doctest::Approx(0.37).epsilon(1e-12));
    }
    SUBCASE("two-language fixture at tau 0 and 1") {
        std::vector<LanguageRecord> langs{lang("big", 900), lang("sml", 100)};
        const auto table = mono_table("t", {{"big", 1.0}, {"sml", 0.0}});
        const std::vector<double> taus{0.0, 1.0};
        const auto reports = metric_curve(table, langs, taus);
        CHECK(reports[0].value == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(reports[1].value == doctest::Approx(0.9).epsilon(1e-12));
    }
    SUBCASE("default grid is the 11 evenly spaced values") {
        const auto grid = default_tau_grid();
        REQUIRE(grid.size() == 11);
        CHECK(grid.front() == 0.0);
        CHECK(grid.back() == 1.0);
        CHECK(grid[5] == 0.5);
    }
    SUBCASE("empty grid is rejected") {
        std::vector<LanguageRecord> langs{lang("aaa", 1)};
        const auto table = mono_table("t", {{"aaa", 1.0}});
        CHECK_THROWS_AS(metric_curve(table, langs, std::vector<double>{}), Error);
    }
}
