#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvxdual/runner.hpp"
#include "doctest.h"

using namespace cvxdual;

namespace {

SuiteConfig quick_config() {
    SuiteConfig config;
    config.apply_quick();
    config.condition_families = 3;
    config.duality_cases = 2;
    return config;
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "cvxdual_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("default config text round-trips through the parser") {
    const SuiteConfig config = parse_config_text(default_config_text());
    CHECK(config.space_size == 8);
    CHECK(config.ladder_schedule.back() == 1024);
    CHECK(config.functionals.size() == 5);
    CHECK(config.suites.size() == 6);
    CHECK(config.seed == 42);
}

TEST_CASE("config validation names the offending field") {
    SUBCASE("negative tolerance") {
        try {
            parse_config_text("[tolerances]\nduality_gap = -1e-6\n");
            FAIL("expected config_error");
        } catch (const config_error& e) {
            CHECK(e.field() == "tolerances.duality_gap");
        }
    }
    SUBCASE("unknown functional") {
        try {
            parse_config_text("[functionals]\nenable = sup martingale\n");
            FAIL("expected config_error");
        } catch (const config_error& e) {
            CHECK(e.field() == "functionals.enable");
        }
    }
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_config_text("[space]\nvolume = 3\n"), config_error);
    }
    SUBCASE("non-numeric value") {
        CHECK_THROWS_AS(parse_config_text("[run]\nseed = many\n"), config_error);
    }
    SUBCASE("decreasing ladder") {
        CHECK_THROWS_AS(parse_config_text("[space]\nladder = 8 4\n"), config_error);
    }
}

TEST_CASE("the quick suite runs green end to end") {
    const RunReport report = run_suites(quick_config());
    CHECK(report.records.size() > 20);
    CHECK(report.failed_count() == 0);
    // Records are sorted by case id.
    for (std::size_t i = 1; i < report.records.size(); ++i)
        CHECK(report.records[i - 1].case_id < report.records[i].case_id);
    // Every record carries provenance.
    for (const auto& r : report.records) {
        CHECK_FALSE(r.case_id.empty());
        CHECK_FALSE(r.suite.empty());
        CHECK(r.seed == 42);
    }
}

TEST_CASE("identical seeds produce byte-identical reports") {
    const SuiteConfig config = quick_config();
    const std::string a = run_suites(config).to_jsonl();
    const std::string b = run_suites(config).to_jsonl();
    CHECK(a == b);

    SuiteConfig reseeded = config;
    reseeded.seed = 43;
    const std::string c = run_suites(reseeded).to_jsonl();
    CHECK(a != c);
}

TEST_CASE("run_to_file exit status reflects the verdicts") {
    const auto report_path = (temp_dir() / "report.jsonl").string();
    std::ostringstream summary;
    const int status = run_to_file(quick_config(), report_path, summary);
    CHECK(status == 0);
    CHECK(summary.str().find("passed") != std::string::npos);

    const RunReport loaded = RunReport::from_jsonl_file(report_path);
    CHECK(loaded.seed == 42);
    CHECK(loaded.failed_count() == 0);
    CHECK(loaded.records.size() > 20);
}

TEST_CASE("explain prints a stored case and rejects unknown ids") {
    const auto report_path = (temp_dir() / "explain.jsonl").string();
    std::ostringstream summary;
    REQUIRE(run_to_file(quick_config(), report_path, summary) == 0);

    const RunReport loaded = RunReport::from_jsonl_file(report_path);
    REQUIRE_FALSE(loaded.records.empty());
    const std::string known = loaded.records.front().case_id;

    std::ostringstream out;
    CHECK(explain_case(report_path, known, out) == 0);
    CHECK(out.str().find(known) != std::string::npos);
    CHECK(out.str().find("verdict") != std::string::npos);

    std::ostringstream err;
    CHECK(explain_case(report_path, "duality/no-such-case", err) == 2);
    CHECK(explain_case((temp_dir() / "missing.jsonl").string(), known, err) == 2);
}

TEST_CASE("duality suite on entropic n=5 certifies every case") {
    const SuiteConfig config = parse_config_text(
        "[space]\nsize = 5\nladder = 2 4\n"
        "[functionals]\nenable = entropic\n"
        "[suites]\nenable = duality\n");
    const RunReport report = run_suites(config);
    CHECK(report.failed_count() == 0);
    int maxrep_cases = 0;
    for (const auto& r : report.records) {
        if (r.case_id.find("/maxrep/") == std::string::npos) continue;
        ++maxrep_cases;
        CHECK(std::fabs(r.gap) <= 1e-6);
    }
    CHECK(maxrep_cases == 8);
}

TEST_CASE("suite selection restricts the records") {
    SuiteConfig config = quick_config();
    config.suites = {"escape"};
    const RunReport report = run_suites(config);
    CHECK_FALSE(report.records.empty());
    for (const auto& r : report.records) CHECK(r.suite == "escape");
    bool saw_attaining = false;
    for (const auto& r : report.records)
        if (r.case_id == "escape/attaining") {
            saw_attaining = true;
            CHECK(r.passed);
        }
    CHECK(saw_attaining);
}

TEST_CASE("report directory environment variable steers the default path") {
    const auto dir = temp_dir();
    setenv(kReportDirEnvVar, dir.c_str(), 1);
    CHECK(default_report_path() == dir.string() + "/cvxdual_report.jsonl");
    unsetenv(kReportDirEnvVar);
    CHECK(default_report_path() == "cvxdual_report.jsonl");
}

TEST_CASE("digests are stable and content-sensitive") {
    const std::vector<double> a = {1.0, 2.0, 3.0};
    const std::vector<double> b = {1.0, 2.0, 3.0000001};
    CHECK(digest_hex(std::span<const double>(a)) == digest_hex(std::span<const double>(a)));
    CHECK(digest_hex(std::span<const double>(a)) != digest_hex(std::span<const double>(b)));
}

TEST_SUITE_END();
