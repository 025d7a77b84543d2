#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cvxdual/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"cvxdual: duality verification suites for increasing convex functionals"};
    app.require_subcommand(1);

    std::string config_path;
    std::string report_path;
    bool quick = false;
    std::optional<std::string> suite;
    std::optional<std::uint64_t> seed;

    CLI::App* run = app.add_subcommand("run", "execute verification suites from a config file");
    run->add_option("config", config_path, "configuration file")->required();
    run->add_flag("--quick", quick, "restrict to n=4 and ladder <= 2^6");
    run->add_option("--suite", suite, "run a single suite by name");
    run->add_option("--report", report_path, "report file path");
    run->add_option("--seed", seed, "override the config seed");

    std::string case_id;
    CLI::App* explain = app.add_subcommand("explain", "print the full trace for one case");
    explain->add_option("case-id", case_id, "case identifier from a report")->required();
    explain->add_option("--report", report_path, "report file path");

    CLI::App* print_config =
        app.add_subcommand("print-config", "write the default configuration to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (print_config->parsed()) {
        std::cout << cvxdual::default_config_text();
        return 0;
    }

    if (report_path.empty()) report_path = cvxdual::default_report_path();

    if (explain->parsed()) return cvxdual::explain_case(report_path, case_id, std::cout);

    try {
        cvxdual::SuiteConfig config = cvxdual::parse_config_file(config_path);
        if (seed) config.seed = *seed;
        if (suite) config.suites = {*suite};
        if (quick) config.apply_quick();
        config.validate();
        return cvxdual::run_to_file(config, report_path, std::cout);
    } catch (const cvxdual::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
