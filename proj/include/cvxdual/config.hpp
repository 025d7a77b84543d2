#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvxdual/errors.hpp"

namespace cvxdual {

struct Tolerances {
    double duality_gap = 1e-6;
    double weak_duality = 1e-9;
    double condition = 1e-8;
    double tightness = 1e-6;
    double regularity = 1e-10;
    double mass = 1e-8;
};

/// Runner configuration. The defaults are the full catalog on n = 8 with the
/// geometric ladder up to 2^10; quick mode restricts to n = 4 and 2^6.
struct SuiteConfig {
    int space_size = 8;
    std::vector<int> ladder_schedule = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    std::vector<std::string> functionals = {"sup", "indicator_p", "entropic", "linear",
                                            "worst_case"};
    std::vector<std::string> suites = {"duality",   "conditions", "escape",
                                       "tightness", "regularity", "approximation"};
    std::vector<std::string> escape_profiles = {"nonattaining", "attaining"};
    Tolerances tolerances;
    std::uint64_t seed = 42;
    int duality_cases = 8;
    int condition_families = 20;

    void validate() const;  // throws config_error naming the offending field
    void apply_quick();
};

/// Parse the plain-text tree format ([section] headers, key = value lines,
/// '#' comments). Unknown sections/keys and malformed values throw
/// config_error with the field name.
SuiteConfig parse_config_file(const std::string& path);
SuiteConfig parse_config_text(const std::string& text);

/// A fully commented configuration matching the defaults.
std::string default_config_text();

}  // namespace cvxdual
