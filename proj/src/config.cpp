#include "cvxdual/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cvxdual {

namespace {

const std::vector<std::string> kKnownFunctionals = {"sup", "indicator_p", "entropic", "linear",
                                                    "worst_case"};
const std::vector<std::string> kKnownSuites = {"duality",   "conditions", "escape",
                                               "tightness", "regularity", "approximation"};
const std::vector<std::string> kKnownProfiles = {"nonattaining", "attaining"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

double parse_positive(const std::string& field, const std::string& value) {
    double x = 0.0;
    try {
        std::size_t pos = 0;
        x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw config_error(field, "not a number: '" + value + "'");
    }
    if (!(x > 0.0)) throw config_error(field, "must be positive, got " + value);
    return x;
}

long long parse_integer(const std::string& field, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw config_error(field, "not an integer: '" + value + "'");
    }
}

void check_names(const std::string& field, const std::vector<std::string>& names,
                 const std::vector<std::string>& known) {
    for (const auto& n : names)
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw config_error(field, "unknown name '" + n + "'");
}

}  // namespace

void SuiteConfig::validate() const {
    if (space_size < 2) throw config_error("space.size", "must be at least 2");
    if (ladder_schedule.empty()) throw config_error("space.ladder", "must be nonempty");
    int prev = 0;
    for (int s : ladder_schedule) {
        if (s <= prev) throw config_error("space.ladder", "must be strictly increasing");
        prev = s;
    }
    if (functionals.empty()) throw config_error("functionals.enable", "must be nonempty");
    check_names("functionals.enable", functionals, kKnownFunctionals);
    if (suites.empty()) throw config_error("suites.enable", "must be nonempty");
    check_names("suites.enable", suites, kKnownSuites);
    check_names("escape.profiles", escape_profiles, kKnownProfiles);
    auto positive = [](const char* field, double v) {
        if (!(v > 0.0)) throw config_error(field, "must be positive");
    };
    positive("tolerances.duality_gap", tolerances.duality_gap);
    positive("tolerances.weak_duality", tolerances.weak_duality);
    positive("tolerances.condition", tolerances.condition);
    positive("tolerances.tightness", tolerances.tightness);
    positive("tolerances.regularity", tolerances.regularity);
    positive("tolerances.mass", tolerances.mass);
    if (duality_cases < 1) throw config_error("run.duality_cases", "must be at least 1");
    if (condition_families < 1) throw config_error("run.condition_families", "must be at least 1");
}

void SuiteConfig::apply_quick() {
    space_size = std::min(space_size, 4);
    std::vector<int> reduced;
    for (int s : ladder_schedule)
        if (s <= 64) reduced.push_back(s);
    if (reduced.size() >= 2) ladder_schedule = std::move(reduced);
    duality_cases = std::min(duality_cases, 4);
    condition_families = std::min(condition_families, 6);
}

SuiteConfig parse_config_text(const std::string& text) {
    SuiteConfig config;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("line " + std::to_string(line_no), "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line_no), "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string field = section + "." + key;

        if (section == "space") {
            if (key == "size") {
                config.space_size = static_cast<int>(parse_integer(field, value));
            } else if (key == "ladder") {
                config.ladder_schedule.clear();
                for (const auto& w : split_words(value))
                    config.ladder_schedule.push_back(static_cast<int>(parse_integer(field, w)));
            } else {
                throw config_error(field, "unknown key");
            }
        } else if (section == "functionals") {
            if (key == "enable") config.functionals = split_words(value);
            else throw config_error(field, "unknown key");
        } else if (section == "suites") {
            if (key == "enable") config.suites = split_words(value);
            else throw config_error(field, "unknown key");
        } else if (section == "escape") {
            if (key == "profiles") config.escape_profiles = split_words(value);
            else throw config_error(field, "unknown key");
        } else if (section == "tolerances") {
            if (key == "duality_gap") config.tolerances.duality_gap = parse_positive(field, value);
            else if (key == "weak_duality") config.tolerances.weak_duality = parse_positive(field, value);
            else if (key == "condition") config.tolerances.condition = parse_positive(field, value);
            else if (key == "tightness") config.tolerances.tightness = parse_positive(field, value);
            else if (key == "regularity") config.tolerances.regularity = parse_positive(field, value);
            else if (key == "mass") config.tolerances.mass = parse_positive(field, value);
            else throw config_error(field, "unknown key");
        } else if (section == "run") {
            if (key == "seed") {
                const long long s = parse_integer(field, value);
                if (s < 0) throw config_error(field, "must be nonnegative");
                config.seed = static_cast<std::uint64_t>(s);
            } else if (key == "duality_cases") {
                config.duality_cases = static_cast<int>(parse_integer(field, value));
            } else if (key == "condition_families") {
                config.condition_families = static_cast<int>(parse_integer(field, value));
            } else {
                throw config_error(field, "unknown key");
            }
        } else if (section.empty()) {
            throw config_error("line " + std::to_string(line_no), "key outside any section");
        } else {
            throw config_error(section, "unknown section");
        }
    }
    config.validate();
    return config;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("file", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::string default_config_text() {
    return R"(# cvxdual suite configuration
[space]
size = 8
ladder = 2 4 8 16 32 64 128 256 512 1024

[functionals]
# catalog: sup indicator_p entropic linear worst_case
enable = sup indicator_p entropic linear worst_case

[suites]
# available: duality conditions escape tightness regularity approximation
enable = duality conditions escape tightness regularity approximation

[escape]
profiles = nonattaining attaining

[tolerances]
duality_gap = 1e-6
weak_duality = 1e-9
condition = 1e-8
tightness = 1e-6
regularity = 1e-10
mass = 1e-8

[run]
seed = 42
duality_cases = 8
condition_families = 20
)";
}

}  // namespace cvxdual
