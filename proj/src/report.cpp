#include "cvxdual/report.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cvxdual {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const unsigned char* data, std::size_t len, std::uint64_t h) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

json ext_to_json(const ExtReal& x) {
    if (x.is_finite()) return x.value();
    return "inf";
}

ExtReal ext_from_json(const json& j) {
    if (j.is_string()) return ExtReal::infinity();
    return ExtReal(j.get<double>());
}

}  // namespace

std::string digest_hex(std::span<const double> values) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double v : values) {
        unsigned char bytes[sizeof(double)];
        std::memcpy(bytes, &v, sizeof(double));
        h = fnv1a(bytes, sizeof(double), h);
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string digest_hex(std::span<const ExtReal> values) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const ExtReal& x : values) {
        const double v = x.value_or(0.0);
        unsigned char bytes[sizeof(double) + 1];
        std::memcpy(bytes, &v, sizeof(double));
        bytes[sizeof(double)] = x.is_finite() ? 1 : 0;
        h = fnv1a(bytes, sizeof(bytes), h);
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

int RunReport::passed_count() const {
    int n = 0;
    for (const auto& r : records) n += r.passed ? 1 : 0;
    return n;
}

int RunReport::failed_count() const { return static_cast<int>(records.size()) - passed_count(); }

std::vector<std::string> RunReport::failing_ids() const {
    std::vector<std::string> ids;
    for (const auto& r : records)
        if (!r.passed) ids.push_back(r.case_id);
    return ids;
}

void RunReport::finalize() {
    std::sort(records.begin(), records.end(),
              [](const CaseRecord& a, const CaseRecord& b) { return a.case_id < b.case_id; });
}

std::string RunReport::to_jsonl() const {
    std::ostringstream out;
    json meta = {
        {"record", "meta"}, {"schema", 1},   {"version", version},
        {"seed", seed},     {"cases", records.size()}, {"failed", failed_count()},
    };
    out << meta.dump() << "\n";
    for (const auto& r : records) {
        json j = {
            {"record", "case"},
            {"case_id", r.case_id},
            {"suite", r.suite},
            {"verdict", r.passed ? "pass" : "fail"},
            {"lhs", ext_to_json(r.lhs)},
            {"rhs", ext_to_json(r.rhs)},
            {"gap", r.gap},
            {"witness_digest", digest_hex(std::span<const double>(r.witness))},
            {"trace_digest", digest_hex(std::span<const ExtReal>(r.trace))},
            {"kind", r.kind},
            {"tolerance", r.tolerance},
            {"seed", r.seed},
            {"box_radius", r.box_radius},
            {"note", r.note},
            {"witness", r.witness},
        };
        json trace = json::array();
        for (const auto& t : r.trace) trace.push_back(ext_to_json(t));
        j["trace"] = std::move(trace);
        out << j.dump() << "\n";
    }
    return out.str();
}

RunReport RunReport::from_jsonl_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("report file not found: " + path);
    RunReport report;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        if (j.at("record") == "meta") {
            report.version = j.value("version", "");
            report.seed = j.value("seed", std::uint64_t{0});
            continue;
        }
        CaseRecord r;
        r.case_id = j.at("case_id").get<std::string>();
        r.suite = j.at("suite").get<std::string>();
        r.passed = j.at("verdict").get<std::string>() == "pass";
        r.lhs = ext_from_json(j.at("lhs"));
        r.rhs = ext_from_json(j.at("rhs"));
        r.gap = j.at("gap").get<double>();
        r.kind = j.value("kind", "");
        r.tolerance = j.value("tolerance", 0.0);
        r.seed = j.value("seed", std::uint64_t{0});
        r.box_radius = j.value("box_radius", 0.0);
        r.note = j.value("note", "");
        r.witness = j.value("witness", std::vector<double>{});
        if (j.contains("trace"))
            for (const auto& t : j.at("trace")) r.trace.push_back(ext_from_json(t));
        report.records.push_back(std::move(r));
    }
    return report;
}

void RunReport::write_summary(std::ostream& out) const {
    out << "cvxdual " << version << " seed=" << seed << "\n";
    std::string current_suite;
    int suite_pass = 0, suite_total = 0;
    auto flush = [&]() {
        if (!current_suite.empty())
            out << "  " << current_suite << ": " << suite_pass << "/" << suite_total << " passed\n";
    };
    for (const auto& r : records) {
        if (r.suite != current_suite) {
            flush();
            current_suite = r.suite;
            suite_pass = suite_total = 0;
        }
        ++suite_total;
        suite_pass += r.passed ? 1 : 0;
    }
    flush();
    out << "total: " << passed_count() << "/" << records.size() << " passed";
    if (failed_count() > 0) {
        out << "\nfailing cases:\n";
        for (const auto& id : failing_ids()) out << "  " << id << "\n";
    } else {
        out << "\n";
    }
}

}  // namespace cvxdual
