#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cvxdual/ext_real.hpp"

namespace cvxdual {

/// One verification case. lhs/rhs/gap carry the duality triple where that is
/// meaningful; condition-style cases use the trace instead.
struct CaseRecord {
    std::string case_id;
    std::string suite;
    bool passed = false;
    ExtReal lhs;
    ExtReal rhs;
    double gap = 0.0;
    std::vector<double> witness;
    std::vector<ExtReal> trace;
    std::string kind;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    double box_radius = 0.0;
    std::string note;
};

struct RunReport {
    std::string version;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> records;

    int passed_count() const;
    int failed_count() const;
    std::vector<std::string> failing_ids() const;

    /// Records sorted by case id regardless of execution order.
    void finalize();

    /// Line-delimited records; first line is the meta record. Deterministic
    /// for a fixed config and seed (no timestamps anywhere).
    std::string to_jsonl() const;
    static RunReport from_jsonl_file(const std::string& path);

    void write_summary(std::ostream& out) const;
};

/// FNV-1a over the raw byte patterns, as a short reproducibility digest.
std::string digest_hex(std::span<const double> values);
std::string digest_hex(std::span<const ExtReal> values);

}  // namespace cvxdual
