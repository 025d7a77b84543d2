#include "cvxdual/core_ops.hpp"

#include <algorithm>
#include <cmath>

namespace cvxdual {

double pairing(const Func& f, const Measure& mu) {
    if (f.space() != mu.space()) throw usage_error("pairing: space mismatch");
    double s = 0.0;
    const auto fv = f.values();
    const auto mw = mu.weights();
    for (std::size_t i = 0; i < fv.size(); ++i) s += fv[i] * mw[i];
    return s;
}

Func lattice_min(const Func& f, const Func& g) {
    if (!f.same_space(g)) throw usage_error("lattice_min: space mismatch");
    std::vector<double> out(f.values().begin(), f.values().end());
    const auto gv = g.values();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], gv[i]);
    return Func(f.space(), std::move(out));
}

Func lattice_min_one(const Func& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) v = std::min(v, 1.0);
    return Func(f.space(), std::move(out));
}

Measure dirac(const Space& space, int point) {
    if (point < 1 || point > space.size()) throw usage_error("dirac: point out of range");
    std::vector<double> w(static_cast<std::size_t>(space.size()), 0.0);
    w[static_cast<std::size_t>(point - 1)] = 1.0;
    return Measure(space, std::move(w));
}

std::vector<Space> make_truncation_ladder(std::span<const int> schedule) {
    if (schedule.empty()) throw usage_error("make_truncation_ladder: empty schedule");
    int prev = 0;
    for (int s : schedule) {
        if (s <= prev) throw usage_error("make_truncation_ladder: schedule must be strictly increasing");
        prev = s;
    }
    std::vector<Space> rungs;
    rungs.reserve(schedule.size());
    for (std::size_t j = 0; j < schedule.size(); ++j) {
        std::vector<int> prefixes(schedule.begin(), schedule.begin() + static_cast<std::ptrdiff_t>(j + 1));
        rungs.emplace_back(schedule[j], std::move(prefixes), static_cast<int>(j + 1));
    }
    return rungs;
}

std::vector<Space> make_truncation_ladder(std::initializer_list<int> schedule) {
    return make_truncation_ladder(std::span<const int>(schedule.begin(), schedule.size()));
}

std::vector<int> default_ladder_schedule(int max_exponent) {
    if (max_exponent < 1) throw usage_error("default_ladder_schedule: max_exponent >= 1 required");
    std::vector<int> schedule;
    for (int j = 1; j <= max_exponent; ++j) schedule.push_back(1 << j);
    return schedule;
}

Func profile_func(const Space& space, const std::function<double(int)>& recipe) {
    std::vector<double> v(static_cast<std::size_t>(space.size()));
    for (int m = 1; m <= space.size(); ++m) {
        const double x = recipe(m);
        if (!std::isfinite(x)) throw usage_error("profile_func: recipe produced a non-finite value");
        v[static_cast<std::size_t>(m - 1)] = x;
    }
    return Func(space, std::move(v));
}

}  // namespace cvxdual
