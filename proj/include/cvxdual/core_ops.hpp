#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cvxdual/func.hpp"
#include "cvxdual/measure.hpp"

namespace cvxdual {

/// <f, mu> = sum_i f_i * mu_i. Bilinear; usage error on space mismatch.
double pairing(const Func& f, const Measure& mu);

/// Pointwise minimum f ^ g (Stone lattice operation).
Func lattice_min(const Func& f, const Func& g);

/// Pointwise minimum with the constant one, f ^ 1.
Func lattice_min_one(const Func& f);

/// Unit point mass at the given 1-based point label.
Measure dirac(const Space& space, int point);

/// One Space per schedule entry; rung j carries the schedule prefixes up to
/// its own size as compact family and ladder_tag = j (1-based).
std::vector<Space> make_truncation_ladder(std::span<const int> schedule);
std::vector<Space> make_truncation_ladder(std::initializer_list<int> schedule);

/// Geometric default schedule {2^j : j = 1..12}.
std::vector<int> default_ladder_schedule(int max_exponent = 12);

/// Densify a point-label recipe m -> f(m) onto a space (restriction of a
/// function on the countable ground set to a truncation rung).
Func profile_func(const Space& space, const std::function<double(int)>& recipe);

}  // namespace cvxdual
