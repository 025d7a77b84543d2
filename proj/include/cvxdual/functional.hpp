#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvxdual/core_ops.hpp"
#include "cvxdual/ext_real.hpp"

namespace cvxdual {

enum class FunctionalKind { linear, sup, entropic, indicator_p, worst_case, combinator };

std::string kind_name(FunctionalKind kind);

/// Increasing convex functional on the functions over one Space, with
/// optional closed-form conjugate and translation metadata. Monotonicity and
/// convexity are promised by the constructors and audited by sampling, never
/// assumed silently.
class Functional {
public:
    using Evaluator = std::function<ExtReal(std::span<const double>)>;
    using ConjugateForm = std::function<ExtReal(std::span<const double>)>;

    Functional(Space space, FunctionalKind kind, Evaluator evaluator,
               ConjugateForm closed_form_conjugate = nullptr,
               std::optional<bool> translation_invariant = std::nullopt,
               bool everywhere_finite = true);

    const Space& space() const noexcept { return space_; }
    FunctionalKind kind() const noexcept { return kind_; }

    /// Evaluate at a Func on the same space (usage error otherwise).
    ExtReal operator()(const Func& f) const;

    /// Trusted hot path: evaluate a raw value vector of matching length.
    ExtReal eval_values(std::span<const double> values) const;

    bool has_closed_form_conjugate() const noexcept { return static_cast<bool>(conjugate_); }
    ExtReal closed_form_conjugate(const Measure& mu) const;
    ExtReal closed_form_conjugate_values(std::span<const double> weights) const;

    std::optional<bool> translation_invariant() const noexcept { return translation_invariant_; }
    bool everywhere_finite() const noexcept { return everywhere_finite_; }

private:
    Space space_;
    FunctionalKind kind_;
    Evaluator eval_;
    ConjugateForm conjugate_;
    std::optional<bool> translation_invariant_;
    bool everywhere_finite_;
};

// --- catalog -------------------------------------------------------------

/// phi(f) = max_i f_i. Conjugate: 0 on probability measures, +inf otherwise.
Functional make_sup_functional(const Space& space);

/// phi(f) = 0 if max f <= 0, +inf otherwise.
Functional make_indicator_p(const Space& space);

/// phi(f) = log sum_i p_i e^{f_i} for a strictly positive probability
/// measure p. Translation invariant; conjugate is relative entropy.
Functional make_entropic(const Space& space, const Measure& reference);

/// phi(f) = <f, nu>.
Functional make_linear(const Measure& nu);

/// phi(f) = max_j (<f, mu_j> - c_j) over finitely many penalized scenarios.
Functional make_worst_case(std::vector<std::pair<Measure, double>> scenarios);

/// Pointwise maximum of two functionals on the same space.
Functional functional_max(const Functional& a, const Functional& b);

/// Convex combination lambda*a + (1-lambda)*b, lambda in [0,1].
Functional functional_mix(const Functional& a, const Functional& b, double lambda);

// --- domain probes and derivatives ---------------------------------------

/// Finite probe of the algebraic interior: directions plus a decreasing
/// epsilon grid. The standard probe uses +-unit vectors, +-constants and a
/// few seeded random directions with grid {2^-j : j = 0..20}.
struct DomainProbe {
    std::vector<Func> directions;
    std::vector<double> epsilon_grid;

    static DomainProbe standard(const Space& space, std::uint64_t seed = 0xd0a117u);
};

/// True iff every probe direction admits some epsilon on the grid keeping
/// phi finite (f itself must be in the effective domain).
bool in_interior(const Functional& phi, const Func& f, const DomainProbe& probe);
bool in_interior(const Functional& phi, const Func& f);

/// One-sided directional derivative phi'(f; g), approximated along a
/// decreasing epsilon grid. Convexity makes the difference quotients
/// non-increasing as epsilon shrinks, so the infimum over the grid is
/// reported; descent stops once quotients settle inside the floating-point
/// noise band for the current epsilon.
double directional_derivative(const Functional& phi, const Func& f, const Func& g);

/// Sampled translation audit: |phi(f+m) - phi(f) - m| <= tol over the given
/// samples and shifts m in {-1, 0.5, 2}. Samples where phi(f) = +inf are
/// skipped; a +inf at a shifted point fails the audit.
bool has_translation_property(const Functional& phi, std::span<const Func> samples,
                              double tol = 1e-10);

}  // namespace cvxdual
