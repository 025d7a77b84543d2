#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "cvxdual/functional.hpp"

namespace cvxdual {

struct ConjugateOptions {
    double box_radius = 8.0;       // initial sup-norm box
    double tol = 1e-9;             // growth considered "still moving"
    int max_doublings = 6;         // radii R, 2R, ..., 64R
    double growth_threshold = 1.0; // per-doubling growth certifying divergence
    int restarts = 4;              // random interior starts beside the origin
    int max_iterations = 400;      // ascent iterations per start
    std::uint64_t seed = 0x5eedULL;
};

struct ConjugateResult {
    ExtReal value;
    std::optional<Func> maximizer;  // present iff finite
    bool diverged = false;          // true iff value = +inf
    double box_radius_used = 0.0;
};

/// phi*(mu) = sup_f (<f,mu> - phi(f)) by projected supergradient ascent in a
/// sup-norm box, doubling the radius up to max_doublings times. Divergence is
/// declared when the running maximum grows by more than growth_threshold at
/// every doubling. The signed-weight overload exists for diagnostics
/// (monotone functionals must blow up along any negative coordinate).
ConjugateResult conjugate(const Functional& phi, const Measure& mu,
                          const ConjugateOptions& options = {});
ConjugateResult conjugate(const Functional& phi, std::span<const double> weights,
                          const ConjugateOptions& options = {});

/// phi*(mu) via the closed form when the functional carries one, otherwise
/// the numeric ascent.
ExtReal conjugate_value(const Functional& phi, const Measure& mu,
                        const ConjugateOptions& options = {});

/// Subgradient at an interior point, built coordinatewise from directional
/// derivatives: each weight lies in [-phi'(f;-e_i), phi'(f;e_i)]; point
/// intervals are taken as-is and interval coordinates are resolved to the
/// lowest-index extreme point consistent with the derivative bounds along
/// the constant direction. Nonnegative by monotonicity.
Measure subgradient(const Functional& phi, const Func& f);

struct RepresentationReport {
    ExtReal lhs;                       // phi(f)
    ExtReal rhs;                       // <f,witness> - phi*(witness)
    double gap = 0.0;                  // phi(f) + phi*(witness) - <f,witness>
    Measure witness;
    int fenchel_young_violations = 0;  // over the sampled measures
    bool conjugate_closed_form = false;
    double box_radius_used = 0.0;      // 0 when the closed form was used
};

struct MaxrepOptions {
    double tol = 1e-6;        // |gap| certification tolerance
    double weak_tol = 1e-9;   // Fenchel-Young sampling tolerance
    int fy_samples = 1000;
    std::uint64_t seed = 0x5eedULL;
    ConjugateOptions conjugate;
};

/// Certify the max-representation at f: extract the subgradient witness,
/// evaluate the conjugate there, and sample random measures for
/// Fenchel-Young violations. Throws certification_error when the conjugate
/// diverges at the witness.
RepresentationReport verify_maxrep(const Functional& phi, const Func& f,
                                   const MaxrepOptions& options = {});

/// max over the samples of <f,mu> - phi*(mu): a lower bound for phi(f) by
/// weak duality. nullopt when no sample has a finite conjugate.
std::optional<double> dual_value_grid(const Functional& phi, const Func& f,
                                      std::span<const Measure> samples,
                                      const ConjugateOptions& options = {});

/// For translation-invariant functionals the maxrep witness must be a
/// probability measure; true iff its total mass is within tol of 1.
bool probability_mass_check(const Functional& phi, const Func& f, double tol = 1e-8,
                            const MaxrepOptions& options = {});

}  // namespace cvxdual
