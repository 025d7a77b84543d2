#include "cvxdual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cvxdual/rng.hpp"

namespace cvxdual {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Concave ascent objective psi(f) = <f,mu> - phi(f), with -inf wherever phi
/// is +inf. Works on raw buffers; mu may carry signed weights (diagnostics).
class AscentObjective {
public:
    AscentObjective(const Functional& phi, std::span<const double> weights)
        : phi_(phi), weights_(weights.begin(), weights.end()) {}

    double operator()(std::span<const double> f) const {
        const ExtReal v = phi_.eval_values(f);
        if (!v.is_finite()) return kNegInf;
        double dot = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) dot += weights_[i] * f[i];
        return dot - v.value();
    }

    /// One-sided finite-difference supergradient mu - phi'(f). Coordinates
    /// whose probe leaves the effective domain get a strong inward push.
    void supergradient(std::span<const double> f, double box, std::vector<double>& out,
                       std::vector<double>& work) const {
        const double h = 1e-7 * std::max(1.0, box / 8.0);
        work.assign(f.begin(), f.end());
        const ExtReal base = phi_.eval_values(f);
        const double base_v = base.is_finite() ? base.value() : 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            work[i] = f[i] + h;
            const ExtReal v = phi_.eval_values(work);
            double slope;
            if (!v.is_finite() || !base.is_finite()) {
                slope = 1e6;  // blocked direction: push down hard
            } else {
                slope = (v.value() - base_v) / h;
            }
            out[i] = weights_[i] - slope;
            work[i] = f[i];
        }
    }

    std::span<const double> weights() const noexcept { return weights_; }

private:
    const Functional& phi_;
    std::vector<double> weights_;
};

void clamp_box(std::vector<double>& f, double radius) {
    for (double& x : f) x = std::clamp(x, -radius, radius);
}

struct AscentState {
    double best = kNegInf;
    std::vector<double> best_point;
    bool any_finite = false;
};

/// Projected ascent inside the sup-norm box: each iteration line-searches the
/// supergradient direction and the two constant directions +-1 (the canonical
/// unbounded rays for mass defects), takes the best candidate, and stops
/// after a run of sub-tolerance improvements. Step candidates follow a
/// geometric ladder scaled to the box, so the R/k schedule's reach covers the
/// whole box at every radius.
void ascend_from(const AscentObjective& psi, std::vector<double> f, double radius,
                 int max_iterations, AscentState& state) {
    const std::size_t n = f.size();
    std::vector<double> grad(n), work(n), candidate(n), trial(n), scheduled(n);
    std::vector<double> ones(n, 1.0), minus_ones(n, -1.0);

    clamp_box(f, radius);
    double current = psi(f);
    if (current > kNegInf) {
        state.any_finite = true;
        if (current > state.best) {
            state.best = current;
            state.best_point = f;
        }
    }

    int stalls = 0;
    for (int k = 1; k <= max_iterations; ++k) {
        psi.supergradient(f, radius, grad, work);
        double gnorm = 0.0;
        for (double gi : grad) gnorm = std::max(gnorm, std::fabs(gi));
        if (gnorm < 1e-14) break;

        double best_step_value = kNegInf;
        bool have_candidate = false;

        auto consider = [&](std::span<const double> point) {
            const double v = psi(point);
            if (v > kNegInf) state.any_finite = true;
            if (v > best_step_value) {
                best_step_value = v;
                candidate.assign(point.begin(), point.end());
                have_candidate = true;
            }
        };
        auto try_direction = [&](std::span<const double> dir, double dirnorm) {
            for (int s = 0; s < 30; ++s) {
                const double t = radius * std::ldexp(1.0, -s) / dirnorm;
                for (std::size_t i = 0; i < n; ++i) trial[i] = f[i] + t * dir[i];
                clamp_box(trial, radius);
                consider(trial);
            }
        };

        try_direction(grad, gnorm);
        try_direction(ones, 1.0);
        try_direction(minus_ones, 1.0);

        // Scheduled 1/k step scaled to the box; kept even when it loses the
        // line searches, as the non-monotone escape move.
        const double t_sched = radius / (static_cast<double>(k) * gnorm);
        for (std::size_t i = 0; i < n; ++i) scheduled[i] = f[i] + t_sched * grad[i];
        clamp_box(scheduled, radius);
        consider(scheduled);

        if (!have_candidate) break;

        const double prev_best = state.best;
        if (best_step_value > current) {
            f = candidate;
            current = best_step_value;
        } else {
            f = scheduled;
            current = psi(f);
        }
        if (current > state.best) {
            state.best = current;
            state.best_point = f;
        }
        if (state.best - prev_best <= 1e-10 * std::max(1.0, std::fabs(state.best))) {
            if (++stalls >= 5) break;
        } else {
            stalls = 0;
        }
    }
}

double run_box(const AscentObjective& psi, std::size_t n, double radius,
               const ConjugateOptions& options, Rng rng, AscentState& state) {
    // Deterministic origin start plus seeded interior restarts; for warm
    // continuation the previous best point is already recorded in the state.
    std::vector<std::vector<double>> starts;
    starts.emplace_back(n, 0.0);
    if (!state.best_point.empty()) starts.push_back(state.best_point);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<double> s(n);
        for (double& x : s) x = rng.uniform(-radius / 2.0, radius / 2.0);
        starts.push_back(std::move(s));
    }
    // Coordinate ray for the most negative weight: the canonical blow-up
    // direction when a signed diagnostic vector is passed in.
    double wmin = 0.0;
    std::size_t imin = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (psi.weights()[i] < wmin) {
            wmin = psi.weights()[i];
            imin = i;
        }
    if (wmin < 0.0) {
        std::vector<double> s(n, 0.0);
        s[imin] = -radius;
        starts.push_back(std::move(s));
    }
    for (auto& s : starts) ascend_from(psi, std::move(s), radius, options.max_iterations, state);
    return state.best;
}

ConjugateResult conjugate_impl(const Functional& phi, std::span<const double> weights,
                               const ConjugateOptions& options) {
    if (options.box_radius <= 0.0) throw usage_error("conjugate: positive box radius required");
    if (static_cast<int>(weights.size()) != phi.space().size())
        throw usage_error("conjugate: weight vector length mismatch");

    const AscentObjective psi(phi, weights);
    const std::size_t n = weights.size();
    Rng rng(options.seed);

    AscentState state;
    double radius = options.box_radius;
    double prev_best = run_box(psi, n, radius, options, rng.child(std::uint64_t{0}), state);

    bool all_growth_large = true;
    int doublings = 0;
    for (int d = 1; d <= options.max_doublings; ++d) {
        radius *= 2.0;
        const double value = run_box(psi, n, radius, options, rng.child(static_cast<std::uint64_t>(d)), state);
        ++doublings;
        const double growth = (value > kNegInf && prev_best > kNegInf) ? value - prev_best
                              : (value > kNegInf ? std::numeric_limits<double>::infinity() : 0.0);
        if (growth <= options.growth_threshold) all_growth_large = false;
        if (growth <= options.tol * std::max(1.0, std::fabs(value))) break;  // converged
        prev_best = value;
    }

    if (!state.any_finite)
        throw degenerate_error("conjugate: phi evaluated to +infinity at every tested point");

    ConjugateResult result;
    result.box_radius_used = radius;
    if (doublings == options.max_doublings && all_growth_large) {
        result.value = ExtReal::infinity();
        result.diverged = true;
        return result;
    }
    result.value = ExtReal(state.best);
    result.maximizer = Func(phi.space(), state.best_point);
    result.diverged = false;
    return result;
}

Measure sample_measure(const Space& space, Rng& rng) {
    std::vector<double> w(static_cast<std::size_t>(space.size()));
    if (rng.coin()) {
        // Normalized point on the simplex, occasionally rescaled off it.
        double total = 0.0;
        for (double& x : w) {
            x = -std::log(1.0 - rng.next_double());
            total += x;
        }
        const double mass = rng.coin() ? 1.0 : rng.uniform(0.25, 2.0);
        for (double& x : w) x = mass * x / total;
    } else {
        for (double& x : w) x = rng.uniform(0.0, 1.5);
    }
    return Measure(space, std::move(w));
}

}  // namespace

ConjugateResult conjugate(const Functional& phi, const Measure& mu,
                          const ConjugateOptions& options) {
    if (mu.space() != phi.space()) throw usage_error("conjugate: space mismatch");
    return conjugate_impl(phi, mu.weights(), options);
}

ConjugateResult conjugate(const Functional& phi, std::span<const double> weights,
                          const ConjugateOptions& options) {
    return conjugate_impl(phi, weights, options);
}

ExtReal conjugate_value(const Functional& phi, const Measure& mu,
                        const ConjugateOptions& options) {
    if (phi.has_closed_form_conjugate()) return phi.closed_form_conjugate(mu);
    return conjugate(phi, mu, options).value;
}

Measure subgradient(const Functional& phi, const Func& f) {
    if (f.space() != phi.space()) throw usage_error("subgradient: space mismatch");
    if (!in_interior(phi, f))
        throw domain_error("subgradient: f is not in the algebraic interior");

    const int n = f.size();
    std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Func e = Func::unit(f.space(), i);
        hi[static_cast<std::size_t>(i - 1)] = directional_derivative(phi, f, e);
        lo[static_cast<std::size_t>(i - 1)] = -directional_derivative(phi, f, e * -1.0);
    }
    const Func ones = Func::constant(f.space(), 1.0);
    const double sum_hi = directional_derivative(phi, f, ones);
    const double sum_lo = -directional_derivative(phi, f, ones * -1.0);

    constexpr double kSmoothTol = 1e-6;
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    std::vector<int> interval_coords;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        if (hi[k] - lo[k] <= kSmoothTol * std::max(1.0, std::fabs(hi[k]))) {
            w[k] = 0.5 * (lo[k] + hi[k]);
        } else {
            w[k] = lo[k];
            interval_coords.push_back(i);
        }
        w[k] = std::max(w[k], 0.0);  // monotone phi keeps the interval in R+
        sum += w[k];
    }

    if (interval_coords.empty()) {
        // Differentiable everywhere tested: project the mass onto the exact
        // derivative bounds along the constant direction. The coordinatewise
        // quotients carry the finite-difference bias; the +-1 quotients are
        // exact for the catalog, so the rescale pins the total mass.
        const double target = std::clamp(sum, sum_lo, sum_hi);
        if (sum > 0.0 && std::fabs(target - sum) > 0.0) {
            const double factor = target / sum;
            for (double& x : w) x *= factor;
        }
    } else {
        // Lowest-index extreme point: raise interval coordinates in label
        // order until the constant-direction lower bound is met.
        double deficit = sum_lo - sum;
        for (int i : interval_coords) {
            if (deficit <= 0.0) break;
            const std::size_t k = static_cast<std::size_t>(i);
            const double room = hi[k] - w[k];
            const double add = std::min(room, deficit);
            w[k] += add;
            deficit -= add;
        }
    }
    for (double& x : w) x = std::max(x, 0.0);
    return Measure(f.space(), std::move(w));
}

RepresentationReport verify_maxrep(const Functional& phi, const Func& f,
                                   const MaxrepOptions& options) {
    const ExtReal lhs = phi(f);
    if (!lhs.is_finite()) throw domain_error("verify_maxrep: phi(f) is not finite");

    const Measure witness = subgradient(phi, f);

    ExtReal conj_value;
    bool closed_form = phi.has_closed_form_conjugate();
    double box_used = 0.0;
    if (closed_form) {
        conj_value = phi.closed_form_conjugate(witness);
    } else {
        const ConjugateResult r = conjugate(phi, witness, options.conjugate);
        conj_value = r.value;
        box_used = r.box_radius_used;
    }
    if (!conj_value.is_finite()) {
        std::ostringstream msg;
        msg << "verify_maxrep: conjugate diverged at the extracted witness (kind="
            << kind_name(phi.kind()) << ", witness mass=" << witness.total_mass() << ")";
        throw certification_error(msg.str());
    }

    const double pair = pairing(f, witness);
    RepresentationReport report{
        .lhs = lhs,
        .rhs = ExtReal(pair - conj_value.value()),
        .gap = lhs.value() + conj_value.value() - pair,
        .witness = witness,
        .fenchel_young_violations = 0,
        .conjugate_closed_form = closed_form,
        .box_radius_used = box_used,
    };

    // Fenchel-Young sampling: <f,mu> <= phi(f) + phi*(mu) must never fail.
    // Needs an exact conjugate value per sample, so it runs on the closed
    // form only; a numeric lower bound could report spurious violations.
    if (phi.has_closed_form_conjugate()) {
        Rng rng = Rng(options.seed).child("fenchel-young");
        for (int s = 0; s < options.fy_samples; ++s) {
            const Measure mu = sample_measure(phi.space(), rng);
            const ExtReal conj = phi.closed_form_conjugate(mu);
            if (!conj.is_finite()) continue;
            if (pairing(f, mu) > lhs.value() + conj.value() + options.weak_tol)
                ++report.fenchel_young_violations;
        }
    }
    return report;
}

std::optional<double> dual_value_grid(const Functional& phi, const Func& f,
                                      std::span<const Measure> samples,
                                      const ConjugateOptions& options) {
    if (samples.empty()) throw usage_error("dual_value_grid: nonempty sample list required");
    std::optional<double> best;
    for (const Measure& mu : samples) {
        const ExtReal conj = conjugate_value(phi, mu, options);
        if (!conj.is_finite()) continue;
        const double v = pairing(f, mu) - conj.value();
        if (!best || v > *best) best = v;
    }
    return best;
}

bool probability_mass_check(const Functional& phi, const Func& f, double tol,
                            const MaxrepOptions& options) {
    bool translation;
    if (phi.translation_invariant().has_value()) {
        translation = *phi.translation_invariant();
    } else {
        std::vector<Func> samples;
        samples.push_back(f);
        samples.push_back(Func::zero(phi.space()));
        translation = has_translation_property(phi, samples);
    }
    if (!translation)
        throw usage_error("probability_mass_check: functional lacks the translation property");
    const RepresentationReport report = verify_maxrep(phi, f, options);
    return std::fabs(report.witness.total_mass() - 1.0) <= tol;
}

}  // namespace cvxdual
