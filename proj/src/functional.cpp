#include "cvxdual/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cvxdual/rng.hpp"

namespace cvxdual {

namespace {

constexpr double kRelUlp = 2.2e-16;

double span_max(std::span<const double> v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    return m;
}

/// Relative-entropy conjugate of the entropic functional: KL(mu || p) on the
/// probability simplex, +inf off it (or on any negative weight).
ExtReal entropic_conjugate(std::span<const double> mu, const std::vector<double>& log_p,
                           double mass_tol) {
    double mass = 0.0;
    for (double w : mu) {
        if (w < 0.0) return ExtReal::infinity();
        mass += w;
    }
    if (std::fabs(mass - 1.0) > mass_tol) return ExtReal::infinity();
    double kl = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > 0.0) kl += mu[i] * (std::log(mu[i]) - log_p[i]);
    return ExtReal(kl);
}

/// Exact small LP for the worst-case conjugate:
///   phi*(mu) = min { sum_j lambda_j c_j : sum_j lambda_j mu_j = mu,
///                    lambda in the simplex },
/// solved by enumerating basic subsets (an optimal vertex exists whenever the
/// problem is feasible). Intended for a handful of scenarios only.
class ScenarioLp {
public:
    ScenarioLp(std::vector<std::vector<double>> columns, std::vector<double> costs)
        : columns_(std::move(columns)), costs_(std::move(costs)) {}

    ExtReal solve(std::span<const double> mu) const {
        for (double w : mu)
            if (w < 0.0) return ExtReal::infinity();
        const std::size_t J = columns_.size();
        const std::size_t n = mu.size();
        double best = std::numeric_limits<double>::infinity();
        const std::uint32_t subsets = 1u << J;
        std::vector<std::size_t> support;
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            support.clear();
            for (std::size_t j = 0; j < J; ++j)
                if (mask & (1u << j)) support.push_back(j);
            std::vector<double> lambda;
            if (!solve_support(support, mu, n, lambda)) continue;
            double cost = 0.0;
            for (std::size_t k = 0; k < support.size(); ++k) cost += lambda[k] * costs_[support[k]];
            best = std::min(best, cost);
        }
        if (!std::isfinite(best)) return ExtReal::infinity();
        return ExtReal(best);
    }

private:
    bool solve_support(const std::vector<std::size_t>& support, std::span<const double> mu,
                       std::size_t n, std::vector<double>& lambda) const {
        const std::size_t k = support.size();
        // Normal equations for the system [columns ; ones-row] lambda = [mu ; 1].
        std::vector<double> G(k * k, 0.0), b(k, 0.0);
        for (std::size_t a = 0; a < k; ++a) {
            const auto& ca = columns_[support[a]];
            for (std::size_t c = a; c < k; ++c) {
                const auto& cc = columns_[support[c]];
                double dot = 1.0;  // ones-row contribution
                for (std::size_t i = 0; i < n; ++i) dot += ca[i] * cc[i];
                G[a * k + c] = dot;
                G[c * k + a] = dot;
            }
            double dotb = 1.0;
            for (std::size_t i = 0; i < n; ++i) dotb += ca[i] * mu[i];
            b[a] = dotb;
        }
        if (!gauss_solve(G, b, k)) return false;
        for (double l : b)
            if (l < -1e-10) return false;
        // Residual check against the original overdetermined system.
        double resid = 0.0, ones = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = -mu[i];
            for (std::size_t a = 0; a < k; ++a) r += b[a] * columns_[support[a]][i];
            resid = std::max(resid, std::fabs(r));
        }
        for (std::size_t a = 0; a < k; ++a) ones += b[a];
        resid = std::max(resid, std::fabs(ones));
        if (resid > 1e-9) return false;
        lambda = b;
        for (double& l : lambda) l = std::max(l, 0.0);
        return true;
    }

    static bool gauss_solve(std::vector<double>& A, std::vector<double>& b, std::size_t k) {
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < k; ++r)
                if (std::fabs(A[r * k + col]) > std::fabs(A[piv * k + col])) piv = r;
            if (std::fabs(A[piv * k + col]) < 1e-13) return false;
            if (piv != col) {
                for (std::size_t c = 0; c < k; ++c) std::swap(A[piv * k + c], A[col * k + c]);
                std::swap(b[piv], b[col]);
            }
            const double d = A[col * k + col];
            for (std::size_t r = 0; r < k; ++r) {
                if (r == col) continue;
                const double factor = A[r * k + col] / d;
                if (factor == 0.0) continue;
                for (std::size_t c = col; c < k; ++c) A[r * k + c] -= factor * A[col * k + c];
                b[r] -= factor * b[col];
            }
        }
        for (std::size_t r = 0; r < k; ++r) b[r] /= A[r * k + r];
        return true;
    }

    std::vector<std::vector<double>> columns_;
    std::vector<double> costs_;
};

}  // namespace

std::string kind_name(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::linear: return "linear";
        case FunctionalKind::sup: return "sup";
        case FunctionalKind::entropic: return "entropic";
        case FunctionalKind::indicator_p: return "indicator_p";
        case FunctionalKind::worst_case: return "worst_case";
        case FunctionalKind::combinator: return "combinator";
    }
    return "unknown";
}

Functional::Functional(Space space, FunctionalKind kind, Evaluator evaluator,
                       ConjugateForm closed_form_conjugate,
                       std::optional<bool> translation_invariant, bool everywhere_finite)
    : space_(std::move(space)),
      kind_(kind),
      eval_(std::move(evaluator)),
      conjugate_(std::move(closed_form_conjugate)),
      translation_invariant_(translation_invariant),
      everywhere_finite_(everywhere_finite) {
    if (!eval_) throw usage_error("Functional: evaluator required");
}

ExtReal Functional::operator()(const Func& f) const {
    if (f.space() != space_) throw usage_error("Functional: space mismatch");
    return eval_(f.values());
}

ExtReal Functional::eval_values(std::span<const double> values) const {
    if (static_cast<int>(values.size()) != space_.size())
        throw usage_error("Functional: value vector length mismatch");
    return eval_(values);
}

ExtReal Functional::closed_form_conjugate(const Measure& mu) const {
    if (mu.space() != space_) throw usage_error("Functional: space mismatch in conjugate");
    return closed_form_conjugate_values(mu.weights());
}

ExtReal Functional::closed_form_conjugate_values(std::span<const double> weights) const {
    if (!conjugate_) throw usage_error("Functional: no closed-form conjugate");
    if (static_cast<int>(weights.size()) != space_.size())
        throw usage_error("Functional: weight vector length mismatch");
    return conjugate_(weights);
}

Functional make_sup_functional(const Space& space) {
    auto eval = [](std::span<const double> v) { return ExtReal(span_max(v)); };
    // s*(mu) = 0 on the probability simplex, +inf elsewhere.
    auto conj = [](std::span<const double> mu) {
        double mass = 0.0;
        for (double w : mu) {
            if (w < 0.0) return ExtReal::infinity();
            mass += w;
        }
        return std::fabs(mass - 1.0) <= 1e-9 ? ExtReal(0.0) : ExtReal::infinity();
    };
    return Functional(space, FunctionalKind::sup, eval, conj, true, true);
}

Functional make_indicator_p(const Space& space) {
    auto eval = [](std::span<const double> v) {
        return span_max(v) <= 0.0 ? ExtReal(0.0) : ExtReal::infinity();
    };
    auto conj = [](std::span<const double> mu) {
        for (double w : mu)
            if (w < 0.0) return ExtReal::infinity();
        return ExtReal(0.0);
    };
    return Functional(space, FunctionalKind::indicator_p, eval, conj, false, false);
}

Functional make_entropic(const Space& space, const Measure& reference) {
    if (reference.space() != space) throw usage_error("make_entropic: space mismatch");
    if (std::fabs(reference.total_mass() - 1.0) > 1e-9)
        throw usage_error("make_entropic: reference must be a probability measure");
    std::vector<double> p(reference.weights().begin(), reference.weights().end());
    std::vector<double> log_p(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) throw usage_error("make_entropic: reference must be strictly positive");
        log_p[i] = std::log(p[i]);
    }
    auto eval = [p](std::span<const double> v) {
        const double m = span_max(v);
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += p[i] * std::exp(v[i] - m);
        return ExtReal(m + std::log(s));
    };
    auto conj = [log_p](std::span<const double> mu) { return entropic_conjugate(mu, log_p, 1e-9); };
    return Functional(space, FunctionalKind::entropic, eval, conj, true, true);
}

Functional make_linear(const Measure& nu) {
    std::vector<double> w(nu.weights().begin(), nu.weights().end());
    auto eval = [w](std::span<const double> v) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
        return ExtReal(s);
    };
    // phi* = 0 exactly at nu, +inf anywhere else.
    auto conj = [w](std::span<const double> mu) {
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (std::fabs(mu[i] - w[i]) > 1e-12 * std::max(1.0, std::fabs(w[i])))
                return ExtReal::infinity();
        return ExtReal(0.0);
    };
    const bool translation = std::fabs(nu.total_mass() - 1.0) <= 1e-12;
    return Functional(nu.space(), FunctionalKind::linear, eval, conj, translation, true);
}

Functional make_worst_case(std::vector<std::pair<Measure, double>> scenarios) {
    if (scenarios.empty()) throw usage_error("make_worst_case: empty scenario list");
    const Space space = scenarios.front().first.space();
    std::vector<std::vector<double>> columns;
    std::vector<double> costs;
    bool all_probability = true;
    for (const auto& [mu, c] : scenarios) {
        if (mu.space() != space) throw usage_error("make_worst_case: scenario space mismatch");
        if (!std::isfinite(c)) throw usage_error("make_worst_case: finite penalties required");
        columns.emplace_back(mu.weights().begin(), mu.weights().end());
        costs.push_back(c);
        if (std::fabs(mu.total_mass() - 1.0) > 1e-12) all_probability = false;
    }
    auto eval = [columns, costs](std::span<const double> v) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < columns.size(); ++j) {
            double s = -costs[j];
            for (std::size_t i = 0; i < v.size(); ++i) s += columns[j][i] * v[i];
            best = std::max(best, s);
        }
        return ExtReal(best);
    };
    Functional::ConjugateForm conj = nullptr;
    if (columns.size() <= 12) {
        ScenarioLp lp(columns, costs);
        conj = [lp](std::span<const double> mu) { return lp.solve(mu); };
    }
    return Functional(space, FunctionalKind::worst_case, eval, conj,
                      all_probability ? std::optional<bool>(true) : std::optional<bool>(),
                      true);
}

Functional functional_max(const Functional& a, const Functional& b) {
    if (a.space() != b.space()) throw usage_error("functional_max: space mismatch");
    const Functional lhs = a, rhs = b;
    auto eval = [lhs, rhs](std::span<const double> v) {
        const ExtReal x = lhs.eval_values(v);
        const ExtReal y = rhs.eval_values(v);
        return x < y ? y : x;
    };
    std::optional<bool> translation;
    if (lhs.translation_invariant() && rhs.translation_invariant())
        translation = *lhs.translation_invariant() && *rhs.translation_invariant();
    return Functional(a.space(), FunctionalKind::combinator, eval, nullptr, translation,
                      a.everywhere_finite() && b.everywhere_finite());
}

Functional functional_mix(const Functional& a, const Functional& b, double lambda) {
    if (a.space() != b.space()) throw usage_error("functional_mix: space mismatch");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw usage_error("functional_mix: lambda in [0,1]");
    const Functional lhs = a, rhs = b;
    auto eval = [lhs, rhs, lambda](std::span<const double> v) {
        return scale(lambda, lhs.eval_values(v)) + scale(1.0 - lambda, rhs.eval_values(v));
    };
    std::optional<bool> translation;
    if (lhs.translation_invariant() && rhs.translation_invariant())
        translation = *lhs.translation_invariant() && *rhs.translation_invariant();
    return Functional(a.space(), FunctionalKind::combinator, eval, nullptr, translation,
                      a.everywhere_finite() && b.everywhere_finite());
}

DomainProbe DomainProbe::standard(const Space& space, std::uint64_t seed) {
    DomainProbe probe;
    const int n = space.size();
    probe.directions.reserve(static_cast<std::size_t>(2 * n + 10));
    for (int i = 1; i <= n; ++i) {
        probe.directions.push_back(Func::unit(space, i));
        probe.directions.push_back(Func::unit(space, i) * -1.0);
    }
    probe.directions.push_back(Func::constant(space, 1.0));
    probe.directions.push_back(Func::constant(space, -1.0));
    Rng rng(seed);
    for (int k = 0; k < 8; ++k) {
        std::vector<double> d(static_cast<std::size_t>(n));
        for (double& x : d) x = rng.uniform(-1.0, 1.0);
        probe.directions.emplace_back(space, std::move(d));
    }
    for (int j = 0; j <= 20; ++j) probe.epsilon_grid.push_back(std::ldexp(1.0, -j));
    return probe;
}

bool in_interior(const Functional& phi, const Func& f, const DomainProbe& probe) {
    if (f.space() != phi.space()) throw usage_error("in_interior: space mismatch");
    if (!phi(f).is_finite()) return false;
    if (phi.everywhere_finite()) return true;
    if (probe.directions.empty() || probe.epsilon_grid.empty()) return false;
    std::vector<double> work(f.values().begin(), f.values().end());
    const auto base = f.values();
    for (const Func& g : probe.directions) {
        if (g.space() != f.space()) throw usage_error("in_interior: probe space mismatch");
        const auto gv = g.values();
        bool ok = false;
        for (double eps : probe.epsilon_grid) {
            for (std::size_t i = 0; i < work.size(); ++i) work[i] = base[i] + eps * gv[i];
            if (phi.eval_values(work).is_finite()) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool in_interior(const Functional& phi, const Func& f) {
    if (f.space() != phi.space()) throw usage_error("in_interior: space mismatch");
    if (!phi(f).is_finite()) return false;
    if (phi.everywhere_finite()) return true;
    return in_interior(phi, f, DomainProbe::standard(phi.space()));
}

// Difference quotients of a convex functional are non-increasing as epsilon
// shrinks, so the grid descends while genuine decreases keep arriving. A
// decrease only counts when it clears the floating-point noise band
// ~u*(|phi(f)| + |phi(f+eps g)|)/eps for the current epsilon; two quiet steps
// in a row end the descent. The grid reaches 2^-44 so that argmax gaps of
// order 1/n^2 on large rungs still resolve exactly.
double directional_derivative(const Functional& phi, const Func& f, const Func& g) {
    if (f.space() != phi.space() || g.space() != phi.space())
        throw usage_error("directional_derivative: space mismatch");
    const ExtReal phi_f = phi(f);
    if (!phi_f.is_finite())
        throw domain_error("directional_derivative: phi(f) is not finite");
    const double base_value = phi_f.value();

    const auto base = f.values();
    const auto dir = g.values();
    std::vector<double> work(base.begin(), base.end());

    bool have = false;
    double best = 0.0;
    int settled = 0;
    for (int j = 0; j <= 44; ++j) {
        const double eps = std::ldexp(1.0, -j);
        for (std::size_t i = 0; i < work.size(); ++i) work[i] = base[i] + eps * dir[i];
        const ExtReal v = phi.eval_values(work);
        if (!v.is_finite()) {
            settled = 0;
            continue;
        }
        const double q = (v.value() - base_value) / eps;
        if (!have) {
            best = q;
            have = true;
            continue;
        }
        const double noise =
            8.0 * kRelUlp * (std::fabs(v.value()) + std::fabs(base_value)) / eps + 1e-13;
        const bool significant =
            best - q > std::max(10.0 * noise, 1e-11 * std::max(1.0, std::fabs(best)));
        best = std::min(best, q);
        if (significant) {
            settled = 0;
        } else if (++settled >= 2) {
            break;
        }
    }
    if (!have)
        throw domain_error("directional_derivative: phi(f + eps g) infinite along the whole grid");
    return best;
}

bool has_translation_property(const Functional& phi, std::span<const Func> samples, double tol) {
    static constexpr double kShifts[] = {-1.0, 0.5, 2.0};
    bool any = false;
    for (const Func& f : samples) {
        const ExtReal base = phi(f);
        if (!base.is_finite()) continue;
        any = true;
        for (double m : kShifts) {
            const ExtReal shifted = phi(f + m);
            if (!shifted.is_finite()) return false;
            if (std::fabs(shifted.value() - base.value() - m) > tol) return false;
        }
    }
    return any;
}

}  // namespace cvxdual
