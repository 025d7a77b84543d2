#pragma once

#include <cmath>
#include <vector>

#include "cvxdual/functional.hpp"
#include "cvxdual/rng.hpp"

namespace cvxdual::testutil {

inline Func random_func(const Space& space, Rng& rng, double lo = -2.0, double hi = 2.0) {
    std::vector<double> v(static_cast<std::size_t>(space.size()));
    for (double& x : v) x = rng.uniform(lo, hi);
    return Func(space, std::move(v));
}

inline Measure random_measure(const Space& space, Rng& rng, double hi = 1.5) {
    std::vector<double> w(static_cast<std::size_t>(space.size()));
    for (double& x : w) x = rng.uniform(0.0, hi);
    return Measure(space, std::move(w));
}

inline Measure random_probability(const Space& space, Rng& rng) {
    std::vector<double> w(static_cast<std::size_t>(space.size()));
    double total = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - rng.next_double());
        total += x;
    }
    for (double& x : w) x /= total;
    return Measure(space, std::move(w));
}

inline Measure uniform_probability(const Space& space) {
    return Measure(space, std::vector<double>(static_cast<std::size_t>(space.size()),
                                              1.0 / space.size()));
}

inline Measure geometric_probability(const Space& space) {
    std::vector<double> w(static_cast<std::size_t>(space.size()));
    double total = 0.0;
    for (int i = 0; i < space.size(); ++i) {
        w[static_cast<std::size_t>(i)] = std::max(std::ldexp(1.0, -(i + 1)), 1e-300);
        total += w[static_cast<std::size_t>(i)];
    }
    for (double& x : w) x /= total;
    return Measure(space, std::move(w));
}

/// Independent closed-form maximizer of <.,mu> - phi for the entropic
/// functional: the Gibbs reweighting of the reference. Test-side oracle.
inline std::vector<double> gibbs_weights(const Measure& reference, const Func& f) {
    const auto p = reference.weights();
    const auto v = f.values();
    const double m = f.max_value();
    std::vector<double> g(p.size());
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        g[i] = p[i] * std::exp(v[i] - m);
        total += g[i];
    }
    for (double& x : g) x /= total;
    return g;
}

/// Independent log-sum-exp recomputation, test-side oracle.
inline double logsumexp_oracle(const Measure& reference, const Func& f) {
    const auto p = reference.weights();
    const auto v = f.values();
    const double m = f.max_value();
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * std::exp(v[i] - m);
    return m + std::log(s);
}

/// Independent relative-entropy formula, test-side oracle.
inline double kl_divergence_oracle(const Measure& mu, const Measure& p) {
    double kl = 0.0;
    for (std::size_t i = 0; i < mu.weights().size(); ++i) {
        const double m = mu.weights()[i];
        if (m > 0.0) kl += m * (std::log(m) - std::log(p.weights()[i]));
    }
    return kl;
}

}  // namespace cvxdual::testutil
