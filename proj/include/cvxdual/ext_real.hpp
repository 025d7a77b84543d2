#pragma once

#include <cmath>
#include <string>

#include "cvxdual/errors.hpp"

namespace cvxdual {

/// Extended real: a finite double or the distinguished element +infinity.
///
/// Deliberately a two-state type rather than IEEE inf, so a +infinity result
/// is always an explicit verdict and never an overflow artifact. Arithmetic
/// follows the usual convex-analysis conventions: r + inf = inf for finite r,
/// and 0 * inf = 0 in penalty sums. NaN can never be produced or stored.
class ExtReal {
public:
    ExtReal() = default;

    ExtReal(double v) : v_(v) {
        if (!std::isfinite(v)) throw usage_error("ExtReal: finite value required");
    }

    static ExtReal infinity() noexcept {
        ExtReal r;
        r.finite_ = false;
        return r;
    }

    bool is_finite() const noexcept { return finite_; }

    double value() const {
        if (!finite_) throw usage_error("ExtReal: value() on +infinity");
        return v_;
    }

    double value_or(double fallback) const noexcept { return finite_ ? v_ : fallback; }

    friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtReal(a.v_ + b.v_);
    }
    friend ExtReal operator+(const ExtReal& a, double b) { return a + ExtReal(b); }
    friend ExtReal operator+(double a, const ExtReal& b) { return ExtReal(a) + b; }
    friend ExtReal operator-(const ExtReal& a, double b) {
        if (!a.finite_) return infinity();
        return ExtReal(a.v_ - b);
    }

    /// lambda * x with lambda >= 0 and the 0 * inf = 0 convention.
    friend ExtReal scale(double lambda, const ExtReal& x) {
        if (lambda < 0.0) throw usage_error("scale: nonnegative multiplier required");
        if (lambda == 0.0) return ExtReal(0.0);
        if (!x.finite_) return infinity();
        return ExtReal(lambda * x.v_);
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) noexcept {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) noexcept { return !(a == b); }
    friend bool operator<(const ExtReal& a, const ExtReal& b) noexcept {
        if (!a.finite_) return false;           // inf < x never
        if (!b.finite_) return true;            // finite < inf always
        return a.v_ < b.v_;
    }
    friend bool operator>(const ExtReal& a, const ExtReal& b) noexcept { return b < a; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) noexcept { return !(b < a); }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) noexcept { return !(a < b); }

private:
    double v_ = 0.0;
    bool finite_ = true;
};

inline std::string to_string(const ExtReal& x) {
    return x.is_finite() ? std::to_string(x.value()) : std::string("inf");
}

/// |a - b| treating two infinities as distance 0 and mixed as +infinity.
inline ExtReal ext_abs_gap(const ExtReal& a, const ExtReal& b) {
    if (!a.is_finite() && !b.is_finite()) return ExtReal(0.0);
    if (!a.is_finite() || !b.is_finite()) return ExtReal::infinity();
    return ExtReal(std::fabs(a.value() - b.value()));
}

}  // namespace cvxdual
