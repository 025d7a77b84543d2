#include "cvxdual/func.hpp"

#include <algorithm>
#include <cmath>

namespace cvxdual {

Func::Func(Space space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != space_.size())
        throw usage_error("Func: value vector length must equal space size");
    for (double v : values_)
        if (!std::isfinite(v)) throw usage_error("Func: all entries must be finite");
}

Func Func::constant(const Space& space, double c) {
    return Func(space, std::vector<double>(static_cast<std::size_t>(space.size()), c));
}

Func Func::unit(const Space& space, int point) {
    if (point < 1 || point > space.size()) throw usage_error("Func::unit: point out of range");
    std::vector<double> v(static_cast<std::size_t>(space.size()), 0.0);
    v[static_cast<std::size_t>(point - 1)] = 1.0;
    return Func(space, std::move(v));
}

double Func::at(int point) const {
    if (point < 1 || point > size()) throw usage_error("Func::at: point out of range");
    return values_[static_cast<std::size_t>(point - 1)];
}

double Func::min_value() const noexcept {
    return *std::min_element(values_.begin(), values_.end());
}

double Func::max_value() const noexcept {
    return *std::max_element(values_.begin(), values_.end());
}

double Func::sup_norm() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

Func Func::operator+(const Func& g) const {
    if (!same_space(g)) throw usage_error("Func: space mismatch in addition");
    std::vector<double> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.values_[i];
    return Func(space_, std::move(out));
}

Func Func::operator-(const Func& g) const {
    if (!same_space(g)) throw usage_error("Func: space mismatch in subtraction");
    std::vector<double> out(values_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= g.values_[i];
    return Func(space_, std::move(out));
}

Func Func::operator+(double c) const {
    std::vector<double> out(values_);
    for (double& v : out) v += c;
    return Func(space_, std::move(out));
}

Func Func::operator*(double c) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= c;
    return Func(space_, std::move(out));
}

bool pointwise_leq(const Func& f, const Func& g) {
    if (!f.same_space(g)) throw usage_error("pointwise_leq: space mismatch");
    for (std::size_t i = 0; i < f.values_.size(); ++i)
        if (f.values_[i] > g.values_[i]) return false;
    return true;
}

}  // namespace cvxdual
