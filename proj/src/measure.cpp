#include "cvxdual/measure.hpp"

#include <cmath>

namespace cvxdual {

Measure::Measure(Space space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != space_.size())
        throw usage_error("Measure: weight vector length must equal space size");
    for (double w : weights_) {
        if (!std::isfinite(w)) throw usage_error("Measure: all weights must be finite");
        if (w < 0.0) throw usage_error("Measure: weights must be nonnegative");
    }
}

double Measure::total_mass() const noexcept {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

double Measure::prefix_mass(int m) const noexcept {
    if (m <= 0) return 0.0;
    const int stop = std::min(m, size());
    double s = 0.0;
    for (int i = 0; i < stop; ++i) s += weights_[static_cast<std::size_t>(i)];
    return s;
}

double Measure::subset_mass(std::span<const int> points) const {
    double s = 0.0;
    for (int p : points) {
        if (p < 1 || p > size()) throw usage_error("Measure::subset_mass: point out of range");
        s += weights_[static_cast<std::size_t>(p - 1)];
    }
    return s;
}

double Measure::at(int point) const {
    if (point < 1 || point > size()) throw usage_error("Measure::at: point out of range");
    return weights_[static_cast<std::size_t>(point - 1)];
}

}  // namespace cvxdual
