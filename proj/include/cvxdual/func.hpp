#pragma once

#include <span>
#include <vector>

#include "cvxdual/space.hpp"

namespace cvxdual {

/// Real-valued function on a Space, stored densely. All entries are finite;
/// the lattice operations (pointwise min, min with 1) stay inside the type.
/// Point labels are 1-based (the space models {1, 2, ...}); raw spans are
/// plain 0-based arrays.
class Func {
public:
    Func(Space space, std::vector<double> values);

    static Func constant(const Space& space, double c);
    static Func zero(const Space& space) { return constant(space, 0.0); }
    static Func unit(const Space& space, int point);  // indicator of {point}

    const Space& space() const noexcept { return space_; }
    std::span<const double> values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

    double at(int point) const;  // 1-based label

    double min_value() const noexcept;
    double max_value() const noexcept;
    double sup_norm() const noexcept;

    bool same_space(const Func& other) const noexcept { return space_ == other.space_; }

    Func operator+(const Func& g) const;
    Func operator-(const Func& g) const;
    Func operator+(double c) const;
    Func operator*(double c) const;

    /// f <= g pointwise.
    friend bool pointwise_leq(const Func& f, const Func& g);

private:
    Space space_;
    std::vector<double> values_;
};

}  // namespace cvxdual
