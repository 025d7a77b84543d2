#pragma once

#include <span>
#include <vector>

#include "cvxdual/space.hpp"

namespace cvxdual {

/// Nonnegative weight assignment on a Space with finite total mass. On a
/// finite space this is exactly a countably additive measure; the purely
/// finitely additive phenomena are only visible asymptotically along ladders.
class Measure {
public:
    Measure(Space space, std::vector<double> weights);

    const Space& space() const noexcept { return space_; }
    std::span<const double> weights() const noexcept { return weights_; }
    int size() const noexcept { return static_cast<int>(weights_.size()); }

    double total_mass() const noexcept;

    /// Mass of the prefix {1..m}; m = 0 gives 0, m >= size gives total mass.
    double prefix_mass(int m) const noexcept;

    /// Mass of an arbitrary subset given as 1-based point labels.
    double subset_mass(std::span<const int> points) const;

    double at(int point) const;  // 1-based label

private:
    Space space_;
    std::vector<double> weights_;
};

}  // namespace cvxdual
