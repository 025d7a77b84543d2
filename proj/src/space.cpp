#include "cvxdual/space.hpp"

#include <numeric>

namespace cvxdual {

Space::Space(int size) : size_(size) {
    if (size <= 0) throw usage_error("Space: positive size required");
    compact_prefixes_.resize(static_cast<std::size_t>(size));
    std::iota(compact_prefixes_.begin(), compact_prefixes_.end(), 1);
}

Space::Space(int size, std::vector<int> compact_prefixes, std::optional<int> ladder_tag)
    : size_(size), compact_prefixes_(std::move(compact_prefixes)), ladder_tag_(ladder_tag) {
    if (size <= 0) throw usage_error("Space: positive size required");
    int prev = 0;
    for (int m : compact_prefixes_) {
        if (m <= prev) throw usage_error("Space: compact prefixes must be strictly increasing");
        if (m > size_) throw usage_error("Space: compact prefix exceeds space size");
        prev = m;
    }
}

}  // namespace cvxdual
