#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cvxdual/errors.hpp"

namespace cvxdual {

/// Finite ground space: points labeled 1..n, every subset measurable, plus a
/// designated increasing family of compact prefix sets {1..m}. A Space may be
/// one rung of a truncation ladder standing in for the countable ground set.
class Space {
public:
    /// Plain finite space; the compact family is every prefix {1..m}.
    explicit Space(int size);

    /// Space with an explicit compact family given as prefix lengths
    /// (strictly increasing, each within 1..size).
    Space(int size, std::vector<int> compact_prefixes, std::optional<int> ladder_tag = std::nullopt);

    int size() const noexcept { return size_; }
    std::span<const int> compact_prefixes() const noexcept { return compact_prefixes_; }
    std::optional<int> ladder_tag() const noexcept { return ladder_tag_; }

    friend bool operator==(const Space& a, const Space& b) noexcept {
        return a.size_ == b.size_ && a.compact_prefixes_ == b.compact_prefixes_ &&
               a.ladder_tag_ == b.ladder_tag_;
    }
    friend bool operator!=(const Space& a, const Space& b) noexcept { return !(a == b); }

private:
    int size_ = 0;
    std::vector<int> compact_prefixes_;
    std::optional<int> ladder_tag_;
};

}  // namespace cvxdual
