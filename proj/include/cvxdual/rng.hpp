#pragma once

#include <cstdint>
#include <string_view>

namespace cvxdual {

/// Splittable counter-based generator (splitmix64 core). Every random choice
/// in the library flows from one seed through labeled children, so concurrent
/// or reordered execution cannot change the sampled values.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_double(); }

    int uniform_int(int lo, int hi) noexcept {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() noexcept { return (next_u64() & 1u) != 0; }

    /// Derive an independent child stream from a string label.
    Rng child(std::string_view label) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : label) {
            h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
            h *= 0x100000001b3ULL;
        }
        Rng r(state_ ^ h);
        r.next_u64();
        return r;
    }

    Rng child(std::uint64_t index) const noexcept {
        Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace cvxdual
