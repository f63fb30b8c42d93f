#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace arw {

// splitmix64: tiny, fast, and fully specified, so streams are identical
// across platforms and standard-library versions. That matters here because
// experiment records promise that a stored seed reproduces every draw.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0,1]: the +1 keeps log() in the Box-Muller step finite.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // One pair of independent standard Gaussians (Box-Muller).
    std::pair<double, double> next_gaussian_pair() {
        const double u = next_unit();
        const double v = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * std::numbers::pi * v;
        return {r * std::cos(t), r * std::sin(t)};
    }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [a, b] = next_gaussian_pair();
        spare_ = b;
        have_spare_ = true;
        return a;
    }

    // Complex coefficient with Re, Im independent N(0, 1/2), so E|a|^2 = 1.
    std::complex<double> next_coefficient() {
        auto [a, b] = next_gaussian_pair();
        constexpr double half = 0.70710678118654752440; // 1/sqrt(2)
        return {a * half, b * half};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace arw
