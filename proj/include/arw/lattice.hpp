#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "arw/errors.hpp"

namespace arw {

// A lattice point on the sphere of squared radius n. Unused trailing
// components stay 0 for dim == 2, which keeps lexicographic comparisons and
// hashing uniform across dimensions.
using Point = std::array<std::int64_t, 3>;

inline Point negated(const Point& p) { return {-p[0], -p[1], -p[2]}; }

inline Point add(const Point& a, const Point& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Packs a point whose components are < 2^20 in magnitude into a hash key.
inline std::uint64_t pack_point(const Point& p) {
    constexpr std::int64_t offset = 1 << 20;
    return (static_cast<std::uint64_t>(p[0] + offset) << 42) |
           (static_cast<std::uint64_t>(p[1] + offset) << 21) |
           static_cast<std::uint64_t>(p[2] + offset);
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// True iff n is not congruent to 0, 4 or 7 mod 8. For dim 3 this guarantees
// primitive representations, hence unbounded multiplicity along the sequence.
inline bool is_admissible(std::int64_t n) {
    if (n < 1) throw std::domain_error("is_admissible: n must be positive");
    const auto m = n % 8;
    return m != 0 && m != 4 && m != 7;
}

// The frequency set: all integer vectors of squared norm n, plus the
// half set of representatives of the antipodal pairs. `points` is sorted
// lexicographically and the half set keeps the lexicographically larger
// member of each pair, so every downstream draw is reproducible.
class FrequencySet {
public:
    FrequencySet(std::int64_t n, int dim, std::vector<Point> points)
        : n_(n), dim_(dim), points_(std::move(points)) {
        index_.reserve(points_.size() * 2);
        for (std::uint32_t i = 0; i < points_.size(); ++i)
            index_.emplace(pack_point(points_[i]), i);
        antipode_.resize(points_.size());
        half_.reserve(points_.size() / 2);
        for (std::uint32_t i = 0; i < points_.size(); ++i) {
            const auto it = index_.find(pack_point(negated(points_[i])));
            if (it == index_.end())
                throw std::logic_error("FrequencySet: set is not symmetric");
            antipode_[i] = it->second;
            if (points_[i] > negated(points_[i])) half_.push_back(i);
        }
    }

    std::int64_t eigenvalue_index() const { return n_; }
    int dim() const { return dim_; }
    std::size_t multiplicity() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }

    // Indices (into points()) of the half-set representatives, ascending.
    const std::vector<std::uint32_t>& half_indices() const { return half_; }
    std::uint32_t antipode_index(std::uint32_t i) const { return antipode_[i]; }

    std::optional<std::uint32_t> find(const Point& p) const {
        const auto it = index_.find(pack_point(p));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::int64_t n_;
    int dim_;
    std::vector<Point> points_;
    std::vector<std::uint32_t> half_;
    std::vector<std::uint32_t> antipode_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

namespace detail {
inline void check_enumeration_range(std::int64_t n, int dim) {
    if (n < 1) throw std::domain_error("enumerate_frequencies: n must be positive");
    if (dim != 2 && dim != 3)
        throw std::domain_error("enumerate_frequencies: dim must be 2 or 3");
    // Components must stay below 2^20 so packed keys (and pair sums in the
    // correlation join) cannot collide.
    if (n > (std::int64_t{1} << 38))
        throw std::range_error("enumerate_frequencies: n exceeds coordinate range");
}
} // namespace detail

// All integer vectors of squared norm n, in lexicographic order. Nested loop
// over the leading dim-1 coordinates, integer square-root test for the last.
inline std::vector<Point> enumerate_points(std::int64_t n, int dim) {
    detail::check_enumeration_range(n, dim);
    std::vector<Point> out;
    const std::int64_t s = isqrt(n);
    if (dim == 2) {
        for (std::int64_t x = -s; x <= s; ++x) {
            const std::int64_t r = n - x * x;
            const std::int64_t y = isqrt(r);
            if (y * y != r) continue;
            if (y == 0) {
                out.push_back({x, 0, 0});
            } else {
                out.push_back({x, -y, 0});
                out.push_back({x, y, 0});
            }
        }
    } else {
        for (std::int64_t x = -s; x <= s; ++x) {
            const std::int64_t r1 = n - x * x;
            const std::int64_t sy = isqrt(r1);
            for (std::int64_t y = -sy; y <= sy; ++y) {
                const std::int64_t r2 = r1 - y * y;
                const std::int64_t z = isqrt(r2);
                if (z * z != r2) continue;
                if (z == 0) {
                    out.push_back({x, y, 0});
                } else {
                    out.push_back({x, y, -z});
                    out.push_back({x, y, z});
                }
            }
        }
    }
    return out; // ascending loops emit lexicographic order already
}

inline FrequencySet enumerate_frequencies(std::int64_t n, int dim) {
    return FrequencySet(n, dim, enumerate_points(n, dim));
}

// Multiplicity only, without materializing the set.
inline std::uint64_t count_representations(std::int64_t n, int dim) {
    detail::check_enumeration_range(n, dim);
    std::uint64_t count = 0;
    const std::int64_t s = isqrt(n);
    if (dim == 2) {
        for (std::int64_t x = -s; x <= s; ++x) {
            const std::int64_t r = n - x * x;
            const std::int64_t y = isqrt(r);
            if (y * y == r) count += (y == 0) ? 1 : 2;
        }
    } else {
        for (std::int64_t x = -s; x <= s; ++x) {
            const std::int64_t r1 = n - x * x;
            const std::int64_t sy = isqrt(r1);
            for (std::int64_t y = -sy; y <= sy; ++y) {
                const std::int64_t r2 = r1 - y * y;
                const std::int64_t z = isqrt(r2);
                if (z * z == r2) count += (z == 0) ? 1 : 2;
            }
        }
    }
    return count;
}

// Number of representations of n as a sum of two squares, from the prime
// factorization: with n = 2^a * prod p_i^{b_i} * prod q_j^{c_j}, p = 1 (4),
// q = 3 (4), the count is 4 * prod (b_i + 1) if every c_j is even, else 0.
inline std::uint64_t multiplicity_by_factorization(std::int64_t n) {
    if (n < 1) throw std::domain_error("multiplicity_by_factorization: n must be positive");
    std::uint64_t product = 4;
    while (n % 2 == 0) n /= 2;
    for (std::int64_t p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p % 4 == 3) {
            if (e & 1) return 0;
        } else {
            product *= static_cast<std::uint64_t>(e + 1);
        }
    }
    if (n > 1) { // leftover prime factor
        if (n % 4 == 3) return 0;
        product *= 2;
    }
    return product;
}

struct MomentReport {
    // Exact integer sums of lambda_j * lambda_k over the set.
    std::array<std::array<std::int64_t, 3>, 3> quadratic{};
    // Sum of lambda_k^4 / (n^2 N) per axis.
    std::array<double, 3> quartic_axis{};
    // Sum of lambda_j^2 lambda_k^2 / (n^2 N); symmetric, diagonal equals quartic_axis.
    std::array<std::array<double, 3>, 3> quartic_cross{};
    // dim 2 only: (1/N) sum of (lambda_1 + i lambda_2)^4 / n^2.
    std::complex<double> fourier4{0.0, 0.0};
};

inline MomentReport moment_report(const FrequencySet& set) {
    if (set.multiplicity() == 0)
        throw std::domain_error("moment_report: empty frequency set");
    const int d = set.dim();
    using I128 = __int128;
    I128 quad[3][3] = {};
    I128 quart[3][3] = {};
    I128 f4_re = 0, f4_im = 0;
    for (const Point& p : set.points()) {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                quad[j][k] += static_cast<I128>(p[j]) * p[k];
                quart[j][k] += static_cast<I128>(p[j]) * p[j] * p[k] * p[k];
            }
        if (d == 2) {
            // (a + bi)^4 expanded exactly in integers.
            const I128 a = p[0], b = p[1];
            const I128 c2 = a * a - b * b, s2 = 2 * a * b;
            f4_re += c2 * c2 - s2 * s2;
            f4_im += 2 * c2 * s2;
        }
    }
    MomentReport rep;
    const double scale =
        static_cast<double>(set.eigenvalue_index()) * static_cast<double>(set.eigenvalue_index()) *
        static_cast<double>(set.multiplicity());
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            rep.quadratic[j][k] = static_cast<std::int64_t>(quad[j][k]);
            rep.quartic_cross[j][k] = static_cast<double>(quart[j][k]) / scale;
        }
        rep.quartic_axis[j] = rep.quartic_cross[j][j];
    }
    if (d == 2)
        rep.fourier4 = {static_cast<double>(f4_re) / scale, static_cast<double>(f4_im) / scale};
    return rep;
}

struct TrendRow {
    std::int64_t n = 0;
    std::uint64_t multiplicity = 0;
    double axis_deviation = 0.0;  // max_k |quartic_axis_k - 1/5|
    double cross_deviation = 0.0; // max_{j<k} |quartic_cross_jk - 1/15|
};

// Deviations of the quartic moments from their equidistribution limits on
// the 2-sphere. Reports only; no convergence rate is asserted.
inline std::vector<TrendRow> equidistribution_trend(const std::vector<std::int64_t>& ns) {
    std::vector<TrendRow> rows;
    rows.reserve(ns.size());
    for (const std::int64_t n : ns) {
        if (!is_admissible(n))
            throw std::domain_error("equidistribution_trend: inadmissible n");
        const FrequencySet set = enumerate_frequencies(n, 3);
        if (set.multiplicity() == 0)
            throw std::domain_error("equidistribution_trend: empty frequency set");
        const MomentReport rep = moment_report(set);
        TrendRow row;
        row.n = n;
        row.multiplicity = set.multiplicity();
        for (int k = 0; k < 3; ++k)
            row.axis_deviation = std::max(row.axis_deviation, std::abs(rep.quartic_axis[k] - 0.2));
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k < 3; ++k)
                row.cross_deviation =
                    std::max(row.cross_deviation, std::abs(rep.quartic_cross[j][k] - 1.0 / 15.0));
        rows.push_back(row);
    }
    return rows;
}

} // namespace arw
