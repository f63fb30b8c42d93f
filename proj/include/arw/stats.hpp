#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "arw/errors.hpp"

namespace arw {

// Fixed-tree (pairwise) summation. The reduction tree depends only on the
// length of the range, never on a thread schedule, so accumulated values are
// bit-stable run to run; it is also far more accurate than a left fold.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double mean(std::span<const double> v) {
    return v.empty() ? 0.0 : pairwise_sum(v) / static_cast<double>(v.size());
}

struct SampleSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double stddev = 0.0;
    double skewness = 0.0; // standardized third central moment
};

inline SampleSummary summarize(std::span<const double> v) {
    SampleSummary s;
    s.count = v.size();
    if (v.empty()) return s;
    s.mean = mean(v);
    std::vector<double> p2(v.size()), p3(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double c = v[i] - s.mean;
        p2[i] = c * c;
        p3[i] = c * c * c;
    }
    const double m2 = pairwise_sum(p2) / static_cast<double>(v.size());
    const double m3 = pairwise_sum(p3) / static_cast<double>(v.size());
    s.variance = v.size() > 1 ? pairwise_sum(p2) / static_cast<double>(v.size() - 1) : 0.0;
    s.stddev = std::sqrt(s.variance);
    s.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    return s;
}

inline double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw statistics_error("pearson_correlation: need two samples of equal size >= 2");
    const double ma = mean(a), mb = mean(b);
    std::vector<double> xy(a.size()), xx(a.size()), yy(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        xy[i] = da * db;
        xx[i] = da * da;
        yy[i] = db * db;
    }
    const double den = std::sqrt(pairwise_sum(xx) * pairwise_sum(yy));
    return den > 0.0 ? pairwise_sum(xy) / den : 0.0;
}

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

// CDF of a chi-square with k degrees of freedom.
inline double chi_square_cdf(double k, double x) {
    if (x <= 0.0) return 0.0;
    return boost::math::gamma_p(0.5 * k, 0.5 * x);
}

// Kolmogorov-Smirnov sup-distance between the empirical CDF of `samples`
// and the analytic CDF `law`.
inline double ks_distance(std::span<const double> samples,
                          const std::function<double(double)>& law) {
    if (samples.size() < 100)
        throw statistics_error("ks_distance: need at least 100 samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = law(sorted[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

// FNV-1a, used to stamp experiment records with a content hash.
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace arw
