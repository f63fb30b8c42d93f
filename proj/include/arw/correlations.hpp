#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "arw/lattice.hpp"

namespace arw {

// An ordered 4-tuple of frequencies summing to zero, stored as indices into
// FrequencySet::points().
using Tuple4 = std::array<std::uint32_t, 4>;

inline constexpr std::size_t kDefaultCorrelationCap = 5000;

struct CorrelationCensus {
    std::int64_t n = 0;
    int dim = 0;
    std::uint64_t multiplicity = 0;
    std::uint64_t total_c4 = 0; // ordered 4-tuples with zero sum
    // The three families of pairwise-cancelling tuples; each has N^2 members.
    std::array<std::uint64_t, 3> pairing_counts{};
    // Their pairwise intersections (tuples cancelling two ways); each has N members.
    std::array<std::uint64_t, 3> diagonal_counts{};
    std::uint64_t nondegenerate_x4 = 0;
    // log |X_n(4)| / log N_n, defined only when |X_n(4)| > 0 and N_n > 1.
    std::optional<double> exponent_estimate;
};

namespace detail {

inline void check_census_cap(const FrequencySet& set, std::size_t cap, const char* what) {
    if (set.multiplicity() > cap)
        throw std::length_error(std::string(what) +
                                ": multiplicity exceeds the configured cap");
    if (set.multiplicity() == 0)
        throw std::domain_error(std::string(what) + ": empty frequency set");
}

// Counts of ordered pairs grouped by their vector sum.
inline std::unordered_map<std::uint64_t, std::uint32_t>
pair_sum_counts(const FrequencySet& set) {
    const auto& pts = set.points();
    std::unordered_map<std::uint64_t, std::uint32_t> counts;
    counts.reserve(pts.size() * pts.size() / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            ++counts[pack_point(add(pts[i], pts[j]))];
    return counts;
}

} // namespace detail

// Census of 4-correlations via a meet-in-the-middle join on pair sums.
//
// A zero-sum tuple is degenerate exactly when some entry cancels another;
// on the zero-sum set this reduces to three conditions (lambda2 = -lambda1,
// lambda3 = -lambda1, lambda4 = -lambda1), each of whose completion families
// the join can count without enumerating tuples.
inline CorrelationCensus census_4(const FrequencySet& set,
                                  std::size_t cap = kDefaultCorrelationCap) {
    detail::check_census_cap(set, cap, "census_4");
    const auto& pts = set.points();
    const std::uint64_t m = pts.size();
    const auto counts = detail::pair_sum_counts(set);

    CorrelationCensus census;
    census.n = set.eigenvalue_index();
    census.dim = set.dim();
    census.multiplicity = m;
    census.pairing_counts = {m * m, m * m, m * m};
    census.diagonal_counts = {m, m, m};

    std::uint64_t total = 0;
    std::uint64_t nondegenerate = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const Point s = add(pts[i], pts[j]);
            const auto it = counts.find(pack_point(negated(s)));
            const std::uint64_t completions = it == counts.end() ? 0 : it->second;
            total += completions;
            if (s == Point{0, 0, 0}) continue; // lambda2 = -lambda1: all degenerate
            // Exactly one completion has lambda3 = -lambda1 and one has
            // lambda4 = -lambda1; they coincide only when j == i.
            nondegenerate += completions - 2 + (i == j ? 1 : 0);
        }
    }
    census.total_c4 = total;
    census.nondegenerate_x4 = nondegenerate;
    if (nondegenerate > 0 && m > 1)
        census.exponent_estimate = std::log(static_cast<double>(nondegenerate)) /
                                   std::log(static_cast<double>(m));
    return census;
}

// Materializes X_n(4), the non-degenerate ordered 4-correlations. The list is
// closed under entry permutations and global negation. Deterministic order:
// pairs (i, j) ascending, completions in pair-insertion order.
inline std::vector<Tuple4> enumerate_x4(const FrequencySet& set,
                                        std::size_t cap = kDefaultCorrelationCap) {
    detail::check_census_cap(set, cap, "enumerate_x4");
    const auto& pts = set.points();
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>
        buckets;
    buckets.reserve(pts.size() * pts.size() / 2);
    for (std::uint32_t i = 0; i < pts.size(); ++i)
        for (std::uint32_t j = 0; j < pts.size(); ++j)
            buckets[pack_point(add(pts[i], pts[j]))].push_back({i, j});

    std::vector<Tuple4> tuples;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        const Point neg_first = negated(pts[i]);
        for (std::uint32_t j = 0; j < pts.size(); ++j) {
            const Point s = add(pts[i], pts[j]);
            if (s == Point{0, 0, 0}) continue;
            const auto it = buckets.find(pack_point(negated(s)));
            if (it == buckets.end()) continue;
            for (const auto& [k, l] : it->second) {
                if (pts[k] == neg_first || pts[l] == neg_first) continue;
                tuples.push_back({i, j, k, l});
            }
        }
    }
    return tuples;
}

struct X4ScalingRow {
    std::int64_t n = 0;
    std::uint64_t multiplicity = 0;
    std::uint64_t x4 = 0;
    std::optional<double> exponent_estimate;
};

// Growth report for |X_n(4)|; no bound is asserted.
inline std::vector<X4ScalingRow> x4_scaling(const std::vector<std::int64_t>& ns,
                                            std::size_t cap = kDefaultCorrelationCap) {
    std::vector<X4ScalingRow> rows;
    rows.reserve(ns.size());
    for (const std::int64_t n : ns) {
        if (!is_admissible(n)) throw std::domain_error("x4_scaling: inadmissible n");
        const FrequencySet set = enumerate_frequencies(n, 3);
        if (set.multiplicity() < 2)
            throw std::domain_error("x4_scaling: multiplicity must exceed 1");
        const CorrelationCensus census = census_4(set, cap);
        rows.push_back({n, census.multiplicity, census.nondegenerate_x4,
                        census.exponent_estimate});
    }
    return rows;
}

} // namespace arw
