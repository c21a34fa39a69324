#pragma once
/**
 * @file edit_prefix.hpp
 * @brief Longest-approximate-prefix tables under edit and weighted-edit
 *        budgets, plus the edit-side per-suffix maximum arrays.
 *
 * For pattern substring s_1[a..b] and target start a', the table holds the
 * maximal end b' >= a'-1 such that the edit cost of transforming s_1[a..b]
 * into s_2[a'..b'] is at most k, or -1 when no end qualifies. b' = a'-1
 * encodes the empty target substring, which is a legal occurrence.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "alcs/hamming_lcp.hpp" // MaxLcpArray
#include "alcs/strings_core.hpp"

namespace alcs {

/// Full three-index table P[a, b, a'], stored as one slice per start pair
/// (a, a'): slice[b - a] is the maximal b' (or -1). a' ranges to |s_2|+1;
/// the final value of a' admits only the empty target.
struct PrefixTable {
    int len1 = 0;
    int len2 = 0;
    long long k = 0;
    MetricKind metric_kind = MetricKind::Edit;
    std::vector<std::vector<int32_t>> slices; // (a-1)*(len2+1) + (a'-1)

    int32_t at(int a, int b, int aprime) const {
        if (a < 1 || b < a || b > len1 || aprime < 1 || aprime > len2 + 1)
            fail(errc::IndexOutOfRange, "prefix table access");
        const auto& s =
            slices[static_cast<size_t>(a - 1) * (len2 + 1) + (aprime - 1)];
        return s[static_cast<size_t>(b - a)];
    }
};

/// Lean companion to PrefixTable: for each start pair (a, a'), only the
/// maximal pattern length l such that P[a, a + l - 1, a'] != -1 (0 when even
/// a single letter cannot fit the budget). Whenever some length fits, every
/// shorter length fits too, so this determines the full feasibility set.
struct ReachTable {
    int len1 = 0;
    int len2 = 0;
    long long k = 0;
    std::vector<int32_t> maxlen; // (a-1)*(len2+1) + (a'-1)

    int32_t at(int a, int aprime) const {
        if (a < 1 || a > len1 || aprime < 1 || aprime > len2 + 1)
            fail(errc::IndexOutOfRange, "reach table access");
        return maxlen[static_cast<size_t>(a - 1) * (len2 + 1) + (aprime - 1)];
    }
};

/// Builds the full P table with a banded dynamic program per start pair;
/// band half-width is floor(k / c_min) where c_min is the smallest
/// insertion/deletion cost, so unit-cost edit uses half-width k.
/// Throws WrongMetric (Hamming metric) or NegativeBudget.
PrefixTable edit_prefix_table(const std::string& s_1, const std::string& s_2,
                              long long k, const DistanceMetric& metric);

/// Same scan, keeping only per-start maximal feasible lengths.
ReachTable edit_reach_table(const std::string& s_1, const std::string& s_2,
                            long long k, const DistanceMetric& metric);

/// One (a, a') slice on demand: slice[b - a] = maximal b' or -1.
std::vector<int32_t> edit_prefix_slice(const std::string& s_1,
                                       const std::string& s_2, int a, int aprime,
                                       long long k, const DistanceMetric& metric);

/// entry[a] = the largest l with some a' satisfying P[a, a+l-1, a'] != -1,
/// or 0 when no l >= 1 qualifies. Lengths are measured on the s_1 side.
MaxLcpArray max_lcp_e(const PrefixTable& P);

/// Row maxima of a reach table; equal to max_lcp_e of the full table.
MaxLcpArray max_lcp_e(const ReachTable& R);

} // namespace alcs
