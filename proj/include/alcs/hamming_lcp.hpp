#pragma once
/**
 * @file hamming_lcp.hpp
 * @brief Quadratic-time k-mismatch longest-common-prefix tables between
 *        string pairs, and the derived per-suffix maximum arrays.
 *
 * Table semantics are 1-based throughout: entry (p, q) is the length of the
 * longest common prefix of the suffixes s_i[p..] and s_j[q..] containing at
 * most k mismatching positions.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "alcs/strings_core.hpp"

namespace alcs {

/// Dense |s_i| x |s_j| table of k-mismatch LCP lengths.
struct LcpTable {
    int rows = 0;          ///< |s_i|
    int cols = 0;          ///< |s_j|
    long long k = 0;       ///< mismatch budget
    int source_i = 0;      ///< 1-based index of the row string, 0 if unset
    int source_j = 0;      ///< 1-based index of the column string, 0 if unset
    std::vector<int32_t> cells; // row-major

    int32_t at(int p, int q) const {
        if (p < 1 || p > rows || q < 1 || q > cols)
            fail(errc::IndexOutOfRange, "LCP table access (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
        return cells[static_cast<size_t>(p - 1) * cols + (q - 1)];
    }

    /// Debug dump: integers, tab-separated, one row per p.
    std::string to_tsv() const;
};

/// Builds the full table in O(|s_i| * |s_j|) time, independent of k, by
/// walking each diagonal once over its ordered mismatch positions.
/// Throws NegativeBudget (k < 0) or EmptyString.
LcpTable lcp_hk_table(const std::string& s_i, const std::string& s_j, long long k);

/// The m tables pairing s_i with every member of S (including j = i).
/// `i` is 1-based; throws IndexOutOfRange.
std::vector<LcpTable> lcp_tables_for(int i, const StringSet& S, long long k);

/// Per-suffix maxima of an LCP-style table.
struct MaxLcpArray {
    std::vector<int32_t> v; ///< v[p-1] = max over q of entry (p, q)
    char metric = 'H';      ///< 'H' (mismatch-counting) or 'E' (edit-like)

    int32_t at(int p) const {
        if (p < 1 || static_cast<size_t>(p) > v.size())
            fail(errc::IndexOutOfRange, "MaxLCP access " + std::to_string(p));
        return v[static_cast<size_t>(p - 1)];
    }
    int size() const { return static_cast<int>(v.size()); }
};

/// Row-wise maxima of a mismatch-budget LCP table.
MaxLcpArray max_lcp_h(const LcpTable& table);

namespace detail {
/// Shared diagonal-walk core: `mismatch(p, q)` decides (1-based) whether a
/// position pair counts as a mismatch. Used by the byte-comparison table
/// here and by the letter-set variant.
template <typename MismatchFn>
LcpTable lcp_table_by_diagonals(int rows, int cols, long long k,
                                MismatchFn&& mismatch) {
    LcpTable t;
    t.rows = rows;
    t.cols = cols;
    t.k = k;
    t.cells.assign(static_cast<size_t>(rows) * cols, 0);
    std::vector<int32_t> mm; // mismatch offsets along the current diagonal
    // Diagonal starts: (p0, 1) for every p0, and (1, q0) for q0 >= 2.
    for (int start = -(rows - 1); start <= cols - 1; ++start) {
        const int p0 = start < 0 ? 1 - start : 1;
        const int q0 = start < 0 ? 1 : 1 + start;
        const int len = std::min(rows - p0, cols - q0) + 1;
        mm.clear();
        for (int off = 0; off < len; ++off)
            if (mismatch(p0 + off, q0 + off)) mm.push_back(off);
        // With budget kk, the prefix starting at offset t ends right before
        // the (kk+1)-th mismatch at or after t (or at the diagonal's end).
        const size_t kk =
            k >= len ? static_cast<size_t>(len) : static_cast<size_t>(k);
        size_t next = 0; // first mismatch offset >= t
        for (int off = 0; off < len; ++off) {
            while (next < mm.size() && mm[next] < off) ++next;
            const size_t cut_idx = next + kk;
            const int cut = cut_idx < mm.size() ? mm[cut_idx] : len;
            t.cells[static_cast<size_t>(p0 + off - 1) * cols + (q0 + off - 1)] =
                cut - off;
        }
    }
    return t;
}
} // namespace detail

} // namespace alcs
