#pragma once
/**
 * @file lengthstat.hpp
 * @brief Per-suffix occurrence tables: for the suffix of s_i starting at p,
 *        row l records which strings contain a k-approximate occurrence of
 *        the length-l prefix, plus a frequency column.
 *
 * Rows are packed bitsets over the string indices so the downward OR
 * propagation is word-parallel. Column j of row l is 1 exactly when
 * s_i[p..p+l-1] occurs within budget k somewhere in s_j; the source string
 * itself always has a distance-0 occurrence, so column i is all ones.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "alcs/edit_prefix.hpp"
#include "alcs/hamming_lcp.hpp"

namespace alcs {

struct LengthStatTable {
    int p = 0;    ///< anchor suffix start (1-based)
    int i = 0;    ///< anchor string index (1-based)
    int rows = 0; ///< |s_i| - p + 1
    int m = 0;
    long long k = 0;
    char metric = 'H';
    int words_per_row = 0;
    std::vector<uint64_t> bits;  ///< row-major, bit (j-1) of row l
    std::vector<int32_t> freq;   ///< row sums

    bool get(int l, int j) const {
        if (l < 1 || l > rows || j < 1 || j > m)
            fail(errc::IndexOutOfRange, "lengthStat access");
        const size_t word =
            static_cast<size_t>(l - 1) * words_per_row + (j - 1) / 64;
        return (bits[word] >> ((j - 1) % 64)) & 1u;
    }
    int32_t frequency(int l) const {
        if (l < 1 || l > rows) fail(errc::IndexOutOfRange, "lengthStat frequency");
        return freq[static_cast<size_t>(l - 1)];
    }

    /// Debug dump: 0/1 flags then the frequency column, tab-separated.
    std::string to_tsv() const;
};

/// Mismatch-budget variant: `tables` are the m LCP tables pairing s_i with
/// every string (as produced by lcp_tables_for). Seeds entry[LCP(p,q), j]
/// for every j and q, then propagates each row into the one above it and
/// fills the frequency column. Throws IndexOutOfRange.
LengthStatTable length_stat_hamming(const std::vector<LcpTable>& tables, int p,
                                    int i);

/// Edit variant: entry[l, j] = 1 iff some target start q makes
/// P_j[p, p+l-1, q] != -1.
LengthStatTable length_stat_edit(const std::vector<PrefixTable>& tables, int p,
                                 int i);

/// Same output as length_stat_edit, computed from the lean reach tables.
LengthStatTable length_stat_edit_reach(const std::vector<ReachTable>& tables,
                                       int p, int i);

} // namespace alcs
