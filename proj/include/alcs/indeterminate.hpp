#pragma once
/**
 * @file indeterminate.hpp
 * @brief Letter-set strings: boolean encodings, pairwise compatibility
 *        matrices, and the mismatch-budget solver lifted to set matching.
 *
 * Two positions match when their letter-sets intersect; the compatibility
 * matrix I records that relation for every position pair, and the LCP and
 * solver machinery then runs unchanged with "I is 0" as the mismatch test.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcs/hamming_lcp.hpp"
#include "alcs/solver.hpp"
#include "alcs/strings_core.hpp"

namespace alcs {

/// Dense 0/1 matrix with 1-based, bounds-checked access.
struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> cells; ///< row-major

    uint8_t at(int r, int c) const {
        if (r < 1 || r > rows || c < 1 || c > cols)
            fail(errc::IndexOutOfRange, "matrix access (" + std::to_string(r) +
                                            "," + std::to_string(c) + ")");
        return cells[static_cast<size_t>(r - 1) * cols + (c - 1)];
    }
    void set(int r, int c, uint8_t v) {
        cells[static_cast<size_t>(r - 1) * cols + (c - 1)] = v;
    }
    /// Debug dump: 0/1 digits, tab-separated, one row per line.
    std::string to_tsv() const;
};

/// The |s| x |alphabet| incidence matrix: row q has a 1 in column c exactly
/// when position q admits the alphabet's c-th letter.
BitMatrix encode_boolean_matrix(const IndeterminateString& s,
                                const Alphabet& alphabet);

/// How to evaluate the compatibility matrix. All paths produce identical
/// results; Auto picks Bitmask for alphabets of at most 64 letters and the
/// cache-blocked product otherwise.
enum class CompatPath { Auto, Blocked, Naive, Bitmask };

/// I[p, q] = 1 iff position p of `a` and position q of `b` share a letter.
BitMatrix compatibility_matrix(const IndeterminateString& a,
                               const IndeterminateString& b,
                               const Alphabet& alphabet,
                               CompatPath path = CompatPath::Auto);

/// The k-mismatch LCP table over set matching: identical semantics to
/// lcp_hk_table with "letter-sets disjoint" as the mismatch relation.
LcpTable lcp_hk_indet(const IndeterminateString& a, const IndeterminateString& b,
                      const Alphabet& alphabet, long long k);

/// The greedy mismatch-budget solver lifted to indeterminate inputs. The
/// returned answers render letter-sets in bracket form (e.g. "[ac]g[gt]").
/// `tag` labels the result (RktLCS, or ELCS when k = 0 is meant as exact).
std::optional<Solution> solve_rkt_lcs_indet(
    const std::vector<IndeterminateString>& strings, const Alphabet& alphabet,
    long long k, int t, Problem tag = Problem::RktLCS);

} // namespace alcs
