#include "alcs/indeterminate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "alcs/lengthstat.hpp"

namespace alcs {

std::string BitMatrix::to_tsv() const {
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            if (c > 1) out += '\t';
            out += at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

BitMatrix encode_boolean_matrix(const IndeterminateString& s,
                                const Alphabet& alphabet) {
    if (s.positions.empty()) fail(errc::EmptyString, "no positions to encode");
    BitMatrix M;
    M.rows = static_cast<int>(s.positions.size());
    M.cols = alphabet.size();
    M.cells.assign(static_cast<size_t>(M.rows) * M.cols, 0);
    for (int q = 1; q <= M.rows; ++q) {
        const LetterSet& set = s.positions[static_cast<size_t>(q - 1)];
        if (set.empty()) fail(errc::EmptyLetterSet, "empty set at position " +
                                                        std::to_string(q));
        for (char ch : set) {
            const int c = alphabet.index_of(static_cast<unsigned char>(ch));
            if (c < 0)
                fail(errc::LetterOutOfAlphabet,
                     std::string("letter '") + ch + "' not in the alphabet");
            M.set(q, c + 1, 1);
        }
    }
    return M;
}

namespace {

// Letter-membership bitmask rows, (sigma+63)/64 words per position.
std::vector<uint64_t> pack_rows(const BitMatrix& M, int words) {
    std::vector<uint64_t> rows(static_cast<size_t>(M.rows) * words, 0);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c)
            if (M.cells[static_cast<size_t>(r) * M.cols + c])
                rows[static_cast<size_t>(r) * words + c / 64] |=
                    uint64_t{1} << (c % 64);
    return rows;
}

BitMatrix compat_naive(const IndeterminateString& a,
                       const IndeterminateString& b) {
    BitMatrix I;
    I.rows = static_cast<int>(a.positions.size());
    I.cols = static_cast<int>(b.positions.size());
    I.cells.assign(static_cast<size_t>(I.rows) * I.cols, 0);
    for (int p = 1; p <= I.rows; ++p)
        for (int q = 1; q <= I.cols; ++q)
            if (letters_match(a.positions[static_cast<size_t>(p - 1)],
                              b.positions[static_cast<size_t>(q - 1)]))
                I.set(p, q, 1);
    return I;
}

BitMatrix compat_bitmask(const IndeterminateString& a,
                         const IndeterminateString& b,
                         const Alphabet& alphabet) {
    if (alphabet.size() > 64)
        fail(errc::DimensionMismatch,
             "the single-word mask path handles at most 64 letters");
    const BitMatrix A = encode_boolean_matrix(a, alphabet);
    const BitMatrix B = encode_boolean_matrix(b, alphabet);
    const auto ra = pack_rows(A, 1);
    const auto rb = pack_rows(B, 1);
    BitMatrix I;
    I.rows = A.rows;
    I.cols = B.rows;
    I.cells.assign(static_cast<size_t>(I.rows) * I.cols, 0);
    for (int p = 0; p < I.rows; ++p)
        for (int q = 0; q < I.cols; ++q)
            I.cells[static_cast<size_t>(p) * I.cols + q] =
                (ra[static_cast<size_t>(p)] & rb[static_cast<size_t>(q)]) ? 1 : 0;
    return I;
}

// Tiled inner-product evaluation: accumulate integer overlap counts block
// by block, binarize only once the full sum per cell is in.
BitMatrix compat_blocked(const IndeterminateString& a,
                         const IndeterminateString& b,
                         const Alphabet& alphabet) {
    const BitMatrix A = encode_boolean_matrix(a, alphabet);
    const BitMatrix B = encode_boolean_matrix(b, alphabet);
    const int sigma = alphabet.size();
    const int tile = std::max(1, sigma);
    const int words = (sigma + 63) / 64;
    const auto ra = pack_rows(A, words);
    const auto rb = pack_rows(B, words);
    // Pad both position counts up to a multiple of the tile size; the
    // padding rows stay zero and drop out at the binarize step.
    const int na_pad = (A.rows + tile - 1) / tile * tile;
    const int nb_pad = (B.rows + tile - 1) / tile * tile;
    std::vector<int32_t> acc(static_cast<size_t>(na_pad) * nb_pad, 0);
    for (int pb = 0; pb < na_pad; pb += tile)
        for (int qb = 0; qb < nb_pad; qb += tile) {
            const int pe = std::min(pb + tile, A.rows);
            const int qe = std::min(qb + tile, B.rows);
            for (int p = pb; p < pe; ++p) {
                const uint64_t* rowa = &ra[static_cast<size_t>(p) * words];
                for (int q = qb; q < qe; ++q) {
                    const uint64_t* rowb = &rb[static_cast<size_t>(q) * words];
                    int32_t sum = 0;
                    for (int w = 0; w < words; ++w)
                        sum += static_cast<int32_t>(
                            std::popcount(rowa[w] & rowb[w]));
                    acc[static_cast<size_t>(p) * nb_pad + q] += sum;
                }
            }
        }
    BitMatrix I;
    I.rows = A.rows;
    I.cols = B.rows;
    I.cells.assign(static_cast<size_t>(I.rows) * I.cols, 0);
    for (int p = 0; p < I.rows; ++p)
        for (int q = 0; q < I.cols; ++q)
            I.cells[static_cast<size_t>(p) * I.cols + q] =
                acc[static_cast<size_t>(p) * nb_pad + q] > 0 ? 1 : 0;
    return I;
}

} // namespace

BitMatrix compatibility_matrix(const IndeterminateString& a,
                               const IndeterminateString& b,
                               const Alphabet& alphabet, CompatPath path) {
    if (a.positions.empty() || b.positions.empty())
        fail(errc::EmptyString, "compatibility of an empty string");
    switch (path) {
        case CompatPath::Naive:   return compat_naive(a, b);
        case CompatPath::Bitmask: return compat_bitmask(a, b, alphabet);
        case CompatPath::Blocked: return compat_blocked(a, b, alphabet);
        case CompatPath::Auto:
            return alphabet.size() <= 64 ? compat_bitmask(a, b, alphabet)
                                         : compat_blocked(a, b, alphabet);
    }
    fail(errc::ParseError, "unknown compatibility path");
}

LcpTable lcp_hk_indet(const IndeterminateString& a, const IndeterminateString& b,
                      const Alphabet& alphabet, long long k) {
    if (k < 0) fail(errc::NegativeBudget, "mismatch budget must be >= 0");
    const BitMatrix I = compatibility_matrix(a, b, alphabet);
    return detail::lcp_table_by_diagonals(
        I.rows, I.cols, k, [&](int p, int q) {
            return I.cells[static_cast<size_t>(p - 1) * I.cols + (q - 1)] == 0;
        });
}

namespace {

long long window_set_mismatches(const IndeterminateString& a, int pa,
                                const IndeterminateString& b, int pb, int len) {
    long long d = 0;
    for (int off = 0; off < len; ++off)
        d += !letters_match(a.positions[static_cast<size_t>(pa - 1 + off)],
                            b.positions[static_cast<size_t>(pb - 1 + off)]);
    return d;
}

} // namespace

std::optional<Solution> solve_rkt_lcs_indet(
    const std::vector<IndeterminateString>& strings, const Alphabet& alphabet,
    long long k, int t, Problem tag) {
    const int m = static_cast<int>(strings.size());
    if (m < 2) fail(errc::TooFewStrings, "need at least two strings");
    if (k < 0) fail(errc::NegativeBudget, "mismatch budget must be >= 0");
    if (t < 1 || t > m)
        fail(errc::ThresholdOutOfRange,
             "threshold t=" + std::to_string(t) + " outside 1.." +
                 std::to_string(m));

    int best_len = 0, best_i = 0, best_p = 0, best_support = 0;
    std::vector<LcpTable> tables;
    for (int i = 1; i <= m; ++i) {
        tables.clear();
        for (int j = 1; j <= m; ++j)
            tables.push_back(lcp_hk_indet(strings[static_cast<size_t>(i - 1)],
                                          strings[static_cast<size_t>(j - 1)],
                                          alphabet, k));
        const int len_i =
            static_cast<int>(strings[static_cast<size_t>(i - 1)].positions.size());
        for (int p = 1; p <= len_i; ++p) {
            if (len_i - p + 1 <= best_len) break;
            const LengthStatTable T = length_stat_hamming(tables, p, i);
            for (int l = T.rows; l >= 1; --l) {
                if (T.frequency(l) >= t) {
                    if (l > best_len) {
                        best_len = l;
                        best_i = i;
                        best_p = p;
                        best_support = T.frequency(l);
                    }
                    break;
                }
            }
        }
    }
    if (best_len == 0) return std::nullopt;

    Solution sol;
    sol.problem = tag;
    sol.length = best_len;
    sol.source_index = best_i;
    sol.source_offset = best_p;
    sol.k = k;
    sol.t = t;
    sol.metric = MetricKind::Hamming;
    sol.answers.push_back(render_indeterminate_slice(
        strings[static_cast<size_t>(best_i - 1)], best_p, best_len));
    const IndeterminateString& anchor = strings[static_cast<size_t>(best_i - 1)];
    for (int j = 1; j <= m; ++j) {
        const IndeterminateString& sj = strings[static_cast<size_t>(j - 1)];
        const LcpTable tab = lcp_hk_indet(anchor, sj, alphabet, k);
        for (int q = 1; q <= tab.cols; ++q) {
            if (tab.at(best_p, q) >= best_len) {
                const long long d =
                    window_set_mismatches(anchor, best_p, sj, q, best_len);
                if (d > k)
                    throw std::logic_error(
                        "witness verification failed: set-mismatch count over "
                        "budget");
                sol.witnesses.push_back(
                    Witness{j, q, q + best_len - 1, d, false});
                break;
            }
        }
    }
    sol.support = static_cast<int>(sol.witnesses.size());
    if (sol.support != best_support || sol.support < t)
        throw std::logic_error(
            "witness verification failed: support count mismatch");
    return sol;
}

} // namespace alcs
