#include "alcs/lengthstat.hpp"

#include <algorithm>
#include <bit>

namespace alcs {

namespace {

LengthStatTable make_frame(int p, int i, int rows, int m, long long k,
                           char metric) {
    LengthStatTable t;
    t.p = p;
    t.i = i;
    t.rows = rows;
    t.m = m;
    t.k = k;
    t.metric = metric;
    t.words_per_row = (m + 63) / 64;
    t.bits.assign(static_cast<size_t>(rows) * t.words_per_row, 0);
    t.freq.assign(static_cast<size_t>(rows), 0);
    return t;
}

void seed(LengthStatTable& t, int l, int j) {
    const size_t word =
        static_cast<size_t>(l - 1) * t.words_per_row + (j - 1) / 64;
    t.bits[word] |= uint64_t{1} << ((j - 1) % 64);
}

// Downward OR propagation plus the frequency column: a length-l occurrence
// witnesses every shorter prefix length, so row l feeds row l-1.
void propagate_and_count(LengthStatTable& t) {
    const int w = t.words_per_row;
    for (int l = t.rows - 1; l >= 1; --l)
        for (int c = 0; c < w; ++c)
            t.bits[static_cast<size_t>(l - 1) * w + c] |=
                t.bits[static_cast<size_t>(l) * w + c];
    for (int l = 1; l <= t.rows; ++l) {
        int32_t sum = 0;
        for (int c = 0; c < w; ++c)
            sum += static_cast<int32_t>(
                std::popcount(t.bits[static_cast<size_t>(l - 1) * w + c]));
        t.freq[static_cast<size_t>(l - 1)] = sum;
    }
}

void check_anchor(int p, int i, int m, int len_i) {
    if (i < 1 || i > m)
        fail(errc::IndexOutOfRange, "anchor string index " + std::to_string(i));
    if (p < 1 || p > len_i)
        fail(errc::IndexOutOfRange, "anchor offset " + std::to_string(p));
}

} // namespace

std::string LengthStatTable::to_tsv() const {
    std::string out;
    for (int l = 1; l <= rows; ++l) {
        for (int j = 1; j <= m; ++j) {
            out += get(l, j) ? '1' : '0';
            out += '\t';
        }
        out += std::to_string(frequency(l));
        out += '\n';
    }
    return out;
}

LengthStatTable length_stat_hamming(const std::vector<LcpTable>& tables, int p,
                                    int i) {
    const int m = static_cast<int>(tables.size());
    if (m == 0) fail(errc::TooFewStrings, "no LCP tables supplied");
    check_anchor(p, i, m, tables[static_cast<size_t>(i - 1)].rows);
    const int rows = tables[static_cast<size_t>(i - 1)].rows - p + 1;
    LengthStatTable t = make_frame(p, i, rows, m, tables[0].k, 'H');
    for (int j = 1; j <= m; ++j) {
        const LcpTable& tab = tables[static_cast<size_t>(j - 1)];
        if (tab.rows != tables[static_cast<size_t>(i - 1)].rows)
            fail(errc::LengthMismatch, "tables do not share the anchor string");
        const int32_t* row = &tab.cells[static_cast<size_t>(p - 1) * tab.cols];
        for (int q = 0; q < tab.cols; ++q) {
            const int32_t v = row[q];
            if (v >= 1) seed(t, v, j); // a zero LCP seeds nothing
        }
    }
    propagate_and_count(t);
    return t;
}

LengthStatTable length_stat_edit(const std::vector<PrefixTable>& tables, int p,
                                 int i) {
    const int m = static_cast<int>(tables.size());
    if (m == 0) fail(errc::TooFewStrings, "no prefix tables supplied");
    check_anchor(p, i, m, tables[static_cast<size_t>(i - 1)].len1);
    const int rows = tables[static_cast<size_t>(i - 1)].len1 - p + 1;
    LengthStatTable t = make_frame(p, i, rows, m, tables[0].k, 'E');
    for (int j = 1; j <= m; ++j) {
        const PrefixTable& P = tables[static_cast<size_t>(j - 1)];
        if (P.len1 != tables[static_cast<size_t>(i - 1)].len1)
            fail(errc::LengthMismatch, "tables do not share the anchor string");
        // Feasible lengths per start pair form a prefix, so the deepest
        // non-sentinel entry over all q seeds the whole column.
        int best = 0;
        for (int q = 1; q <= P.len2 + 1; ++q) {
            const auto& slice =
                P.slices[static_cast<size_t>(p - 1) * (P.len2 + 1) + (q - 1)];
            for (int idx = static_cast<int>(slice.size()) - 1; idx >= best; --idx)
                if (slice[static_cast<size_t>(idx)] != -1) {
                    best = idx + 1;
                    break;
                }
        }
        if (best >= 1) seed(t, best, j);
    }
    propagate_and_count(t);
    return t;
}

LengthStatTable length_stat_edit_reach(const std::vector<ReachTable>& tables,
                                       int p, int i) {
    const int m = static_cast<int>(tables.size());
    if (m == 0) fail(errc::TooFewStrings, "no reach tables supplied");
    check_anchor(p, i, m, tables[static_cast<size_t>(i - 1)].len1);
    const int rows = tables[static_cast<size_t>(i - 1)].len1 - p + 1;
    LengthStatTable t = make_frame(p, i, rows, m, tables[0].k, 'E');
    for (int j = 1; j <= m; ++j) {
        const ReachTable& R = tables[static_cast<size_t>(j - 1)];
        if (R.len1 != tables[static_cast<size_t>(i - 1)].len1)
            fail(errc::LengthMismatch, "tables do not share the anchor string");
        int best = 0;
        for (int q = 1; q <= R.len2 + 1; ++q) best = std::max(best, R.at(p, q));
        if (best >= 1) seed(t, best, j);
    }
    propagate_and_count(t);
    return t;
}

} // namespace alcs
