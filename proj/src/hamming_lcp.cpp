#include "alcs/hamming_lcp.hpp"

#include <algorithm>

namespace alcs {

std::string LcpTable::to_tsv() const {
    std::string out;
    for (int p = 1; p <= rows; ++p) {
        for (int q = 1; q <= cols; ++q) {
            if (q > 1) out += '\t';
            out += std::to_string(at(p, q));
        }
        out += '\n';
    }
    return out;
}

LcpTable lcp_hk_table(const std::string& s_i, const std::string& s_j, long long k) {
    if (k < 0) fail(errc::NegativeBudget, "mismatch budget must be >= 0");
    if (s_i.empty() || s_j.empty())
        fail(errc::EmptyString, "LCP table needs non-empty strings");
    LcpTable t = detail::lcp_table_by_diagonals(
        static_cast<int>(s_i.size()), static_cast<int>(s_j.size()), k,
        [&](int p, int q) { return s_i[p - 1] != s_j[q - 1]; });
    return t;
}

std::vector<LcpTable> lcp_tables_for(int i, const StringSet& S, long long k) {
    if (i < 1 || i > S.m)
        fail(errc::IndexOutOfRange, "string index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(S.m));
    std::vector<LcpTable> tables;
    tables.reserve(static_cast<size_t>(S.m));
    for (int j = 1; j <= S.m; ++j) {
        LcpTable t = lcp_hk_table(S.strings[static_cast<size_t>(i - 1)],
                                  S.strings[static_cast<size_t>(j - 1)], k);
        t.source_i = i;
        t.source_j = j;
        tables.push_back(std::move(t));
    }
    return tables;
}

MaxLcpArray max_lcp_h(const LcpTable& table) {
    MaxLcpArray out;
    out.metric = 'H';
    out.v.assign(static_cast<size_t>(table.rows), 0);
    for (int p = 1; p <= table.rows; ++p) {
        int32_t best = 0;
        const int32_t* row = &table.cells[static_cast<size_t>(p - 1) * table.cols];
        for (int q = 0; q < table.cols; ++q) best = std::max(best, row[q]);
        out.v[static_cast<size_t>(p - 1)] = best;
    }
    return out;
}

} // namespace alcs
