#include "alcs/edit_prefix.hpp"

#include <algorithm>
#include <limits>

namespace alcs {

namespace {

constexpr long long kInfinite = std::numeric_limits<long long>::max() / 4;

void check_args(long long k, const DistanceMetric& metric) {
    if (!metric.is_edit_like())
        fail(errc::WrongMetric, "prefix tables need an edit or weighted-edit metric");
    if (k < 0) fail(errc::NegativeBudget, "edit budget must be >= 0");
}

// Banded scan for one start pair. x/y are the 0-based suffixes s_1[a..] and
// s_2[a'..]. Emits, for every pattern length l = 1..|x| in order, the maximal
// target length j with cost <= k (or -1), until every cell of a row exceeds
// the budget; remaining lengths are all -1. Returns the maximal feasible l.
//
// The band |j - i| <= W is sound because a path reaching column imbalance
// |j - i| pays at least |j - i| * c_min in insertions/deletions.
template <typename Emit>
int banded_scan(const char* x, int lenx, const char* y, int leny, long long k,
                const DistanceMetric& metric, Emit&& emit) {
    const long long cmin = std::max<long long>(1, metric.min_indel_cost());
    const long long wide = k / cmin;
    const int W = wide > std::max(lenx, leny)
                      ? std::max(lenx, leny)
                      : static_cast<int>(wide);

    // Row buffers span the widest possible band.
    std::vector<long long> prev(static_cast<size_t>(2 * W + 2), kInfinite);
    std::vector<long long> cur(prev.size(), kInfinite);
    // Row 0: pure insertions.
    int prev_lo = 0;
    int prev_hi = std::min(leny, W);
    prev[0] = 0;
    for (int j = 1; j <= prev_hi; ++j) {
        const long long c =
            prev[static_cast<size_t>(j - 1)] +
            metric.ins_cost(static_cast<unsigned char>(y[j - 1]));
        prev[static_cast<size_t>(j)] = c;
    }
    while (prev_hi > prev_lo && prev[static_cast<size_t>(prev_hi - prev_lo)] > k)
        --prev_hi; // trailing infeasible cells never help later rows' maxima
    int reached = 0;
    for (int i = 1; i <= lenx; ++i) {
        const int lo = std::max(0, i - W);
        const int hi = std::min(leny, i + W);
        if (lo > hi) break;
        const auto a = static_cast<unsigned char>(x[i - 1]);
        long long best_in_row = kInfinite;
        int best_j = -1;
        for (int j = lo; j <= hi; ++j) {
            long long v = kInfinite;
            // from (i-1, j-1): substitution / match
            if (j >= 1 && j - 1 >= prev_lo && j - 1 <= prev_hi) {
                const long long base = prev[static_cast<size_t>(j - 1 - prev_lo)];
                if (base < kInfinite)
                    v = base + metric.sub_cost(a, static_cast<unsigned char>(y[j - 1]));
            }
            // from (i-1, j): deletion of x[i-1]
            if (j >= prev_lo && j <= prev_hi) {
                const long long base = prev[static_cast<size_t>(j - prev_lo)];
                if (base < kInfinite) v = std::min(v, base + metric.del_cost(a));
            }
            // from (i, j-1): insertion of y[j-1]
            if (j - 1 >= lo) {
                const long long base = cur[static_cast<size_t>(j - 1 - lo)];
                if (base < kInfinite)
                    v = std::min(v, base + metric.ins_cost(
                                          static_cast<unsigned char>(y[j - 1])));
            }
            cur[static_cast<size_t>(j - lo)] = v;
            if (v < best_in_row) best_in_row = v;
            if (v <= k) best_j = j;
        }
        emit(i, best_j);
        if (best_j >= 0) reached = i;
        if (best_in_row > k) {
            // Row minima never decrease, so no longer pattern prefix fits.
            for (int rest = i + 1; rest <= lenx; ++rest) emit(rest, -1);
            return reached;
        }
        std::swap(prev, cur);
        prev_lo = lo;
        prev_hi = hi;
        std::fill(cur.begin(), cur.end(), kInfinite);
    }
    // Either the pattern was exhausted or the band ran off the target's end;
    // in the latter case the caller treats unemitted rows as infeasible,
    // which is sound because their column imbalance alone exceeds the budget.
    return reached;
}

// banded_scan stops emitting once it proves the rest infeasible or the band
// closes; this wrapper guarantees exactly lenx emissions.
template <typename Emit>
int banded_all_rows(const char* x, int lenx, const char* y, int leny, long long k,
                    const DistanceMetric& metric, Emit&& emit) {
    int emitted_upto = 0;
    const int reached = banded_scan(x, lenx, y, leny, k, metric,
                                    [&](int l, int best_j) {
                                        emit(l, best_j);
                                        emitted_upto = l;
                                    });
    for (int l = emitted_upto + 1; l <= lenx; ++l) emit(l, -1);
    return reached;
}

} // namespace

std::vector<int32_t> edit_prefix_slice(const std::string& s_1,
                                       const std::string& s_2, int a, int aprime,
                                       long long k, const DistanceMetric& metric) {
    check_args(k, metric);
    const int n1 = static_cast<int>(s_1.size());
    const int n2 = static_cast<int>(s_2.size());
    if (a < 1 || a > n1 || aprime < 1 || aprime > n2 + 1)
        fail(errc::IndexOutOfRange, "prefix slice start pair out of range");
    std::vector<int32_t> slice(static_cast<size_t>(n1 - a + 1), -1);
    banded_all_rows(s_1.data() + (a - 1), n1 - a + 1, s_2.data() + (aprime - 1),
                    n2 - aprime + 1, k, metric, [&](int l, int best_j) {
                        slice[static_cast<size_t>(l - 1)] =
                            best_j < 0 ? -1 : aprime - 1 + best_j;
                    });
    return slice;
}

PrefixTable edit_prefix_table(const std::string& s_1, const std::string& s_2,
                              long long k, const DistanceMetric& metric) {
    check_args(k, metric);
    if (s_1.empty() || s_2.empty())
        fail(errc::EmptyString, "prefix table needs non-empty strings");
    PrefixTable t;
    t.len1 = static_cast<int>(s_1.size());
    t.len2 = static_cast<int>(s_2.size());
    t.k = k;
    t.metric_kind = metric.kind();
    t.slices.resize(static_cast<size_t>(t.len1) * (t.len2 + 1));
    for (int a = 1; a <= t.len1; ++a)
        for (int aprime = 1; aprime <= t.len2 + 1; ++aprime)
            t.slices[static_cast<size_t>(a - 1) * (t.len2 + 1) + (aprime - 1)] =
                edit_prefix_slice(s_1, s_2, a, aprime, k, metric);
    return t;
}

ReachTable edit_reach_table(const std::string& s_1, const std::string& s_2,
                            long long k, const DistanceMetric& metric) {
    check_args(k, metric);
    if (s_1.empty() || s_2.empty())
        fail(errc::EmptyString, "reach table needs non-empty strings");
    ReachTable t;
    t.len1 = static_cast<int>(s_1.size());
    t.len2 = static_cast<int>(s_2.size());
    t.k = k;
    t.maxlen.assign(static_cast<size_t>(t.len1) * (t.len2 + 1), 0);
    for (int a = 1; a <= t.len1; ++a)
        for (int aprime = 1; aprime <= t.len2 + 1; ++aprime) {
            const int reached = banded_scan(
                s_1.data() + (a - 1), t.len1 - a + 1, s_2.data() + (aprime - 1),
                t.len2 - aprime + 1, k, metric, [](int, int) {});
            t.maxlen[static_cast<size_t>(a - 1) * (t.len2 + 1) + (aprime - 1)] =
                reached;
        }
    return t;
}

MaxLcpArray max_lcp_e(const PrefixTable& P) {
    MaxLcpArray out;
    out.metric = 'E';
    out.v.assign(static_cast<size_t>(P.len1), 0);
    for (int a = 1; a <= P.len1; ++a) {
        int32_t best = 0;
        for (int aprime = 1; aprime <= P.len2 + 1; ++aprime) {
            const auto& slice =
                P.slices[static_cast<size_t>(a - 1) * (P.len2 + 1) + (aprime - 1)];
            for (int idx = static_cast<int>(slice.size()) - 1; idx >= best; --idx) {
                if (slice[static_cast<size_t>(idx)] != -1) {
                    best = std::max(best, idx + 1);
                    break;
                }
            }
        }
        out.v[static_cast<size_t>(a - 1)] = best;
    }
    return out;
}

MaxLcpArray max_lcp_e(const ReachTable& R) {
    MaxLcpArray out;
    out.metric = 'E';
    out.v.assign(static_cast<size_t>(R.len1), 0);
    for (int a = 1; a <= R.len1; ++a) {
        int32_t best = 0;
        for (int aprime = 1; aprime <= R.len2 + 1; ++aprime)
            best = std::max(best, R.at(a, aprime));
        out.v[static_cast<size_t>(a - 1)] = best;
    }
    return out;
}

} // namespace alcs
