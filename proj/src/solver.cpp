#include "alcs/solver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "alcs/edit_prefix.hpp"
#include "alcs/hamming_lcp.hpp"
#include "alcs/lengthstat.hpp"

namespace alcs {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::RkLCS:  return "rk-lcs";
        case Problem::RktLCS: return "rkt-lcs";
        case Problem::RkLCSS: return "rk-lcss";
        case Problem::ELCS:   return "elcs";
    }
    return "unknown";
}

namespace {

struct BestCell {
    int length = 0;
    int i = 0;
    int p = 0;
    int support = 0;
};

// Deterministic merge order: longer wins, then smaller (i, p).
bool cell_better(const BestCell& a, const BestCell& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.p < b.p;
}

void check_budget(long long k) {
    if (k < 0) fail(errc::NegativeBudget, "distance budget must be >= 0");
}

void check_threshold(int t, int m) {
    if (t < 1 || t > m)
        fail(errc::ThresholdOutOfRange, "threshold t=" + std::to_string(t) +
                                            " outside 1.." + std::to_string(m));
}

// Best candidate anchored in string i: the longest suffix prefix whose
// occurrence count reaches t. The scratch table is recycled across anchors,
// so one worker owns a single buffer for the whole scan.
BestCell scan_candidate(const StringSet& S, long long k, int t,
                        const DistanceMetric& metric, int i) {
    BestCell best;
    const int len_i = static_cast<int>(S.strings[static_cast<size_t>(i - 1)].size());
    std::vector<LcpTable> lcp_tables;
    std::vector<ReachTable> reach_tables;
    if (metric.kind() == MetricKind::Hamming) {
        lcp_tables = lcp_tables_for(i, S, k);
    } else {
        reach_tables.reserve(static_cast<size_t>(S.m));
        for (int j = 1; j <= S.m; ++j)
            reach_tables.push_back(
                edit_reach_table(S.strings[static_cast<size_t>(i - 1)],
                                 S.strings[static_cast<size_t>(j - 1)], k, metric));
    }
    for (int p = 1; p <= len_i; ++p) {
        if (len_i - p + 1 <= best.length) break; // shorter suffixes cannot win
        LengthStatTable T = metric.kind() == MetricKind::Hamming
                                ? length_stat_hamming(lcp_tables, p, i)
                                : length_stat_edit_reach(reach_tables, p, i);
        // The frequency column is non-increasing in l, so the first hit
        // from the top is the maximum.
        for (int l = T.rows; l >= 1; --l) {
            if (T.frequency(l) >= t) {
                if (l > best.length) best = {l, i, p, T.frequency(l)};
                break;
            }
        }
    }
    return best;
}

// First (smallest-q) occurrence witness of s_i[p..p+l-1] inside s_j, or
// nothing when string j does not support the candidate.
std::optional<Witness> find_witness(const StringSet& S,
                                    const DistanceMetric& metric, long long k,
                                    int i, int p, int l, int j) {
    const std::string& si = S.strings[static_cast<size_t>(i - 1)];
    const std::string& sj = S.strings[static_cast<size_t>(j - 1)];
    const std::string u = si.substr(static_cast<size_t>(p - 1), static_cast<size_t>(l));
    if (metric.kind() == MetricKind::Hamming) {
        const LcpTable tab = lcp_hk_table(si, sj, k);
        for (int q = 1; q <= tab.cols; ++q) {
            if (tab.at(p, q) >= l) {
                const long long d = hamming_distance(
                    u, std::string_view(sj).substr(static_cast<size_t>(q - 1),
                                                   static_cast<size_t>(l)));
                return Witness{j, q, q + l - 1, d, false};
            }
        }
        return std::nullopt;
    }
    const ReachTable R = edit_reach_table(si, sj, k, metric);
    for (int q = 1; q <= R.len2 + 1; ++q) {
        if (R.at(p, q) >= l) {
            const auto slice = edit_prefix_slice(si, sj, p, q, k, metric);
            const int bprime = slice[static_cast<size_t>(l - 1)];
            const std::string target =
                bprime >= q ? sj.substr(static_cast<size_t>(q - 1),
                                        static_cast<size_t>(bprime - q + 1))
                            : std::string();
            return Witness{j, q, bprime, edit_distance(u, target, metric),
                           bprime < q};
        }
    }
    return std::nullopt;
}

Solution assemble(const StringSet& S, const DistanceMetric& metric, long long k,
                  int t, Problem tag, const BestCell& best) {
    Solution sol;
    sol.problem = tag;
    sol.length = best.length;
    sol.source_index = best.i;
    sol.source_offset = best.p;
    sol.k = k;
    sol.t = t;
    sol.metric = metric.kind();
    sol.answers.push_back(S.strings[static_cast<size_t>(best.i - 1)].substr(
        static_cast<size_t>(best.p - 1), static_cast<size_t>(best.length)));
    for (int j = 1; j <= S.m; ++j)
        if (auto w = find_witness(S, metric, k, best.i, best.p, best.length, j))
            sol.witnesses.push_back(*w);
    sol.support = static_cast<int>(sol.witnesses.size());
    verify_witnesses(S, metric, sol);
    return sol;
}

// Runs fn(i) for i = 1..m across the requested worker count and returns the
// per-i results in index order, so parallel and serial runs merge alike.
std::vector<BestCell> for_each_candidate(
    int m, int threads, const std::function<BestCell(int)>& fn) {
    std::vector<BestCell> cells(static_cast<size_t>(m));
    if (threads <= 1 || m <= 1) {
        for (int i = 1; i <= m; ++i) cells[static_cast<size_t>(i - 1)] = fn(i);
        return cells;
    }
    const int workers = std::min(threads, m);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (int i = w + 1; i <= m; i += workers)
                cells[static_cast<size_t>(i - 1)] = fn(i);
        });
    for (auto& th : pool) th.join();
    return cells;
}

} // namespace

std::optional<Solution> solve_rkt_lcs(const StringSet& S, long long k, int t,
                                      const DistanceMetric& metric,
                                      const SolverOptions& options) {
    check_budget(k);
    check_threshold(t, S.m);
    const auto cells = for_each_candidate(
        S.m, options.threads,
        [&](int i) { return scan_candidate(S, k, t, metric, i); });
    BestCell best;
    for (const auto& c : cells)
        if (c.length > 0 && (best.length == 0 || cell_better(c, best))) best = c;
    if (best.length == 0) return std::nullopt;
    return assemble(S, metric, k, t, Problem::RktLCS, best);
}

std::optional<Solution> solve_rk_lcs_maxlcp(const StringSet& S, long long k,
                                            const DistanceMetric& metric,
                                            const SolverOptions& options) {
    check_budget(k);
    const auto cells = for_each_candidate(S.m, options.threads, [&](int i) {
        const std::string& si = S.strings[static_cast<size_t>(i - 1)];
        const int len_i = static_cast<int>(si.size());
        // Per-suffix minima over all partner strings, folded in place.
        std::vector<int32_t> floor_len(static_cast<size_t>(len_i), INT32_MAX);
        for (int j = 1; j <= S.m; ++j) {
            const std::string& sj = S.strings[static_cast<size_t>(j - 1)];
            MaxLcpArray arr = metric.kind() == MetricKind::Hamming
                                  ? max_lcp_h(lcp_hk_table(si, sj, k))
                                  : max_lcp_e(edit_reach_table(si, sj, k, metric));
            for (int p = 1; p <= len_i; ++p)
                floor_len[static_cast<size_t>(p - 1)] =
                    std::min(floor_len[static_cast<size_t>(p - 1)], arr.at(p));
        }
        BestCell local;
        for (int p = 1; p <= len_i; ++p) {
            const int v = floor_len[static_cast<size_t>(p - 1)];
            if (v > local.length) local = {v, i, p, S.m};
        }
        return local;
    });
    BestCell best;
    for (const auto& c : cells)
        if (c.length > 0 && (best.length == 0 || cell_better(c, best))) best = c;
    if (best.length == 0) return std::nullopt;
    return assemble(S, metric, k, S.m, Problem::RkLCS, best);
}

std::optional<Solution> solve_rkt_lcs_via_subsets(const StringSet& S, long long k,
                                                  int t,
                                                  const DistanceMetric& metric,
                                                  const SolverOptions& options) {
    check_budget(k);
    check_threshold(t, S.m);
    if (S.m > options.max_m_for_subsets)
        fail(errc::SubsetExplosion,
             "m=" + std::to_string(S.m) + " exceeds the subset solver bound of " +
                 std::to_string(options.max_m_for_subsets));
    long long count = 1;
    for (int x = 1; x <= t; ++x) {
        count = count * (S.m - x + 1) / x;
        if (count > options.subset_limit)
            fail(errc::SubsetExplosion,
                 "subset count exceeds the configured limit of " +
                     std::to_string(options.subset_limit));
    }

    std::optional<Solution> best;
    std::vector<int> idx(static_cast<size_t>(t));
    std::iota(idx.begin(), idx.end(), 0); // 0-based members, lexicographic
    while (true) {
        std::optional<Solution> cand;
        if (t == 1) {
            const int j = idx[0] + 1;
            const auto& sj = S.strings[static_cast<size_t>(j - 1)];
            Solution single;
            single.problem = Problem::RktLCS;
            single.answers.push_back(sj);
            single.length = static_cast<int>(sj.size());
            single.source_index = j;
            single.source_offset = 1;
            single.k = k;
            single.t = t;
            single.metric = metric.kind();
            single.support = 1;
            single.witnesses.push_back(
                Witness{j, 1, static_cast<int>(sj.size()), 0, false});
            cand = std::move(single);
        } else {
            std::vector<std::string> member_strings;
            member_strings.reserve(idx.size());
            for (int member : idx)
                member_strings.push_back(S.strings[static_cast<size_t>(member)]);
            StringSet sub = validate_string_set(std::move(member_strings), S.alphabet);
            cand = solve_rk_lcs_maxlcp(sub, k, metric, options);
            if (cand) {
                cand->problem = Problem::RktLCS;
                cand->t = t;
                cand->source_index = idx[static_cast<size_t>(cand->source_index - 1)] + 1;
                for (auto& w : cand->witnesses)
                    w.string_index = idx[static_cast<size_t>(w.string_index - 1)] + 1;
            }
        }
        if (cand && (!best || cand->length > best->length)) best = std::move(cand);

        // next combination
        int pos = t - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == S.m - t + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int z = pos + 1; z < t; ++z)
            idx[static_cast<size_t>(z)] = idx[static_cast<size_t>(z - 1)] + 1;
    }
    if (best) verify_witnesses(S, metric, *best);
    return best;
}

namespace {

// Mismatch count of two equal-length windows stays within k?
bool windows_within(const std::string& x, int ox, const std::string& y, int oy,
                    int L, long long k) {
    const char* a = x.data() + ox;
    const char* b = y.data() + oy;
    long long d = 0;
    for (int idx = 0; idx < L; ++idx) {
        if (a[idx] != b[idx] && ++d > k) return false;
    }
    return true;
}

// One-vertex-per-string clique search over length-L windows. `order` fixes
// the assignment sequence; offsets are explored ascending, so with the
// identity order the first success is the lexicographically smallest tuple.
bool clique_assign(const StringSet& S, long long k, int L,
                   const std::vector<int>& order, std::vector<int>& offs,
                   size_t depth) {
    if (depth == order.size()) return true;
    const int s = order[depth];
    const std::string& str = S.strings[static_cast<size_t>(s)];
    const int limit = static_cast<int>(str.size()) - L;
    for (int off = 0; off <= limit; ++off) {
        bool ok = true;
        for (size_t d2 = 0; d2 < depth && ok; ++d2) {
            const int s2 = order[d2];
            ok = windows_within(str, off, S.strings[static_cast<size_t>(s2)],
                                offs[static_cast<size_t>(s2)], L, k);
        }
        if (!ok) continue;
        offs[static_cast<size_t>(s)] = off;
        if (clique_assign(S, k, L, order, offs, depth + 1)) return true;
    }
    return false;
}

bool lcss_feasible(const StringSet& S, long long k, int L,
                   std::vector<int>& offs, bool lexicographic) {
    std::vector<int> order(static_cast<size_t>(S.m));
    std::iota(order.begin(), order.end(), 0);
    if (!lexicographic) {
        // Fewest windows first: cheapest parts constrain the search early.
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return S.strings[static_cast<size_t>(a)].size() <
                   S.strings[static_cast<size_t>(b)].size();
        });
    }
    offs.assign(static_cast<size_t>(S.m), -1);
    return clique_assign(S, k, L, order, offs, 0);
}

} // namespace

std::optional<Solution> solve_rk_lcss(const StringSet& S, long long k,
                                      const DistanceMetric& metric,
                                      const SolverOptions& options) {
    (void)options;
    if (metric.kind() != MetricKind::Hamming)
        fail(errc::UnsupportedMetric,
             "equal-length substring sets are defined for mismatch counting only");
    check_budget(k);
    int min_len = S.ell;
    for (const auto& s : S.strings)
        min_len = std::min(min_len, static_cast<int>(s.size()));

    std::vector<int> offs;
    // Feasibility is downward-closed in L (truncating a valid set stays
    // valid), so binary search applies.
    int lo = 1, hi = min_len, best_len = 0;
    while (lo <= hi) {
        const int mid = lo + (hi - lo) / 2;
        if (lcss_feasible(S, k, mid, offs, /*lexicographic=*/false)) {
            best_len = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    if (best_len == 0) return std::nullopt;
    // Deterministic witness: smallest offset tuple among the longest sets.
    lcss_feasible(S, k, best_len, offs, /*lexicographic=*/true);

    Solution sol;
    sol.problem = Problem::RkLCSS;
    sol.length = best_len;
    sol.k = k;
    sol.t = S.m;
    sol.metric = MetricKind::Hamming;
    sol.support = S.m;
    sol.source_index = 1;
    sol.source_offset = offs[0] + 1;
    for (int i = 0; i < S.m; ++i)
        sol.answers.push_back(S.strings[static_cast<size_t>(i)].substr(
            static_cast<size_t>(offs[static_cast<size_t>(i)]),
            static_cast<size_t>(best_len)));
    for (int i = 0; i < S.m; ++i) {
        long long worst = 0;
        for (int j = 0; j < S.m; ++j)
            if (j != i)
                worst = std::max(worst, hamming_distance(sol.answers[static_cast<size_t>(i)],
                                                         sol.answers[static_cast<size_t>(j)]));
        sol.witnesses.push_back(Witness{i + 1, offs[static_cast<size_t>(i)] + 1,
                                        offs[static_cast<size_t>(i)] + best_len,
                                        worst, false});
    }
    verify_witnesses(S, metric, sol);
    return sol;
}

void verify_witnesses(const StringSet& S, const DistanceMetric& metric,
                      const Solution& sol) {
    const auto req = [](bool cond, const std::string& msg) {
        if (!cond) throw std::logic_error("witness verification failed: " + msg);
    };
    req(!sol.answers.empty(), "missing answer");

    if (sol.problem == Problem::RkLCSS) {
        req(static_cast<int>(sol.answers.size()) == S.m, "answer count");
        req(static_cast<int>(sol.witnesses.size()) == S.m, "witness count");
        for (int i = 0; i < S.m; ++i) {
            const Witness& w = sol.witnesses[static_cast<size_t>(i)];
            req(w.string_index == i + 1, "witness order");
            const std::string& text = S.strings[static_cast<size_t>(i)];
            req(w.start >= 1 && w.end - w.start + 1 == sol.length &&
                    w.end <= static_cast<int>(text.size()),
                "witness span");
            req(text.compare(static_cast<size_t>(w.start - 1),
                             static_cast<size_t>(sol.length),
                             sol.answers[static_cast<size_t>(i)]) == 0,
                "witness text");
        }
        for (int i = 0; i < S.m; ++i) {
            long long worst = 0;
            for (int j = 0; j < S.m; ++j) {
                if (i == j) continue;
                const long long d =
                    hamming_distance(sol.answers[static_cast<size_t>(i)],
                                     sol.answers[static_cast<size_t>(j)]);
                req(d <= sol.k, "pairwise distance over budget");
                worst = std::max(worst, d);
            }
            req(sol.witnesses[static_cast<size_t>(i)].distance == worst,
                "stored pairwise distance");
        }
        return;
    }

    const std::string& u = sol.answers[0];
    req(static_cast<int>(u.size()) == sol.length, "answer length");
    req(sol.source_index >= 1 && sol.source_index <= S.m, "source index");
    const std::string& src = S.strings[static_cast<size_t>(sol.source_index - 1)];
    req(sol.source_offset >= 1 &&
            sol.source_offset - 1 + sol.length <= static_cast<int>(src.size()),
        "source span");
    req(src.compare(static_cast<size_t>(sol.source_offset - 1),
                    static_cast<size_t>(sol.length), u) == 0,
        "answer is not a substring of its source");
    req(static_cast<int>(sol.witnesses.size()) == sol.support, "support count");
    req(sol.support >= sol.t, "support below threshold");
    for (const Witness& w : sol.witnesses) {
        req(w.string_index >= 1 && w.string_index <= S.m, "witness index");
        const std::string& text = S.strings[static_cast<size_t>(w.string_index - 1)];
        const int span = w.end - w.start + 1;
        req(w.start >= 1 && span >= 0 && w.end <= static_cast<int>(text.size()),
            "witness span");
        req(w.empty_occurrence == (span == 0), "empty-occurrence flag");
        const std::string target =
            span > 0 ? text.substr(static_cast<size_t>(w.start - 1),
                                   static_cast<size_t>(span))
                     : std::string();
        long long d;
        if (metric.kind() == MetricKind::Hamming) {
            req(span == sol.length, "window length");
            d = hamming_distance(u, target);
        } else {
            d = edit_distance(u, target, metric);
        }
        req(d == w.distance, "stored distance");
        req(d <= sol.k, "distance over budget");
    }
}

} // namespace alcs
