#include "alcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <functional>
#include <numeric>

namespace alcs::oracle {

namespace {

// The reference solvers keep their own distance code on purpose: a bug in
// the optimized primitives must not be able to hide here.

long long literal_mismatches(const std::string& u, const std::string& v) {
    long long d = 0;
    for (size_t idx = 0; idx < u.size(); ++idx) d += u[idx] != v[idx];
    return d;
}

void check_k(long long k) {
    if (k < 0) fail(errc::NegativeBudget, "distance budget must be >= 0");
}

void check_instance(const StringSet& S, long long k, const OracleBudget& b) {
    if (S.ell > b.max_ell)
        fail(errc::BudgetExceeded, "string length " + std::to_string(S.ell) +
                                       " exceeds the reference-solver cap of " +
                                       std::to_string(b.max_ell));
    if (S.m > b.max_m)
        fail(errc::BudgetExceeded, "string count " + std::to_string(S.m) +
                                       " exceeds the reference-solver cap of " +
                                       std::to_string(b.max_m));
    if (k > b.max_k)
        fail(errc::BudgetExceeded, "budget k=" + std::to_string(k) +
                                       " exceeds the reference-solver cap of " +
                                       std::to_string(b.max_k));
}

} // namespace

std::optional<OccWitness> brute_k_approx_occurs(const std::string& candidate,
                                                const std::string& text,
                                                long long k,
                                                const DistanceMetric& metric) {
    check_k(k);
    const int n = static_cast<int>(text.size());
    const int L = static_cast<int>(candidate.size());
    if (metric.kind() == MetricKind::Hamming) {
        for (int start = 1; start + L - 1 <= n; ++start) {
            const long long d = literal_mismatches(
                candidate, text.substr(static_cast<size_t>(start - 1),
                                       static_cast<size_t>(L)));
            if (d <= k) return OccWitness{start, start + L - 1, d};
        }
        return std::nullopt;
    }
    // One dynamic program per start position covers every end at that start
    // (column j holds the cost of producing text[start .. start+j-1]).
    const size_t nu = candidate.size();
    std::vector<long long> col(nu + 1), nxt(nu + 1);
    for (int start = 1; start <= n + 1; ++start) {
        col[0] = 0;
        for (size_t i = 1; i <= nu; ++i)
            col[i] = col[i - 1] + metric.del_cost(static_cast<unsigned char>(
                                      candidate[i - 1]));
        if (col[nu] <= k) // the empty substring of text
            return OccWitness{start, start - 1, col[nu]};
        for (int end = start; end <= n; ++end) {
            const unsigned char b = static_cast<unsigned char>(text[end - 1]);
            nxt[0] = col[0] + metric.ins_cost(b);
            long long colmin = nxt[0];
            for (size_t i = 1; i <= nu; ++i) {
                const unsigned char a =
                    static_cast<unsigned char>(candidate[i - 1]);
                nxt[i] = std::min({col[i - 1] + metric.sub_cost(a, b),
                                   nxt[i - 1] + metric.ins_cost(b),
                                   col[i] + metric.del_cost(a)});
                colmin = std::min(colmin, nxt[i]);
            }
            std::swap(col, nxt);
            if (col[nu] <= k) return OccWitness{start, end, col[nu]};
            // Column minima never decrease, so once the whole column is
            // over budget no longer end can recover.
            if (colmin > k) break;
        }
    }
    return std::nullopt;
}

std::optional<BruteSolution> brute_rkt_lcs(const StringSet& S, long long k,
                                           int t, const DistanceMetric& metric,
                                           const OracleBudget& budget) {
    check_k(k);
    if (t < 1 || t > S.m)
        fail(errc::ThresholdOutOfRange,
             "threshold t=" + std::to_string(t) + " outside 1.." +
                 std::to_string(S.m));
    check_instance(S, k, budget);
    long long checks = 0;
    for (const auto& s : S.strings) {
        const long long len = static_cast<long long>(s.size());
        checks += len * (len + 1) / 2 * S.m;
    }
    if (checks > budget.max_enum)
        fail(errc::BudgetExceeded,
             "substring enumeration needs " + std::to_string(checks) +
                 " occurrence checks, cap is " + std::to_string(budget.max_enum));

    std::vector<std::string> tried; // dedupe repeats at the current length
    for (int L = S.ell; L >= 1; --L) {
        tried.clear();
        for (int i = 1; i <= S.m; ++i) {
            const std::string& si = S.strings[static_cast<size_t>(i - 1)];
            for (int p = 1; p + L - 1 <= static_cast<int>(si.size()); ++p) {
                std::string u = si.substr(static_cast<size_t>(p - 1),
                                          static_cast<size_t>(L));
                if (std::find(tried.begin(), tried.end(), u) != tried.end())
                    continue;
                tried.push_back(u);
                BruteSolution sol;
                for (int j = 1; j <= S.m; ++j)
                    if (brute_k_approx_occurs(
                            u, S.strings[static_cast<size_t>(j - 1)], k, metric))
                        sol.members.push_back(j);
                if (static_cast<int>(sol.members.size()) >= t) {
                    sol.length = L;
                    sol.answer = std::move(u);
                    sol.source_index = i;
                    sol.source_offset = p;
                    sol.support = static_cast<int>(sol.members.size());
                    return sol;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<BruteSolution> brute_kt_lcs(const StringSet& S, long long k,
                                          int t, const DistanceMetric& metric,
                                          const OracleBudget& budget) {
    check_k(k);
    if (t < 1 || t > S.m)
        fail(errc::ThresholdOutOfRange,
             "threshold t=" + std::to_string(t) + " outside 1.." +
                 std::to_string(S.m));
    check_instance(S, k, budget);
    const std::string& sigma = S.alphabet.symbols();
    const long long nsym = sigma.size();
    // Longer candidates cannot occur anywhere: even deleting down to the
    // longest input already costs more than k.
    const int max_len =
        metric.kind() == MetricKind::Hamming
            ? S.ell
            : S.ell + static_cast<int>(k / std::max(1LL, metric.min_del_cost()));
    for (int L = max_len; L >= 1; --L) {
        long long total = 1;
        for (int x = 0; x < L; ++x) {
            total *= nsym;
            if (total > budget.max_enum)
                fail(errc::BudgetExceeded,
                     "alphabet^" + std::to_string(L) +
                         " candidates exceed the enumeration cap of " +
                         std::to_string(budget.max_enum));
        }
        std::vector<int> digits(static_cast<size_t>(L), 0);
        std::string u(static_cast<size_t>(L), sigma[0]);
        while (true) {
            BruteSolution sol;
            for (int j = 1; j <= S.m; ++j)
                if (brute_k_approx_occurs(
                        u, S.strings[static_cast<size_t>(j - 1)], k, metric))
                    sol.members.push_back(j);
            if (static_cast<int>(sol.members.size()) >= t) {
                sol.length = L;
                sol.answer = u;
                sol.support = static_cast<int>(sol.members.size());
                return sol; // no source: the answer need not be a substring
            }
            int pos = L - 1;
            while (pos >= 0 && digits[static_cast<size_t>(pos)] == nsym - 1)
                --pos;
            if (pos < 0) break;
            ++digits[static_cast<size_t>(pos)];
            u[static_cast<size_t>(pos)] = sigma[static_cast<size_t>(
                digits[static_cast<size_t>(pos)])];
            for (int z = pos + 1; z < L; ++z) {
                digits[static_cast<size_t>(z)] = 0;
                u[static_cast<size_t>(z)] = sigma[0];
            }
        }
    }
    return std::nullopt;
}

std::optional<LcssBrute> brute_rk_lcss(const StringSet& S, long long k,
                                       const OracleBudget& budget) {
    check_k(k);
    check_instance(S, k, budget);
    int min_len = S.ell;
    for (const auto& s : S.strings)
        min_len = std::min(min_len, static_cast<int>(s.size()));
    for (int L = min_len; L >= 1; --L) {
        long long tuples = 1;
        for (const auto& s : S.strings) {
            tuples *= static_cast<long long>(s.size()) - L + 1;
            if (tuples > budget.max_enum)
                fail(errc::BudgetExceeded,
                     "offset-tuple enumeration exceeds the cap of " +
                         std::to_string(budget.max_enum));
        }
        std::vector<int> offs(static_cast<size_t>(S.m), 1); // 1-based starts
        while (true) {
            bool ok = true;
            for (int i = 0; i < S.m && ok; ++i)
                for (int j = i + 1; j < S.m && ok; ++j) {
                    const long long d = literal_mismatches(
                        S.strings[static_cast<size_t>(i)].substr(
                            static_cast<size_t>(offs[static_cast<size_t>(i)] - 1),
                            static_cast<size_t>(L)),
                        S.strings[static_cast<size_t>(j)].substr(
                            static_cast<size_t>(offs[static_cast<size_t>(j)] - 1),
                            static_cast<size_t>(L)));
                    ok = d <= k;
                }
            if (ok) {
                LcssBrute sol;
                sol.length = L;
                sol.offsets = offs;
                for (int i = 0; i < S.m; ++i)
                    sol.members.push_back(S.strings[static_cast<size_t>(i)].substr(
                        static_cast<size_t>(offs[static_cast<size_t>(i)] - 1),
                        static_cast<size_t>(L)));
                return sol;
            }
            int pos = S.m - 1;
            while (pos >= 0 &&
                   offs[static_cast<size_t>(pos)] + L - 1 ==
                       static_cast<int>(
                           S.strings[static_cast<size_t>(pos)].size()))
                --pos;
            if (pos < 0) break;
            ++offs[static_cast<size_t>(pos)];
            for (int z = pos + 1; z < S.m; ++z) offs[static_cast<size_t>(z)] = 1;
        }
    }
    return std::nullopt;
}

namespace {

// All-pairs window-distance bits between two strings: row p (0-based window
// of x) gets bit q set when the length-L windows at p and q mismatch in at
// most k positions. Computed per diagonal with a sliding mismatch count.
std::vector<uint64_t> window_edges(const std::string& x, const std::string& y,
                                   int L, long long k, int words) {
    const int nx = static_cast<int>(x.size());
    const int ny = static_cast<int>(y.size());
    const int wx = nx - L + 1;
    std::vector<uint64_t> rows(static_cast<size_t>(wx) * words, 0);
    for (int delta = -(ny - 1); delta <= nx - 1; ++delta) {
        const int px0 = std::max(0, delta);
        const int py0 = px0 - delta;
        const int steps = std::min(nx - px0, ny - py0);
        if (steps < L) continue;
        long long run = 0;
        for (int s = 0; s < steps; ++s) {
            run += x[static_cast<size_t>(px0 + s)] != y[static_cast<size_t>(py0 + s)];
            if (s >= L)
                run -= x[static_cast<size_t>(px0 + s - L)] !=
                       y[static_cast<size_t>(py0 + s - L)];
            if (s >= L - 1 && run <= k) {
                const int p = px0 + s - L + 1;
                const int q = py0 + s - L + 1;
                rows[static_cast<size_t>(p) * words + q / 64] |=
                    uint64_t{1} << (q % 64);
            }
        }
    }
    return rows;
}

bool any_bit(const std::vector<uint64_t>& mask) {
    for (uint64_t w : mask)
        if (w) return true;
    return false;
}

} // namespace

bool rk_lcss_exists_at(const StringSet& S, long long k, int L) {
    check_k(k);
    if (L < 1) fail(errc::IndexOutOfRange, "length must be >= 1");
    const int m = S.m;
    std::vector<int> wc(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        wc[static_cast<size_t>(i)] =
            static_cast<int>(S.strings[static_cast<size_t>(i)].size()) - L + 1;
        if (wc[static_cast<size_t>(i)] <= 0) return false;
    }
    // Scarce parts first: they prune the search earliest.
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return wc[static_cast<size_t>(a)] < wc[static_cast<size_t>(b)];
    });
    std::vector<int> words(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        words[static_cast<size_t>(i)] = (wc[static_cast<size_t>(i)] + 63) / 64;

    // edges[a][b] for ordered positions a < b, rows indexed by part a windows.
    std::vector<std::vector<std::vector<uint64_t>>> edges(
        static_cast<size_t>(m),
        std::vector<std::vector<uint64_t>>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            edges[static_cast<size_t>(a)][static_cast<size_t>(b)] = window_edges(
                S.strings[static_cast<size_t>(order[static_cast<size_t>(a)])],
                S.strings[static_cast<size_t>(order[static_cast<size_t>(b)])], L,
                k, words[static_cast<size_t>(order[static_cast<size_t>(b)])]);

    // One-window-per-part clique search with bit-parallel candidate masks.
    std::vector<std::vector<uint64_t>> cand(static_cast<size_t>(m));
    for (int b = 0; b < m; ++b) {
        const int ob = order[static_cast<size_t>(b)];
        cand[static_cast<size_t>(b)].assign(
            static_cast<size_t>(words[static_cast<size_t>(ob)]), ~uint64_t{0});
        const int tail = wc[static_cast<size_t>(ob)] % 64;
        if (tail) cand[static_cast<size_t>(b)].back() = (uint64_t{1} << tail) - 1;
    }
    std::function<bool(int, const std::vector<std::vector<uint64_t>>&)> dfs =
        [&](int depth, const std::vector<std::vector<uint64_t>>& masks) -> bool {
        if (depth == m) return true;
        const auto& mine = masks[static_cast<size_t>(depth)];
        for (size_t w = 0; w < mine.size(); ++w) {
            uint64_t bits = mine[w];
            while (bits) {
                const int q = static_cast<int>(w) * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (depth == m - 1) return true;
                auto next = masks;
                bool dead = false;
                for (int b = depth + 1; b < m && !dead; ++b) {
                    const auto& row =
                        edges[static_cast<size_t>(depth)][static_cast<size_t>(b)];
                    const int ob = order[static_cast<size_t>(b)];
                    const size_t base = static_cast<size_t>(q) *
                                        words[static_cast<size_t>(ob)];
                    auto& nb = next[static_cast<size_t>(b)];
                    for (size_t c = 0; c < nb.size(); ++c) nb[c] &= row[base + c];
                    dead = !any_bit(nb);
                }
                if (!dead && dfs(depth + 1, next)) return true;
            }
        }
        return false;
    };
    return dfs(0, cand);
}

// ---------------------------------------------------------------------------
// Orthogonality predicates.
// ---------------------------------------------------------------------------

namespace {

size_t checked_dim(const VecFamily& X) {
    if (X.empty()) fail(errc::EmptySequence, "empty vector family");
    size_t d = SIZE_MAX;
    for (const auto& set : X) {
        if (set.empty()) fail(errc::EmptySequence, "empty vector set");
        for (const auto& v : set) {
            if (d == SIZE_MAX) d = v.size();
            if (v.size() != d)
                fail(errc::DimensionMismatch, "vectors differ in dimension");
        }
    }
    if (d == 0) fail(errc::DimensionMismatch, "zero-dimensional vectors");
    return d;
}

bool orthogonal(const Vec01& u, const Vec01& v) {
    for (size_t c = 0; c < u.size(); ++c)
        if (u[c] && v[c]) return false;
    return true;
}

long long checked_tuple_count(const VecFamily& X, long long cap) {
    long long total = 1;
    for (const auto& set : X) {
        total *= static_cast<long long>(set.size());
        if (total > cap)
            fail(errc::BudgetExceeded,
                 "tuple enumeration exceeds the cap of " + std::to_string(cap));
    }
    return total;
}

template <typename TupleCheck>
bool any_tuple(const VecFamily& X, const TupleCheck& accept) {
    std::vector<size_t> pick(X.size(), 0);
    while (true) {
        if (accept(pick)) return true;
        size_t pos = X.size();
        while (pos > 0 && pick[pos - 1] + 1 == X[pos - 1].size()) --pos;
        if (pos == 0) return false;
        ++pick[pos - 1];
        for (size_t z = pos; z < X.size(); ++z) pick[z] = 0;
    }
}

} // namespace

bool has_ov(const std::vector<Vec01>& A) {
    checked_dim(VecFamily{A});
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (orthogonal(A[i], A[j])) return true;
    return false;
}

std::optional<MovWitness> has_m_ov(const VecFamily& X) {
    checked_dim(X);
    for (size_t i = 0; i < X.size(); ++i) {
        for (size_t ui = 0; ui < X[i].size(); ++ui) {
            bool all = true;
            for (size_t j = 0; j < X.size() && all; ++j) {
                if (j == i) continue;
                bool found = false;
                for (const auto& v : X[j])
                    if (orthogonal(X[i][ui], v)) {
                        found = true;
                        break;
                    }
                all = found;
            }
            if (all)
                return MovWitness{static_cast<int>(i) + 1,
                                  static_cast<int>(ui) + 1};
        }
    }
    return std::nullopt;
}

bool has_k_ov(const VecFamily& X, long long max_tuples) {
    const size_t d = checked_dim(X);
    checked_tuple_count(X, max_tuples);
    return any_tuple(X, [&](const std::vector<size_t>& pick) {
        for (size_t c = 0; c < d; ++c) {
            bool some_zero = false;
            for (size_t i = 0; i < X.size(); ++i)
                if (!X[i][pick[i]][c]) {
                    some_zero = true;
                    break;
                }
            if (!some_zero) return false; // this coordinate multiplies to 1
        }
        return true;
    });
}

bool has_complete_k_ov(const VecFamily& X, long long max_tuples) {
    checked_dim(X);
    checked_tuple_count(X, max_tuples);
    return any_tuple(X, [&](const std::vector<size_t>& pick) {
        for (size_t i = 0; i < X.size(); ++i)
            for (size_t j = i + 1; j < X.size(); ++j)
                if (!orthogonal(X[i][pick[i]], X[j][pick[j]])) return false;
        return true;
    });
}

} // namespace alcs::oracle
