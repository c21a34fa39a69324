#pragma once
/**
 * @file solver.hpp
 * @brief Exact solvers for the restricted approximate-LCS problems:
 *        the greedy per-candidate solver, the max-max-min solver over
 *        per-suffix maxima, the subset cross-validator, and the clique
 *        solver for equal-length substring sets.
 *
 * All solvers return std::nullopt for "no solution exists" (possible when
 * k = 0, or under weighted metrics whose cheapest operation exceeds k);
 * that outcome is a result, not an error.
 */

#include <optional>
#include <string>
#include <vector>

#include "alcs/strings_core.hpp"

namespace alcs {

enum class Problem { RkLCS, RktLCS, RkLCSS, ELCS };

const char* problem_name(Problem p);

/// One verified occurrence of the answer (or one member of an answer set).
struct Witness {
    int string_index = 0; ///< 1-based
    int start = 0;        ///< 1-based; start > end encodes an empty occurrence
    int end = 0;          ///< inclusive
    long long distance = 0;
    bool empty_occurrence = false;
};

struct Solution {
    Problem problem = Problem::RkLCS;
    /// The answer substring; for the substring-set problem, one per string.
    std::vector<std::string> answers;
    int length = 0;
    int source_index = 0;  ///< 1-based string the answer was cut from
    int source_offset = 0; ///< 1-based start within that string
    long long k = 0;
    int t = 0;
    MetricKind metric = MetricKind::Hamming;
    int support = 0; ///< number of strings with a verified occurrence
    std::vector<Witness> witnesses;
};

struct SolverOptions {
    int threads = 1;
    /// Subset enumeration refuses to expand more than this many subsets.
    long long subset_limit = 1000;
    int max_m_for_subsets = 12;
};

/// Greedy per-candidate solver: for every suffix of every string, finds the
/// longest prefix occurring within budget k in at least t strings (the
/// source string counts itself). Ties break toward the smallest
/// (string index, offset). Throws ThresholdOutOfRange, NegativeBudget.
std::optional<Solution> solve_rkt_lcs(const StringSet& S, long long k, int t,
                                      const DistanceMetric& metric,
                                      const SolverOptions& options = {});

/// Max-max-min solver: T = max over (i, i') of min over j of the per-suffix
/// maximum prefix length between s_i[i'..] and s_j. Requires an occurrence
/// in every string (t = m semantics). Throws NegativeBudget.
std::optional<Solution> solve_rk_lcs_maxlcp(const StringSet& S, long long k,
                                            const DistanceMetric& metric,
                                            const SolverOptions& options = {});

/// Cross-validation path: runs the max-max-min solver on every t-subset and
/// returns the longest answer. Throws SubsetExplosion when the subset count
/// exceeds options.subset_limit or m exceeds options.max_m_for_subsets.
std::optional<Solution> solve_rkt_lcs_via_subsets(const StringSet& S, long long k,
                                                  int t,
                                                  const DistanceMetric& metric,
                                                  const SolverOptions& options = {});

/// Equal-length substring sets, one member per string, pairwise within
/// Hamming distance k, of maximum common length. Deterministic witness: the
/// lexicographically smallest offset tuple among the longest. Exponential in
/// m by design. Throws UnsupportedMetric unless the metric counts
/// mismatches, and NegativeBudget.
std::optional<Solution> solve_rk_lcss(
    const StringSet& S, long long k,
    const DistanceMetric& metric = DistanceMetric::hamming(),
    const SolverOptions& options = {});

/// Re-verifies every witness of `sol` by direct distance computation
/// against the text. Throws std::logic_error on any discrepancy; solvers
/// call this on every answer before returning it.
void verify_witnesses(const StringSet& S, const DistanceMetric& metric,
                      const Solution& sol);

} // namespace alcs
