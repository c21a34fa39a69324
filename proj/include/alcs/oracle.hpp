#pragma once
/**
 * @file oracle.hpp
 * @brief Definition-literal reference solvers and orthogonality predicates.
 *
 * Everything in this namespace trades speed for obviousness: each function
 * enumerates the search space of its definition directly and shares no code
 * with the optimized solvers, so the two sides can cross-check each other.
 * Hard budgets keep accidental exponential blow-ups from hanging a test run.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcs/strings_core.hpp"

namespace alcs::oracle {

/// Upper bounds on instance size; exceeding one throws BudgetExceeded.
struct OracleBudget {
    int max_ell = 64;               ///< longest admissible input string
    int max_m = 8;                  ///< most admissible strings
    long long max_k = 16;           ///< largest admissible distance budget
    long long max_enum = 2'000'000; ///< largest admissible enumeration count
};

/// One approximate occurrence inside a text string.
struct OccWitness {
    int start = 0; ///< 1-based; start > end encodes the empty substring
    int end = 0;   ///< inclusive
    long long distance = 0;
};

/// Scans every substring of `text` (positions ascending, ends ascending) and
/// returns the first one within distance k of `candidate`, if any. Under a
/// mismatch-counting metric only windows of |candidate| letters qualify;
/// under edit-like metrics the empty substring is a legal occurrence.
std::optional<OccWitness> brute_k_approx_occurs(const std::string& candidate,
                                                const std::string& text,
                                                long long k,
                                                const DistanceMetric& metric);

/// Reference answer for the substring-restricted problems.
struct BruteSolution {
    int length = 0;
    std::string answer;
    int source_index = 0;     ///< 1-based string the answer was cut from
    int source_offset = 0;    ///< 1-based offset within that string
    int support = 0;          ///< number of strings containing an occurrence
    std::vector<int> members; ///< 1-based indices of those strings, ascending
};

/// Tries every substring of every input string, longest first and then by
/// (source index, offset), and returns the first occurring within budget k
/// in at least t strings. Throws BudgetExceeded, NegativeBudget,
/// ThresholdOutOfRange.
std::optional<BruteSolution> brute_rkt_lcs(const StringSet& S, long long k,
                                           int t, const DistanceMetric& metric,
                                           const OracleBudget& budget = {});

/// The unrestricted variant: tries every string over the alphabet, longest
/// first and then in alphabet order, without requiring the answer to be a
/// substring of an input. Never shorter than the restricted answer. Throws
/// BudgetExceeded when |alphabet|^length passes the enumeration cap.
std::optional<BruteSolution> brute_kt_lcs(const StringSet& S, long long k,
                                          int t, const DistanceMetric& metric,
                                          const OracleBudget& budget = {});

/// Reference answer for equal-length substring sets.
struct LcssBrute {
    int length = 0;
    std::vector<std::string> members; ///< one substring per input string
    std::vector<int> offsets;         ///< 1-based start of each member
};

/// Tries every offset tuple at every length, longest first, and returns the
/// first set whose members are pairwise within k mismatches. Throws
/// BudgetExceeded, NegativeBudget.
std::optional<LcssBrute> brute_rk_lcss(const StringSet& S, long long k,
                                       const OracleBudget& budget = {});

/// Fast feasibility check: does some equal-length substring set of length
/// exactly L satisfy the pairwise mismatch budget? Truncating a valid set
/// keeps it valid, so this holds exactly when the optimum is >= L. Unlike
/// the brute enumerations this one is engineered (bit-parallel candidate
/// pruning), because the reduction checks need it on long strings.
bool rk_lcss_exists_at(const StringSet& S, long long k, int L);

// ---------------------------------------------------------------------------
// Orthogonality predicates over 0/1 vectors.
// ---------------------------------------------------------------------------

using Vec01 = std::vector<uint8_t>;
using VecFamily = std::vector<std::vector<Vec01>>;

/// The anchor vector of a positive multi-set answer.
struct MovWitness {
    int set_index = 0;    ///< 1-based
    int vector_index = 0; ///< 1-based within its set
};

/// Two vectors at distinct indices of A with zero dot product?
/// Throws DimensionMismatch (unequal lengths), EmptySequence (empty A).
bool has_ov(const std::vector<Vec01>& A);

/// Is there a set X_i and a vector u in it such that every *other* set
/// contains some vector orthogonal to u? Returns the first such u in
/// (set, vector) order. Throws DimensionMismatch, EmptySequence (empty
/// family or empty member set).
std::optional<MovWitness> has_m_ov(const VecFamily& X);

/// Is there one vector per set whose coordinatewise product is the zero
/// vector? Throws DimensionMismatch, EmptySequence, BudgetExceeded when the
/// tuple count passes `max_tuples`.
bool has_k_ov(const VecFamily& X, long long max_tuples = 50'000'000);

/// Is there one vector per set, pairwise orthogonal? Implies a positive
/// has_k_ov answer. Throws DimensionMismatch, EmptySequence, BudgetExceeded.
bool has_complete_k_ov(const VecFamily& X, long long max_tuples = 50'000'000);

} // namespace alcs::oracle
