#pragma once
/**
 * @file strings_core.hpp
 * @brief Alphabets, validated string sets, indeterminate strings, distance
 *        metrics, and the primitive distance/match predicates every other
 *        component builds on.
 *
 * All types are immutable after construction and all functions are pure, so
 * everything here is safe to use from many threads concurrently.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alcs/error.hpp"

namespace alcs {

/// A finite, totally ordered set of single-byte letters (at most 256).
class Alphabet {
public:
    /// Builds an alphabet from the given symbols, preserving their order.
    /// Throws LetterOutOfAlphabet if a symbol repeats.
    explicit Alphabet(std::string_view symbols);

    /// Convenience: the sorted set of distinct letters used by `strings`.
    static Alphabet from_used_letters(const std::vector<std::string>& strings);

    int size() const { return static_cast<int>(symbols_.size()); }
    bool contains(unsigned char c) const { return index_[c] >= 0; }
    /// 0-based rank of a letter, or -1 when absent.
    int index_of(unsigned char c) const { return index_[c]; }
    char symbol(int idx) const;
    const std::string& symbols() const { return symbols_; }

private:
    std::string symbols_;
    std::array<int, 256> index_{};
};

/// A validated collection of m non-empty strings over a shared alphabet.
struct StringSet {
    std::vector<std::string> strings;
    Alphabet alphabet;
    int m = 0;          ///< number of strings
    long long N = 0;    ///< total length
    int ell = 0;        ///< maximum length
};

/// Validates and packages raw strings. Throws EmptyString, TooFewStrings,
/// or LetterOutOfAlphabet.
StringSet validate_string_set(std::vector<std::string> raw, Alphabet alphabet);

/// One position of an indeterminate string: a non-empty set of letters,
/// stored in canonical sorted order with no duplicates.
using LetterSet = std::string;

/// A string whose positions are letter-sets; two positions match when their
/// sets intersect.
struct IndeterminateString {
    std::vector<LetterSet> positions;
    /// True when at least one position holds more than one letter.
    bool strictly_indeterminate = false;
};

/// Validates the position sets (non-empty, inside the alphabet), sorts and
/// dedupes each, and computes the indeterminacy flag.
/// Throws EmptyLetterSet, EmptyString (no positions), LetterOutOfAlphabet.
IndeterminateString make_indeterminate(std::vector<LetterSet> positions,
                                       const Alphabet& alphabet);

/// Wraps a plain string as a determinate IndeterminateString.
IndeterminateString indeterminate_from_plain(const std::string& s,
                                             const Alphabet& alphabet);

/// Renders as e.g. "[AT]G[CG]T": singleton positions print bare.
std::string render_indeterminate(const IndeterminateString& s);
std::string render_indeterminate_slice(const IndeterminateString& s,
                                       int start, int len);

enum class MetricKind { Hamming, Edit, WeightedEdit };

/// A distance metric: Hamming, unit-cost edit, or weighted edit with an
/// integer cost for each (operation, letter, letter) triple.
///
/// Weighted costs must be >= 1 for insertions, deletions, and substitutions
/// of distinct letters; substituting a letter for itself always costs 0.
/// Costs may be asymmetric (cost(a->b) != cost(b->a)); the weighted distance
/// is then not a metric in the mathematical sense, which is documented and
/// allowed.
class DistanceMetric {
public:
    static DistanceMetric hamming() { return DistanceMetric(MetricKind::Hamming); }
    static DistanceMetric edit() { return DistanceMetric(MetricKind::Edit); }

    /// Builder for weighted-edit metrics. Unlisted operations cost 1.
    class WeightedBuilder {
    public:
        WeightedBuilder();
        /// cost of substituting `from` by `to`; `from == to` must be 0.
        WeightedBuilder& substitution(unsigned char from, unsigned char to,
                                      long long cost);
        WeightedBuilder& insertion(unsigned char letter, long long cost);
        WeightedBuilder& deletion(unsigned char letter, long long cost);
        DistanceMetric build() const;

    private:
        std::vector<long long> sub_;
        std::array<long long, 256> ins_{};
        std::array<long long, 256> del_{};
    };

    MetricKind kind() const { return kind_; }
    bool is_edit_like() const { return kind_ != MetricKind::Hamming; }

    long long sub_cost(unsigned char a, unsigned char b) const {
        if (a == b) return 0;
        if (kind_ != MetricKind::WeightedEdit) return 1;
        return (*costs_).sub[static_cast<size_t>(a) * 256 + b];
    }
    long long ins_cost(unsigned char b) const {
        if (kind_ != MetricKind::WeightedEdit) return 1;
        return (*costs_).ins[b];
    }
    long long del_cost(unsigned char a) const {
        if (kind_ != MetricKind::WeightedEdit) return 1;
        return (*costs_).del[a];
    }
    /// Minimum cost over all insertions and deletions (band-width driver).
    long long min_indel_cost() const {
        return kind_ == MetricKind::WeightedEdit ? costs_->min_indel : 1;
    }
    /// Minimum cost over all deletions.
    long long min_del_cost() const {
        return kind_ == MetricKind::WeightedEdit ? costs_->min_del : 1;
    }

private:
    struct CostTable {
        std::vector<long long> sub; // 256x256, row = from
        std::array<long long, 256> ins;
        std::array<long long, 256> del;
        long long min_indel = 1;
        long long min_del = 1;
    };

    explicit DistanceMetric(MetricKind k) : kind_(k) {}

    MetricKind kind_;
    std::shared_ptr<const CostTable> costs_; // WeightedEdit only
};

/// Number of mismatching positions. Throws LengthMismatch when |u| != |v|.
long long hamming_distance(std::string_view u, std::string_view v);

/// Classic dynamic-programming edit distance under the metric's costs
/// (unit costs for Edit). Throws WrongMetric for a Hamming metric.
long long edit_distance(std::string_view u, std::string_view v,
                        const DistanceMetric& metric);

/// True iff the two letter-sets intersect. Throws EmptyLetterSet.
bool letters_match(const LetterSet& a, const LetterSet& b);

} // namespace alcs
