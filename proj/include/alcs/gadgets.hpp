#pragma once
/**
 * @file gadgets.hpp
 * @brief Builders that encode orthogonal-vector search instances as string
 *        sets whose approximate-LCS answers land above or below a length
 *        threshold exactly when the vector instance is a yes or a no.
 *
 * Two encodings are provided. The mismatch-budget encoding maps a family of
 * vector sets to m unequal-length binary strings with budget k = d (the
 * vector dimension). The equal-length substring-set encoding maps the family
 * to m strings, one per set, with budget k = 3d, using per-string image
 * alphabets of length 2m+7.
 *
 * The two-role image pair reproduces the full cross-distance profile
 * (3, 5, 2, 2, 3, 3) for every index pair, which is exactly what the
 * equal-length encoding needs for m = 2. No assignment of one image pair
 * per string can keep all pairwise cross distances odd for m >= 3 (the
 * pairwise distances of three binary strings cannot all be odd), so for
 * m = 3 a hand-built image table with a different, verified distance
 * profile is used instead. For m >= 4 the builder alternates the two roles;
 * the threshold guarantee is only claimed for m <= 3.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "alcs/oracle.hpp"

namespace alcs::gadgets {

/// 7-letter bit images for the unequal-length encoding.
std::string morphism_mu(int bit);  ///< 0 -> 0111000, 1 -> 0001000
std::string morphism_tau(int bit); ///< 0 -> 0011000, 1 -> 1111000
/// 7-letter separator block, distinct from every bit image.
std::string separator7(); ///< 1001000

/// (2m+7)-letter bit images for the equal-length encoding, one-hot in the
/// string index. First role: prefixes 011 (bit 0) / 000 (bit 1).
std::string morphism_tau_indexed(int m, int i, int bit);
/// Second role: prefixes 001 (bit 0) / 111 (bit 1).
std::string morphism_tau_indexed_alt(int m, int i, int bit);
/// (2m+7)-letter separator block: 1 0^{m+2} 1 0^{m+3}.
std::string separator_indexed(int m);

/// The image actually used for string i in the equal-length encoding:
/// the two roles for m = 2, a hand-built 13-letter table for m = 3, and
/// role alternation by index parity for m >= 4.
std::string lcss_image(int m, int i, int bit);

/// A string encoding of a vector instance plus its decision thresholds.
struct GadgetInstance {
    std::vector<std::string> strings;
    long long k = 0;
    int m = 0;   ///< number of strings
    int dim = 0; ///< vector dimension d
    int q = 1;   ///< separator multiplicity
    /// Encodings of yes-instances answer at least this...
    long long yes_at_least = 0;
    /// ...and encodings of no-instances answer strictly below this.
    /// The two bounds coincide at q = 1.
    long long no_below = 0;
};

/// Unequal-length encoding: string 1 carries the first image of every
/// vector in the family; string j+1 carries the second image of set j.
/// m = (number of sets) + 1, k = dim. Throws DimensionMismatch,
/// EmptySequence, ThresholdOutOfRange (q < 1).
GadgetInstance build_rklcs_instance(const oracle::VecFamily& X, int q = 1);

/// Equal-length encoding: string i carries the images of set i under its
/// own indexed image alphabet. Requires at least two sets of equal size
/// (DimensionMismatch otherwise); k = 3 * dim.
GadgetInstance build_rklcss_instance(const oracle::VecFamily& X, int q = 1);

/// Uniformly random 0/1 family: `sets` sets of `per_set` vectors each.
oracle::VecFamily random_family(int sets, int per_set, int dim, uint64_t seed);
/// All-ones family: every dot product is dim, so every predicate answers no.
oracle::VecFamily all_ones_family(int sets, int per_set, int dim);
/// Overwrites the first vector of the given set (1-based) with zeros.
void plant_zero_vector(oracle::VecFamily& X, int set_index);
/// Overwrites the first vector of every set with zeros.
void plant_zero_everywhere(oracle::VecFamily& X);

} // namespace alcs::gadgets
