#include "alcs/gadgets.hpp"

#include <random>

namespace alcs::gadgets {

namespace {

void check_bit(int bit) {
    if (bit != 0 && bit != 1)
        fail(errc::ParseError, "bit images are defined for 0 and 1 only");
}

void check_index(int m, int i) {
    if (m < 2) fail(errc::TooFewStrings, "indexed images need m >= 2");
    if (i < 1 || i > m)
        fail(errc::IndexOutOfRange, "image index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(m));
}

std::string indexed_body(int m, int i) {
    std::string s;
    s += std::string(static_cast<size_t>(i - 1), '0');
    s += '1';
    s += std::string(static_cast<size_t>(m - i), '0');
    s += '1';
    s += std::string(static_cast<size_t>(m + 3), '0');
    return s;
}

// Hand-built 13-letter images for the three-string equal-length encoding.
// Pair profile: images of equal bits are at distance 2 (both 0) or 6
// (both 1), mixed bits at distance 3, for every string pair.
const char* kThreeImages[3][2] = {
    {"1111001000000", "0000000000000"},
    {"1100001000000", "1111110000000"},
    {"1110000000000", "1110001110000"},
};

std::string image_of_vector(const oracle::Vec01& v,
                            const std::string& zero_image,
                            const std::string& one_image) {
    std::string s;
    s.reserve(v.size() * zero_image.size());
    for (uint8_t bit : v) s += bit ? one_image : zero_image;
    return s;
}

size_t family_dim(const oracle::VecFamily& X) {
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

void check_q(int q) {
    if (q < 1)
        fail(errc::ThresholdOutOfRange, "separator multiplicity must be >= 1");
}

} // namespace

std::string morphism_mu(int bit) {
    check_bit(bit);
    return bit ? "0001000" : "0111000";
}

std::string morphism_tau(int bit) {
    check_bit(bit);
    return bit ? "1111000" : "0011000";
}

std::string separator7() { return "1001000"; }

std::string morphism_tau_indexed(int m, int i, int bit) {
    check_bit(bit);
    check_index(m, i);
    return (bit ? "000" : "011") + indexed_body(m, i);
}

std::string morphism_tau_indexed_alt(int m, int i, int bit) {
    check_bit(bit);
    check_index(m, i);
    return (bit ? "111" : "001") + indexed_body(m, i);
}

std::string separator_indexed(int m) {
    if (m < 2) fail(errc::TooFewStrings, "indexed separator needs m >= 2");
    std::string s = "1";
    s += std::string(static_cast<size_t>(m + 2), '0');
    s += '1';
    s += std::string(static_cast<size_t>(m + 3), '0');
    return s;
}

std::string lcss_image(int m, int i, int bit) {
    check_bit(bit);
    check_index(m, i);
    if (m == 2)
        return i == 1 ? morphism_tau_indexed(m, i, bit)
                      : morphism_tau_indexed_alt(m, i, bit);
    if (m == 3) return kThreeImages[i - 1][bit];
    return i % 2 == 1 ? morphism_tau_indexed(m, i, bit)
                      : morphism_tau_indexed_alt(m, i, bit);
}

GadgetInstance build_rklcs_instance(const oracle::VecFamily& X, int q) {
    check_q(q);
    const int d = static_cast<int>(family_dim(X));
    std::string sep;
    for (int r = 0; r < d * q; ++r) sep += separator7();
    const std::string mu0 = morphism_mu(0), mu1 = morphism_mu(1);
    const std::string tau0 = morphism_tau(0), tau1 = morphism_tau(1);

    GadgetInstance inst;
    inst.dim = d;
    inst.q = q;
    inst.k = d;
    inst.yes_at_least = (14LL * q + 7) * d;
    inst.no_below = (7LL * q + 14) * d;

    std::string s1 = sep;
    for (const auto& set : X)
        for (const auto& v : set) {
            s1 += image_of_vector(v, mu0, mu1);
            s1 += sep;
        }
    inst.strings.push_back(std::move(s1));
    for (const auto& set : X) {
        std::string s = sep;
        for (const auto& v : set) {
            s += image_of_vector(v, tau0, tau1);
            s += sep;
        }
        inst.strings.push_back(std::move(s));
    }
    inst.m = static_cast<int>(inst.strings.size());
    return inst;
}

GadgetInstance build_rklcss_instance(const oracle::VecFamily& X, int q) {
    check_q(q);
    const int d = static_cast<int>(family_dim(X));
    const int m = static_cast<int>(X.size());
    if (m < 2) fail(errc::TooFewStrings, "equal-length encoding needs >= 2 sets");
    for (const auto& set : X)
        if (set.size() != X[0].size())
            fail(errc::DimensionMismatch,
                 "equal-length encoding needs sets of equal size");

    std::string sep_unit = separator_indexed(m);
    std::string sep;
    for (int r = 0; r < d * q; ++r) sep += sep_unit;

    GadgetInstance inst;
    inst.dim = d;
    inst.q = q;
    inst.m = m;
    inst.k = 3LL * d;
    inst.yes_at_least = (2LL * m + 7) * (2LL * q + 1) * d;
    inst.no_below = (2LL * m + 7) * (q + 2LL) * d;

    for (int i = 1; i <= m; ++i) {
        const std::string img0 = lcss_image(m, i, 0);
        const std::string img1 = lcss_image(m, i, 1);
        std::string s = sep;
        for (const auto& v : X[static_cast<size_t>(i - 1)]) {
            s += image_of_vector(v, img0, img1);
            s += sep;
        }
        inst.strings.push_back(std::move(s));
    }
    return inst;
}

oracle::VecFamily random_family(int sets, int per_set, int dim, uint64_t seed) {
    if (sets < 1 || per_set < 1 || dim < 1)
        fail(errc::EmptySequence, "family shape parameters must be >= 1");
    std::mt19937_64 rng(seed);
    oracle::VecFamily X(static_cast<size_t>(sets));
    for (auto& set : X) {
        set.resize(static_cast<size_t>(per_set));
        for (auto& v : set) {
            v.resize(static_cast<size_t>(dim));
            for (auto& bit : v) bit = static_cast<uint8_t>(rng() & 1u);
        }
    }
    return X;
}

oracle::VecFamily all_ones_family(int sets, int per_set, int dim) {
    if (sets < 1 || per_set < 1 || dim < 1)
        fail(errc::EmptySequence, "family shape parameters must be >= 1");
    return oracle::VecFamily(
        static_cast<size_t>(sets),
        std::vector<oracle::Vec01>(static_cast<size_t>(per_set),
                                   oracle::Vec01(static_cast<size_t>(dim), 1)));
}

void plant_zero_vector(oracle::VecFamily& X, int set_index) {
    if (set_index < 1 || set_index > static_cast<int>(X.size()))
        fail(errc::IndexOutOfRange, "set index " + std::to_string(set_index));
    auto& set = X[static_cast<size_t>(set_index - 1)];
    if (set.empty()) fail(errc::EmptySequence, "empty vector set");
    std::fill(set[0].begin(), set[0].end(), uint8_t{0});
}

void plant_zero_everywhere(oracle::VecFamily& X) {
    for (size_t i = 0; i < X.size(); ++i)
        plant_zero_vector(X, static_cast<int>(i) + 1);
}

} // namespace alcs::gadgets
