#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "alcs/oracle.hpp"
#include "test_util.hpp"

using namespace alcs;
using namespace alcs::oracle;
using testutil::thrown_code;

TEST_CASE("window scan finds the one-mismatch occurrence and its location") {
    const auto hit = brute_k_approx_occurs("GAC", "CGAAAT", 1,
                                           DistanceMetric::hamming());
    REQUIRE(hit.has_value());
    CHECK(hit->start == 2);
    CHECK(hit->end == 4); // the window holding GAA
    CHECK(hit->distance == 1);

    CHECK_FALSE(brute_k_approx_occurs("GAC", "TGGTA", 1,
                                      DistanceMetric::hamming())
                    .has_value());

    const auto self =
        brute_k_approx_occurs("TGGTA", "TGGTA", 0, DistanceMetric::hamming());
    REQUIRE(self.has_value());
    CHECK(self->start == 1);
    CHECK(self->end == 5);
    CHECK(self->distance == 0);
}

TEST_CASE("substring scan under the edit budget reports exact and empty hits") {
    const DistanceMetric e = DistanceMetric::edit();
    const auto exact = brute_k_approx_occurs("abc", "xabcy", 0, e);
    REQUIRE(exact.has_value());
    CHECK(exact->start == 2);
    CHECK(exact->end == 4);
    CHECK(exact->distance == 0);

    // When deleting the whole candidate fits the budget, the empty
    // substring (start > end) is the first hit.
    const auto empty = brute_k_approx_occurs("a", "zzz", 1, e);
    REQUIRE(empty.has_value());
    CHECK(empty->start > empty->end);
    CHECK(empty->distance == 1);

    CHECK_FALSE(brute_k_approx_occurs("ab", "zzz", 1, e).has_value());
}

TEST_CASE("restricted reference solver answers the four-string sample") {
    const StringSet S =
        testutil::make_set({"aabcf", "fabcd", "dgiabc", "ahabch"});
    const auto sol = brute_rkt_lcs(S, 2, 3, DistanceMetric::hamming());
    REQUIRE(sol.has_value());
    CHECK(sol->length == 5);
    CHECK(sol->answer == "aabcf");
    CHECK(sol->source_index == 1);
    CHECK(sol->source_offset == 1);
    CHECK(sol->support == 3);
    CHECK(sol->members == std::vector<int>{1, 2, 4});

    const auto four = brute_rkt_lcs(S, 2, 4, DistanceMetric::hamming());
    REQUIRE(four.has_value());
    CHECK(four->length == 4);

    const StringSet pair = testutil::make_set({"abcd", "abcd"});
    const auto full = brute_rkt_lcs(pair, 0, 2, DistanceMetric::hamming());
    REQUIRE(full.has_value());
    CHECK(full->length == 4);

    const StringSet disjoint = testutil::make_set({"ab", "cd"});
    CHECK_FALSE(brute_rkt_lcs(disjoint, 0, 2, DistanceMetric::hamming())
                    .has_value());
}

TEST_CASE("restricted reference solver enforces its budgets and parameters") {
    const StringSet S = testutil::make_set({"ab", "ba"});
    CHECK(thrown_code([&] {
              brute_rkt_lcs(S, -1, 2, DistanceMetric::hamming());
          }) == errc::NegativeBudget);
    CHECK(thrown_code([&] {
              brute_rkt_lcs(S, 1, 3, DistanceMetric::hamming());
          }) == errc::ThresholdOutOfRange);

    OracleBudget tiny;
    tiny.max_ell = 4;
    const StringSet big = testutil::make_set({"aaaaa", "bbbbb"});
    CHECK(thrown_code([&] {
              brute_rkt_lcs(big, 1, 2, DistanceMetric::hamming(), tiny);
          }) == errc::BudgetExceeded);
}

TEST_CASE("unrestricted reference solver can beat the substring restriction") {
    const StringSet S = testutil::make_set({"ab", "ba"});
    const auto free = brute_kt_lcs(S, 1, 2, DistanceMetric::hamming());
    REQUIRE(free.has_value());
    CHECK(free->length == 2);
    CHECK(free->answer == "aa"); // within one mismatch of both strings
    const auto restricted = brute_rkt_lcs(S, 1, 2, DistanceMetric::hamming());
    REQUIRE(restricted.has_value());
    CHECK(restricted->length == 1); // "ab" and "ba" differ in both positions

    // With no budget the two variants coincide here.
    const auto free0 = brute_kt_lcs(S, 0, 2, DistanceMetric::hamming());
    const auto restricted0 = brute_rkt_lcs(S, 0, 2, DistanceMetric::hamming());
    REQUIRE(free0.has_value());
    REQUIRE(restricted0.has_value());
    CHECK(free0->length == restricted0->length);
}

TEST_CASE("unrestricted search over a one-letter alphabet hits window limits") {
    const StringSet S = testutil::make_set({"aaa", "aaaa"});
    const auto sol = brute_kt_lcs(S, 1, 2, DistanceMetric::hamming());
    REQUIRE(sol.has_value());
    CHECK(sol->length == 3); // the shorter string has no length-4 window
}

TEST_CASE("unrestricted search refuses exponential enumerations over budget") {
    const StringSet S = testutil::make_set({"abcdefgh", "hgfedcba"});
    OracleBudget tiny;
    tiny.max_enum = 100; // 8^2 fits but 8^3 does not
    CHECK(thrown_code([&] {
              brute_kt_lcs(S, 1, 2, DistanceMetric::hamming(), tiny);
          }) == errc::BudgetExceeded);
}

TEST_CASE("unrestricted answers never lose to restricted ones") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 40; ++it) {
        const StringSet S = testutil::random_set(rng, 2 + it % 2, 1, 6, 2);
        const long long k = it % 3;
        const int t = 1 + it % S.m;
        const auto free = brute_kt_lcs(S, k, t, DistanceMetric::hamming());
        const auto restricted = brute_rkt_lcs(S, k, t, DistanceMetric::hamming());
        REQUIRE(free.has_value());     // k >= 0 and a length-1 candidate al-
        REQUIRE(restricted.has_value() == // ways exists over the used letters
                (k > 0 || restricted.has_value()));
        if (restricted) REQUIRE(free->length >= restricted->length);
    }
}

TEST_CASE("equal-length set reference finds the frozen three-string answer") {
    const StringSet S = testutil::make_set({"abc", "abd", "azc"});
    const auto sol = brute_rk_lcss(S, 1);
    REQUIRE(sol.has_value());
    CHECK(sol->length == 2);
    CHECK(sol->members == std::vector<std::string>{"ab", "ab", "az"});
    CHECK(sol->offsets == std::vector<int>{1, 1, 1});

    const StringSet same = testutil::make_set({"abcd", "abcd", "abcd"});
    const auto full = brute_rk_lcss(same, 0);
    REQUIRE(full.has_value());
    CHECK(full->length == 4);
}

TEST_CASE("fast feasibility check agrees with the brute set search everywhere") {
    std::mt19937_64 rng(62);
    for (int it = 0; it < 50; ++it) {
        const StringSet S = testutil::random_set(rng, 2 + it % 2, 1, 10, 2);
        const long long k = it % 3;
        const auto brute = brute_rk_lcss(S, k);
        const int best = brute ? brute->length : 0;
        int min_len = S.strings[0].size();
        for (const auto& s : S.strings)
            min_len = std::min<int>(min_len, s.size());
        for (int L = 1; L <= min_len; ++L) {
            CAPTURE(it);
            CAPTURE(L);
            REQUIRE(rk_lcss_exists_at(S, k, L) == (L <= best));
        }
    }
}

TEST_CASE("pair orthogonality over one vector set") {
    CHECK(has_ov({{1, 0}, {0, 1}}));
    CHECK_FALSE(has_ov({{1, 1}, {1, 0}}));
    CHECK_FALSE(has_ov({{1, 0}})); // a pair needs two distinct indices
    CHECK(has_ov({{0, 0}, {0, 0}}));
    CHECK(thrown_code([] { has_ov({{1, 0}, {1}}); }) == errc::DimensionMismatch);
    CHECK(thrown_code([] { has_ov({}); }) == errc::EmptySequence);
}

TEST_CASE("anchored orthogonality across a family of sets") {
    // 10 in the first set is orthogonal to 01 in the second.
    const auto hit = has_m_ov({{{1, 0}}, {{0, 1}}});
    REQUIRE(hit.has_value());
    CHECK(hit->set_index == 1);
    CHECK(hit->vector_index == 1);

    // The first qualifying anchor in (set, vector) order is reported.
    const auto second = has_m_ov({{{1, 1}, {1, 0}}, {{0, 1}}});
    REQUIRE(second.has_value());
    CHECK(second->set_index == 1);
    CHECK(second->vector_index == 2);

    // No anchor works when every cross pair shares a coordinate.
    CHECK_FALSE(has_m_ov({{{1, 1}}, {{1, 0}}, {{0, 1}}}).has_value());

    CHECK(thrown_code([] { return has_m_ov({{{1, 0}}, {}}); }) ==
          errc::EmptySequence);
    CHECK(thrown_code([] { return has_m_ov({}); }) == errc::EmptySequence);
    CHECK(thrown_code([] { return has_m_ov({{{1, 0}}, {{1, 0, 1}}}); }) ==
          errc::DimensionMismatch);
}

TEST_CASE("zero-product tuples versus pairwise-orthogonal tuples") {
    // One unit vector per set: pairwise orthogonal, so both predicates hold.
    const VecFamily units = {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}};
    CHECK(has_complete_k_ov(units));
    CHECK(has_k_ov(units));

    // A zero coordinatewise product without pairwise orthogonality.
    const VecFamily overlap = {{{1, 1, 0}}, {{0, 1, 1}}, {{1, 0, 1}}};
    CHECK(has_k_ov(overlap));
    CHECK_FALSE(has_complete_k_ov(overlap));

    const VecFamily ones = {{{1, 1}}, {{1, 1}}};
    CHECK_FALSE(has_k_ov(ones));
    CHECK_FALSE(has_complete_k_ov(ones));

    const VecFamily wide = {{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
    CHECK(thrown_code([&] { has_k_ov(wide, 1); }) == errc::BudgetExceeded);
    CHECK(thrown_code([&] { has_complete_k_ov(wide, 3); }) ==
          errc::BudgetExceeded);
    CHECK(thrown_code([] { has_k_ov({{{1}}, {}}); }) == errc::EmptySequence);
    CHECK(thrown_code([] {
              has_complete_k_ov({{{1, 0}}, {{1}}});
          }) == errc::DimensionMismatch);
}

TEST_CASE("pairwise-orthogonal tuples always have a zero product") {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int it = 0; it < 300; ++it) {
        const int sets = 2 + it % 2;
        const int per = 1 + it % 3;
        const int dim = 1 + it % 3;
        VecFamily X(static_cast<size_t>(sets));
        for (auto& set : X)
            for (int v = 0; v < per; ++v) {
                Vec01 vec(static_cast<size_t>(dim));
                for (auto& b : vec) b = static_cast<uint8_t>(bit(rng));
                set.push_back(vec);
            }
        if (has_complete_k_ov(X)) REQUIRE(has_k_ov(X));
    }
}
