#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "alcs/lengthstat.hpp"
#include "alcs/oracle.hpp"
#include "test_util.hpp"

using namespace alcs;
using testutil::thrown_code;

TEST_CASE("per-suffix occurrence table reproduces the frozen 3x4 reference") {
    const StringSet S = testutil::make_set({"TTGAC", "CGAAAT", "TGGTA"});
    const std::vector<LcpTable> tabs = lcp_tables_for(1, S, 1);
    const LengthStatTable ls = length_stat_hamming(tabs, 3, 1);
    REQUIRE(ls.rows == 3);
    REQUIRE(ls.m == 3);
    CHECK(ls.p == 3);
    CHECK(ls.i == 1);
    const int expected[3][3] = {
        {1, 1, 1},
        {1, 1, 1},
        {1, 1, 0},
    };
    for (int l = 1; l <= 3; ++l)
        for (int j = 1; j <= 3; ++j) {
            CAPTURE(l);
            CAPTURE(j);
            CHECK(static_cast<int>(ls.get(l, j)) == expected[l - 1][j - 1]);
        }
    CHECK(ls.frequency(1) == 3);
    CHECK(ls.frequency(2) == 3);
    CHECK(ls.frequency(3) == 2);
    CHECK(ls.get(3, 2));
    CHECK(ls.to_tsv() == "1\t1\t1\t3\n1\t1\t1\t3\n1\t1\t0\t2\n");
}

TEST_CASE("occurrence-table access is bounds checked") {
    const StringSet S = testutil::make_set({"ab", "ba"});
    const auto tabs = lcp_tables_for(1, S, 0);
    CHECK(thrown_code([&] { length_stat_hamming(tabs, 0, 1); }) ==
          errc::IndexOutOfRange);
    CHECK(thrown_code([&] { length_stat_hamming(tabs, 3, 1); }) ==
          errc::IndexOutOfRange);
    const LengthStatTable ls = length_stat_hamming(tabs, 1, 1);
    CHECK(thrown_code([&] { (void)ls.get(0, 1); }) == errc::IndexOutOfRange);
    CHECK(thrown_code([&] { (void)ls.get(1, 3); }) == errc::IndexOutOfRange);
    CHECK(thrown_code([&] { (void)ls.frequency(3); }) == errc::IndexOutOfRange);
}

TEST_CASE("mismatch-budget rows match the quantifier form of the definition") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        const StringSet S =
            testutil::random_set(rng, 2 + it % 3, 2, 12, it % 2 ? 2 : 4);
        const long long k = it % 3;
        const int i = 1 + it % S.m;
        const auto tabs = lcp_tables_for(i, S, k);
        const int len_i = static_cast<int>(S.strings[i - 1].size());
        for (int p = 1; p <= len_i; ++p) {
            const LengthStatTable ls = length_stat_hamming(tabs, p, i);
            REQUIRE(ls.rows == len_i - p + 1);
            for (int l = 1; l <= ls.rows; ++l) {
                int freq = 0;
                for (int j = 1; j <= S.m; ++j) {
                    bool occurs = false;
                    for (int q = 1; q <= tabs[j - 1].cols && !occurs; ++q)
                        occurs = tabs[j - 1].at(p, q) >= l;
                    REQUIRE(ls.get(l, j) == occurs);
                    freq += occurs;
                }
                REQUIRE(ls.frequency(l) == freq);
            }
        }
    }
}

TEST_CASE("anchor column is all ones and flags only ever turn off upward") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 40; ++it) {
        const StringSet S = testutil::random_set(rng, 2 + it % 3, 1, 10, 2);
        const int i = 1 + it % S.m;
        const int len_i = static_cast<int>(S.strings[i - 1].size());
        const int p = 1 + it % len_i;
        const auto tabs = lcp_tables_for(i, S, it % 3);
        const LengthStatTable ls = length_stat_hamming(tabs, p, i);
        for (int l = 1; l <= ls.rows; ++l) {
            REQUIRE(ls.get(l, i));
            for (int j = 1; j <= ls.m; ++j)
                if (l >= 2 && ls.get(l, j)) REQUIRE(ls.get(l - 1, j));
            if (l >= 2) REQUIRE(ls.frequency(l) <= ls.frequency(l - 1));
        }
        // One letter within one mismatch of anything: a full first row.
        if (it % 3 >= 1) REQUIRE(ls.frequency(1) == ls.m);
    }
}

TEST_CASE("every set flag is backed by a concrete occurrence witness") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 30; ++it) {
        const StringSet S = testutil::random_set(rng, 2, 2, 10, 2);
        const long long k = it % 3;
        const auto tabs = lcp_tables_for(1, S, k);
        const int len1 = static_cast<int>(S.strings[0].size());
        for (int p = 1; p <= len1; ++p) {
            const LengthStatTable ls = length_stat_hamming(tabs, p, 1);
            for (int l = 1; l <= ls.rows; ++l)
                for (int j = 1; j <= ls.m; ++j) {
                    if (!ls.get(l, j)) continue;
                    const std::string pat = S.strings[0].substr(p - 1, l);
                    bool witnessed = false;
                    const std::string& text = S.strings[j - 1];
                    for (size_t q = 0; q + pat.size() <= text.size(); ++q)
                        if (testutil::mismatches(
                                pat, std::string_view(text).substr(
                                         q, pat.size())) <= k) {
                            witnessed = true;
                            break;
                        }
                    REQUIRE(witnessed);
                }
        }
    }
}

TEST_CASE("edit-budget variant flags the one-substitution neighbour") {
    const DistanceMetric e = DistanceMetric::edit();
    const StringSet S = testutil::make_set({"abc", "abd"});
    std::vector<PrefixTable> tabs;
    for (const auto& s : S.strings)
        tabs.push_back(edit_prefix_table(S.strings[0], s, 1, e));
    const LengthStatTable ls = length_stat_edit(tabs, 1, 1);
    REQUIRE(ls.rows == 3);
    CHECK(ls.metric == 'E');
    CHECK(ls.get(3, 2));
    CHECK(ls.frequency(3) == 2);
}

TEST_CASE("edit-budget variant with zero budget and disjoint strings") {
    const DistanceMetric e = DistanceMetric::edit();
    const StringSet S = testutil::make_set({"abc", "xyz"});
    std::vector<PrefixTable> tabs;
    for (const auto& s : S.strings)
        tabs.push_back(edit_prefix_table(S.strings[0], s, 0, e));
    const LengthStatTable ls = length_stat_edit(tabs, 1, 1);
    for (int l = 1; l <= 3; ++l) {
        CHECK_FALSE(ls.get(l, 2));
        CHECK(ls.frequency(l) == 1); // the anchor string itself
    }
}

TEST_CASE("full and lean edit tables produce identical occurrence rows") {
    const DistanceMetric e = DistanceMetric::edit();
    std::mt19937_64 rng(34);
    for (int it = 0; it < 30; ++it) {
        const StringSet S = testutil::random_set(rng, 2 + it % 2, 2, 9, 2);
        const long long k = it % 3;
        std::vector<PrefixTable> full;
        std::vector<ReachTable> lean;
        for (const auto& s : S.strings) {
            full.push_back(edit_prefix_table(S.strings[0], s, k, e));
            lean.push_back(edit_reach_table(S.strings[0], s, k, e));
        }
        const int len1 = static_cast<int>(S.strings[0].size());
        for (int p = 1; p <= len1; ++p) {
            const LengthStatTable a = length_stat_edit(full, p, 1);
            const LengthStatTable b = length_stat_edit_reach(lean, p, 1);
            REQUIRE(a.bits == b.bits);
            REQUIRE(a.freq == b.freq);
        }
    }
}

TEST_CASE("edit-budget rows agree with the brute occurrence search") {
    const DistanceMetric e = DistanceMetric::edit();
    std::mt19937_64 rng(35);
    for (int it = 0; it < 25; ++it) {
        const StringSet S = testutil::random_set(rng, 2, 2, 8, 2);
        const long long k = it % 3;
        std::vector<ReachTable> lean;
        for (const auto& s : S.strings)
            lean.push_back(edit_reach_table(S.strings[0], s, k, e));
        const int len1 = static_cast<int>(S.strings[0].size());
        for (int p = 1; p <= len1; ++p) {
            const LengthStatTable ls = length_stat_edit_reach(lean, p, 1);
            for (int l = 1; l <= ls.rows; ++l)
                for (int j = 1; j <= ls.m; ++j) {
                    const bool brute =
                        oracle::brute_k_approx_occurs(
                            S.strings[0].substr(p - 1, l), S.strings[j - 1], k,
                            e)
                            .has_value();
                    REQUIRE(ls.get(l, j) == brute);
                }
        }
    }
}
