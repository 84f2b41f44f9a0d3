#include <catch2/catch_amalgamated.hpp>

#include "whecke/weyl.hpp"

using namespace whecke;

TEST_CASE("length counts inversions") {
    CHECK(Perm::identity(4).length() == 0);
    CHECK(Perm::longest(4).length() == 6);
    CHECK(Perm::from_one_line({3, 1, 4, 2}).length() == 3);
}

TEST_CASE("reduced words multiply back") {
    for (const auto& w : all_permutations(4)) {
        Perm acc = Perm::identity(4);
        for (const auto i : w.reduced_word()) acc = acc * Perm::simple(4, i);
        CHECK(acc == w);
        CHECK(w.reduced_word().size() == w.length());
    }
}

TEST_CASE("bruhat order basics") {
    const Perm e = Perm::identity(3);
    for (const auto& w : all_permutations(3)) {
        CHECK(bruhat_leq(e, w));
        if (!(w == e)) CHECK_FALSE(bruhat_leq(w, e));
    }
    const Perm s1 = Perm::simple(3, 1);
    const Perm s2 = Perm::simple(3, 2);
    CHECK(bruhat_leq(s1, s1 * s2));
    CHECK_FALSE(bruhat_leq(s2 * s1, s1 * s2));
}

TEST_CASE("double cosets of trivial parabolics are singletons") {
    const auto cosets = double_cosets(ParabolicSet{}, ParabolicSet{}, 3);
    CHECK(cosets.size() == 6);
    for (const auto& c : cosets) CHECK(c.size == 1);
}

TEST_CASE("whole-group coset at m=2") {
    const auto cosets = double_cosets(ParabolicSet{{1}}, ParabolicSet{{1}}, 2);
    REQUIRE(cosets.size() == 1);
    CHECK(cosets[0].longest_rep == Perm::simple(2, 1));
    CHECK(cosets[0].size == 2);
}

TEST_CASE("W_1 \\ S_3 / W_1 by direct orbit enumeration") {
    // {e,s1} and {s2, s1s2, s2s1, s1s2s1}: two cosets, longest reps of
    // lengths 1 and 3.
    const auto cosets = double_cosets(ParabolicSet{{1}}, ParabolicSet{{1}}, 3);
    REQUIRE(cosets.size() == 2);
    std::size_t total = 0;
    std::vector<std::size_t> lengths;
    for (const auto& c : cosets) {
        total += c.size;
        lengths.push_back(c.longest_rep.length());
    }
    CHECK(total == 6);
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<std::size_t>{1, 3});
}

TEST_CASE("one-sided cosets W_1 \\ S_3 have longest reps of lengths 1,2,3") {
    const auto cosets = double_cosets(ParabolicSet{{1}}, ParabolicSet{}, 3);
    REQUIRE(cosets.size() == 3);
    std::vector<std::size_t> lengths;
    for (const auto& c : cosets) lengths.push_back(c.longest_rep.length());
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("coset sizes always partition the group") {
    for (std::size_t m : {3, 4}) {
        const std::size_t order = m == 3 ? 6 : 24;
        const std::vector<ParabolicSet> parabolics = {
            ParabolicSet{}, ParabolicSet{{1}}, ParabolicSet{{2}},
            ParabolicSet{{1, 2}}};
        for (const auto& left : parabolics)
            for (const auto& right : parabolics) {
                std::size_t total = 0;
                for (const auto& c : double_cosets(left, right, m)) total += c.size;
                CHECK(total == order);
            }
    }
}

TEST_CASE("longest_in_coset examples") {
    CHECK(longest_in_coset(Perm::identity(3), ParabolicSet{}, ParabolicSet{}) ==
          Perm::identity(3));
    CHECK(longest_in_coset(Perm::identity(2), ParabolicSet{{1}}, ParabolicSet{}) ==
          Perm::simple(2, 1));
    const Perm s1 = Perm::simple(3, 1);
    const Perm s2 = Perm::simple(3, 2);
    CHECK(longest_in_coset(s2, ParabolicSet{{1}}, ParabolicSet{{1}}) == s1 * s2 * s1);
}

TEST_CASE("longest_in_coset is constant on cosets and idempotent") {
    const ParabolicSet left{{1}};
    const ParabolicSet right{{2}};
    for (const auto& w : all_permutations(4)) {
        const Perm longest = longest_in_coset(w, left, right);
        CHECK(longest_in_coset(longest, left, right) == longest);
        for (const auto& u : double_coset_elements(w, left, right))
            CHECK(longest_in_coset(u, left, right) == longest);
    }
}

TEST_CASE("minimal coset representatives and factorization") {
    const ParabolicSet p{{1, 3}};
    const auto reps = min_coset_reps(p, 4);
    CHECK(reps.size() == 6);  // 24 / |S2 x S2|
    for (const auto& w : all_permutations(4)) {
        const auto [rep, sign] = min_rep_factor(w, p);
        // rep is a minimal representative of the same coset
        bool found = false;
        for (const auto& r : reps) found = found || r == rep;
        CHECK(found);
        const Perm x = rep.inverse() * w;
        CHECK((x.length() % 2 == 0 ? 1 : -1) == sign);
        CHECK(rep.length() + x.length() == w.length());
    }
}
