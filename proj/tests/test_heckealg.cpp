#include <catch2/catch_amalgamated.hpp>

#include "whecke/heckealg.hpp"

using namespace whecke;

TEST_CASE("the degree-one commutation relation") {
    // s_1 eps_1 = eps_2 s_1 + 1 on two strands
    const auto lhs = mul(HeckeElt::group(Perm::simple(2, 1)), HeckeElt::eps(2, 1));
    const auto rhs =
        mul(HeckeElt::eps(2, 2), HeckeElt::group(Perm::simple(2, 1))) + HeckeElt::one(2);
    CHECK(lhs == rhs);
}

TEST_CASE("simple reflections square to one") {
    const auto s = HeckeElt::group(Perm::simple(2, 1));
    CHECK(mul(s, s) == HeckeElt::one(2));
}

TEST_CASE("symmetric polynomials commute with reflections") {
    const auto s = HeckeElt::group(Perm::simple(2, 1));
    const auto sym = mul(HeckeElt::eps(2, 1), HeckeElt::eps(2, 2));
    CHECK(mul(s, sym) == mul(sym, s));
    const auto power_sum = mul(HeckeElt::eps(2, 1), HeckeElt::eps(2, 1)) +
                           mul(HeckeElt::eps(2, 2), HeckeElt::eps(2, 2));
    CHECK(mul(s, power_sum) == mul(power_sum, s));
}

TEST_CASE("multiplication is associative on sampled elements") {
    const std::size_t l = 3;
    const std::vector<HeckeElt> sample = {
        HeckeElt::group(Perm::simple(l, 1)),
        HeckeElt::group(Perm::simple(l, 2)),
        HeckeElt::eps(l, 1),
        HeckeElt::eps(l, 3),
        mul(HeckeElt::group(Perm::simple(l, 1)), HeckeElt::eps(l, 2)) + HeckeElt::one(l),
    };
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample) CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
}

TEST_CASE("braid relation in the group part") {
    const auto s1 = HeckeElt::group(Perm::simple(3, 1));
    const auto s2 = HeckeElt::group(Perm::simple(3, 2));
    CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));
}

TEST_CASE("divided differences satisfy the twisted Leibniz shape") {
    // D(p q) = D(p) s(q) + p D(q)
    const EpsPoly p = EpsPoly::variable(2, 1) * EpsPoly::variable(2, 1);
    const EpsPoly q = EpsPoly::variable(2, 2);
    const Perm s = Perm::simple(2, 1);
    const EpsPoly lhs = (p * q).divided_difference(1);
    const EpsPoly rhs = p.divided_difference(1) * q.permuted(s) + p * q.divided_difference(1);
    CHECK(lhs == rhs);
}
