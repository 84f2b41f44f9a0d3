#include <catch2/catch_amalgamated.hpp>

#include "whecke/literals.hpp"
#include "whecke/multisegment.hpp"

using namespace whecke;

TEST_CASE("support of multisegments") {
    CHECK(support(Multisegment{}).empty());
    const Multisegment single{{Segment{Rat(-1, 2), 2}}};
    CHECK(support(single) == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
    const Multisegment two{{Segment{Rat(0), 2}, Segment{Rat(0), 1}}};
    CHECK(support(two) == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("classes of a two-element consecutive support") {
    const auto classes = ms_classes(Weight::rho(2));  // {1/2, -1/2}
    REQUIRE(classes.size() == 2);
    // one full segment and two singletons, in the deterministic order
    bool has_full = false, has_split = false;
    for (const auto& t : classes) {
        if (t.segments().size() == 1) {
            CHECK(t.segments()[0].start == Rat(-1, 2));
            CHECK(t.segments()[0].length == 2);
            has_full = true;
        } else {
            CHECK(t.segments().size() == 2);
            has_split = true;
        }
    }
    CHECK((has_full && has_split));
}

TEST_CASE("gap-two support admits only singletons") {
    const auto classes = ms_classes(Weight(std::vector<Rat>{Rat(1), Rat(-1)}));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].segments().size() == 2);
}

TEST_CASE("rank-one support") {
    const auto classes = ms_classes(Weight::zero(1));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].segments().size() == 1);
    CHECK(classes[0].segments()[0].start == Rat(0));
}

TEST_CASE("non integral-spaced support is rejected") {
    CHECK_THROWS_AS(ms_classes(Weight(std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(0)})),
                    NotIntegralSpacedError);
}

TEST_CASE("the delta multisegment of a weight pair") {
    const Weight zero = Weight::zero(2);
    const auto diag = delta(zero, zero, 2);
    REQUIRE(diag.segments().size() == 2);
    CHECK(diag.segments()[0] == Segment{Rat(1, 2), 1});
    CHECK(diag.segments()[1] == Segment{Rat(-1, 2), 1});

    const Weight s_dot_zero = dot_action(Perm::simple(2, 1), zero);
    const auto full = delta(zero, s_dot_zero, 2);
    REQUIRE(full.segments().size() == 1);
    CHECK(full.segments()[0] == Segment{Rat(-1, 2), 2});

    CHECK(delta(zero, zero, 0).segments().empty());

    CHECK_THROWS_AS(delta(zero, zero, 1), NoTensorDatumError);
    CHECK_THROWS_AS(delta(s_dot_zero, zero, 2), NotDominantError);
}

TEST_CASE("delta of a dot-orbit weight lands in the block's classes") {
    for (std::size_t n : {2, 3}) {
        const Weight lam = Weight::zero(n);
        const auto classes = ms_classes(lam + Weight::rho(n));
        for (const auto& w : all_permutations(n)) {
            const Weight mu = dot_action(w, lam);
            if (!tensor_datum(lam, mu, static_cast<long>(n))) continue;
            const auto tau = delta(lam, mu, static_cast<long>(n));
            bool found = false;
            for (const auto& c : classes) found = found || c == tau;
            CHECK(found);
        }
    }
}

TEST_CASE("zeta weight examples") {
    const MultisegmentClass full(Multisegment{{Segment{Rat(-1, 2), 2}}});
    CHECK(zeta_weight(full) == std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});

    const MultisegmentClass split(
        Multisegment{{Segment{Rat(1, 2), 1}, Segment{Rat(-1, 2), 1}}});
    CHECK(zeta_weight(split) == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});

    CHECK(zeta_weight(MultisegmentClass{}).empty());
}

TEST_CASE("zeta weight rearranges the support") {
    for (const auto& t : ms_classes(Weight::rho(3))) {
        auto zeta = zeta_weight(t);
        std::sort(zeta.begin(), zeta.end(), std::greater<Rat>());
        CHECK(zeta == support(t));
    }
}

TEST_CASE("nilpotent representatives") {
    const MultisegmentClass singles(
        Multisegment{{Segment{Rat(1), 1}, Segment{Rat(0), 1}, Segment{Rat(-1), 1}}});
    CHECK(nilpotent_rep(singles).is_zero());

    const MultisegmentClass full2(Multisegment{{Segment{Rat(-1, 2), 2}}});
    const Mat n2 = nilpotent_rep(full2);
    CHECK(n2(0, 1) == 1);
    CHECK(n2 == Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});

    // [{0,1},{-1}]: the pair segment occupies the top block
    const MultisegmentClass mixed(Multisegment{{Segment{Rat(0), 2}, Segment{Rat(-1), 1}}});
    const Mat n3 = nilpotent_rep(mixed);
    Mat expected(3, 3);
    expected(0, 1) = 1;
    CHECK(n3 == expected);
}

TEST_CASE("multisegment literal parsing") {
    const auto tau = parse_multisegment("[(-1/2,2),(1/2,1)]");
    REQUIRE(tau.segments().size() == 2);
    CHECK(tau.segments()[0] == Segment{Rat(1, 2), 1});
    CHECK(tau.segments()[1] == Segment{Rat(-1, 2), 2});
    CHECK(parse_multisegment("[]").segments().empty());
    CHECK_THROWS_AS(parse_multisegment("[(1,0)]"), ParseError);
    CHECK_THROWS_AS(parse_multisegment("(1,2)"), ParseError);
}
