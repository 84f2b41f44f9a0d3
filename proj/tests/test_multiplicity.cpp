#include <catch2/catch_amalgamated.hpp>

#include "whecke/multiplicity.hpp"

using namespace whecke;

TEST_CASE("whittaker multiplicity matrix at sl_2") {
    const Weight zero = Weight::zero(2);
    BlockParams bp{2, zero, ParabolicSet{}};
    KLTable kl(2);
    const auto m = whittaker_mult_matrix(bp, kl);
    REQUIRE(m.size() == 2);
    CHECK(m.entries == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    CHECK(m.coset_params[0].longest_rep.is_identity());
    CHECK(m.coset_params[1].longest_rep == Perm::simple(2, 1));
    CHECK(m.unitriangular());
}

TEST_CASE("whittaker multiplicity matrix at regular sl_3 is all ones above Bruhat") {
    const Weight zero = Weight::zero(3);
    BlockParams bp{3, zero, ParabolicSet{}};
    KLTable kl(3);
    const auto m = whittaker_mult_matrix(bp, kl);
    REQUIRE(m.size() == 6);
    CHECK(m.unitriangular());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const bool leq = kl.leq(m.coset_params[i].longest_rep, m.coset_params[j].longest_rep);
            CHECK(m.entries[i][j] == (leq ? 1 : 0));
        }
}

TEST_CASE("hecke multiplicity matrix at sl_2") {
    const Weight zero = Weight::zero(2);
    BlockParams bp{2, zero, ParabolicSet{}};
    const auto m = hecke_mult_matrix(bp);
    REQUIRE(m.size() == 2);
    CHECK(m.entries == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    // row 0 is the two-singleton class, row 1 the full segment
    CHECK(m.ms_params[0].segments().size() == 2);
    CHECK(m.ms_params[1].segments().size() == 1);
}

TEST_CASE("a block with a single class gives the 1x1 identity") {
    const Weight gap = Weight(std::vector<Rat>{Rat(1), Rat(-1)}) - Weight::rho(2);
    BlockParams bp{2, gap, ParabolicSet{}};
    const auto m = hecke_mult_matrix(bp);
    REQUIRE(m.size() == 1);
    CHECK(m.entries[0][0] == 1);
}

TEST_CASE("hecke multiplicity matrix at regular sl_3") {
    const Weight zero = Weight::zero(3);
    BlockParams bp{3, zero, ParabolicSet{}};
    const auto m = hecke_mult_matrix(bp);
    REQUIRE(m.size() == 4);
    CHECK(m.unitriangular());
    // standards of dims 6,3,3,1 with heads of dims 1,2,2,1
    std::vector<std::size_t> std_dims;
    for (const auto& tau : m.ms_params)
        std_dims.push_back(induced_standard(tau, 3).dim);
    CHECK(std_dims == std::vector<std::size_t>{6, 3, 3, 1});
}

TEST_CASE("verify_mult_equal on the sl_2 block") {
    const Weight zero = Weight::zero(2);
    BlockParams bp{2, zero, stabilizer(zero)};
    KLTable kl(2);
    const auto report = verify_mult_equal(bp, kl);
    CHECK(report.equal);
    CHECK(report.whittaker.entries == report.hecke.entries);
    CHECK(report.mismatches.empty());
}

TEST_CASE("verify_mult_equal on the regular sl_3 block") {
    const Weight zero = Weight::zero(3);
    BlockParams bp{3, zero, stabilizer(zero)};
    KLTable kl(3);
    const auto report = verify_mult_equal(bp, kl);
    CHECK(report.equal);
    CHECK(report.hecke.size() == 4);
    CHECK(report.whittaker.size() == 6);
}

TEST_CASE("verify_mult_equal on the singular block lambda+rho = (1,1,0)") {
    const Weight lam = Weight(std::vector<Rat>{Rat(1), Rat(1), Rat(0)}) - Weight::rho(3);
    BlockParams bp{3, lam, stabilizer(lam)};
    KLTable kl(3);
    const auto report = verify_mult_equal(bp, kl);
    CHECK(report.equal);
    REQUIRE(report.hecke.size() == 2);
    CHECK(report.hecke.entries == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    CHECK(report.whittaker.size() == 2);
}

TEST_CASE("verify_mult_equal rejects a mismatched eta") {
    const Weight zero = Weight::zero(3);
    BlockParams bp{3, zero, ParabolicSet{{1}}};
    KLTable kl(3);
    CHECK_THROWS_AS(verify_mult_equal(bp, kl), HypothesisViolatedError);
}

TEST_CASE("irreducible image table at sl_2") {
    const Weight zero = Weight::zero(2);
    BlockParams bp{2, zero, stabilizer(zero)};
    KLTable kl(2);
    const auto report = irr_image_table(bp, kl);
    CHECK(report.all_passed());
    REQUIRE(report.rows.size() == 2);
    for (const auto& row : report.rows) {
        CHECK(row.psi_image.has_value());
        CHECK(row.matches_expected);
    }
}

TEST_CASE("irreducible image table at regular sl_3 covers the zero cosets") {
    const Weight zero = Weight::zero(3);
    BlockParams bp{3, zero, stabilizer(zero)};
    KLTable kl(3);
    const auto report = irr_image_table(bp, kl);
    CHECK(report.all_passed());
    REQUIRE(report.rows.size() == 6);
    std::size_t off_image = 0;
    for (const auto& row : report.rows) {
        if (!row.psi_image) {
            ++off_image;
            CHECK(row.functor_dim == 0);
            bool zero_vector = true;
            for (const auto c : row.irr_class_vector) zero_vector = zero_vector && c == 0;
            CHECK(zero_vector);
        }
    }
    CHECK(off_image == 2);
}

TEST_CASE("irreducible image table on the singular block") {
    const Weight lam = Weight(std::vector<Rat>{Rat(1), Rat(1), Rat(0)}) - Weight::rho(3);
    BlockParams bp{3, lam, stabilizer(lam)};
    KLTable kl(3);
    const auto report = irr_image_table(bp, kl);
    CHECK(report.all_passed());
}
