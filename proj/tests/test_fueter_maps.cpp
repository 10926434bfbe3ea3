#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fueterlab/fueter_maps.hpp"

using namespace fueterlab;

namespace {
QuatE one() { return QuatE::real(ExactScalar(1)); }
}  // namespace

TEST_CASE("map_C on qbar q^2") {
    // C(qbar q^2) = -4 M_{1,0} = -4 x0
    NCPoly img = map_C(SliceCoeffMatrix::basis(2, 1, 2, one()));
    CHECK(img == NCPoly::variable(0).scalar_mul(ExactScalar(-4)));
}

TEST_CASE("map_tau on qbar q^2 at order 2") {
    NCPoly img = map_tau(SliceCoeffMatrix::basis(2, 1, 2, one()));
    CHECK(img == NCPoly::constant(QuatE::real(ExactScalar(-8))));
}

TEST_CASE("closed-form actions across the grid") {
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= 6; ++j) {
                CHECK(check_C_action(n, k, j).ok());
                CHECK(check_tau_action(n, k, j).ok());
            }
    CHECK_THROWS_AS(check_C_action(1, 2, 3), std::domain_error);
}

TEST_CASE("low-degree coefficients vanish under both maps") {
    for (int k = 0; k <= 2; ++k)
        for (int j = 0; j <= 1; ++j) {
            CHECK(map_C(SliceCoeffMatrix::basis(3, k, j, one())).is_zero());
            CHECK(map_tau(SliceCoeffMatrix::basis(3, k, j, one())).is_zero());
        }
}

TEST_CASE("intertwining D^n C = 2^{-n} tau") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (int n = 0; n <= 3; ++n)
        for (int rep = 0; rep < 4; ++rep) {
            SliceCoeffMatrix f(n + 1);
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= 5; ++j)
                    f.set_coeff(k, j,
                                QuatE{ExactScalar(coin(rng)), ExactScalar(coin(rng)),
                                      ExactScalar(coin(rng)), ExactScalar(coin(rng))});
            CHECK(check_relation_R1(f).ok());
        }
}

TEST_CASE("D^n hits M_{n,s} with factor n!") {
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 2; j <= 6; ++j) CHECK(check_Dn_M(n, k, j).ok());
    CHECK_THROWS_AS(check_Dn_M(1, 0, 1), std::domain_error);
}

TEST_CASE("series range expansions") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (int n = 0; n <= 2; ++n) {
        std::vector<std::vector<QuatE>> alpha(n + 1);
        for (auto& row : alpha)
            for (int j = 0; j <= 5; ++j)
                row.push_back(QuatE{ExactScalar(coin(rng)), ExactScalar(coin(rng)),
                                    ExactScalar(coin(rng)), ExactScalar(coin(rng))});
        CHECK(check_range_C_series(alpha).ok());
        auto tau_rep = check_range_tau_series(alpha).ok();
        CHECK(tau_rep);
    }
}

TEST_CASE("the two tau coefficient readings are computed side by side") {
    // alpha with mass only in the top row: readings coincide
    std::vector<std::vector<QuatE>> top(2);
    top[1] = {QuatE{}, QuatE{}, QuatE{}, one()};
    auto r1 = range_tau_series_coeffs(top);
    CHECK(r1.readings_agree);
    // mass in a lower row: the row-sum reading differs
    std::vector<std::vector<QuatE>> low(2);
    low[0] = {QuatE{}, QuatE{}, QuatE{}, one()};
    auto r2 = range_tau_series_coeffs(low);
    CHECK(!r2.readings_agree);
    CHECK(check_range_tau_series(low).status == VerificationReport::Status::flagged);
}

TEST_CASE("coefficient transform of the C range") {
    std::vector<std::vector<QuatE>> alpha(1);
    alpha[0] = {QuatE{}, QuatE{}, one()};  // q^2
    auto beta = range_C_series_coeffs(alpha);
    REQUIRE(beta[0].size() == 1);
    CHECK(beta[0][0] == one() * ExactScalar(-4));  // -2*1*2
}
