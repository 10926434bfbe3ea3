#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fueterlab/appell.hpp"

using namespace fueterlab;

TEST_CASE("coefficients T^k_j") {
    CHECK(T_coeff(0, 0) == Rational(1));
    CHECK(T_coeff(1, 0) == Rational(2, 3));
    CHECK(T_coeff(1, 1) == Rational(1, 3));
    CHECK(T_coeff(4, 2) == Rational(2 * 3, 5 * 6));
    CHECK_THROWS_AS(T_coeff(2, 3), std::out_of_range);
    // rows sum to 1: Q_k(1) = 1
    for (int k = 0; k <= 8; ++k) {
        Rational sum = 0;
        for (int j = 0; j <= k; ++j) sum += T_coeff(k, j);
        CHECK(sum == Rational(1));
    }
}

TEST_CASE("Q_1 at the imaginary unit") {
    // Q_1 = (2/3) q + (1/3) qbar, so Q_1(i) = i/3
    QuatD v = evaluate(appell_Q(1).body, {0.0, 1.0, 0.0, 0.0});
    CHECK(v.w == doctest::Approx(0.0));
    CHECK(v.x == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(v.y) + std::abs(v.z) < 1e-15);
}

TEST_CASE("Q_k restricted to the reals is the monomial t^k") {
    for (int k = 0; k <= 6; ++k) {
        QuatD v = evaluate(appell_Q(k).body, {0.7, 0.0, 0.0, 0.0});
        CHECK(v.w == doctest::Approx(std::pow(0.7, k)).epsilon(1e-13));
        CHECK(std::abs(v.x) + std::abs(v.y) + std::abs(v.z) < 1e-14);
    }
}

TEST_CASE("negative index gives the zero polynomial") {
    CHECK(appell_Q(-1).body.is_zero());
    CHECK(gen_appell_M(2, -1).body.is_zero());
}

TEST_CASE("matrix mirror matches the expansion") {
    AppellPoly q3 = appell_Q(3);
    CHECK(to_ncpoly(q3.matrix) == q3.body);
    CHECK(q3.matrix.order() == 4);
}

TEST_CASE("Appell property under the hypercomplex derivative") {
    for (int k = 1; k <= 8; ++k) CHECK(check_appell_property(k).ok());
    CHECK_THROWS_AS(check_appell_property(0), std::domain_error);
}

TEST_CASE("Q_k is Fueter regular") {
    for (int k = 0; k <= 8; ++k) CHECK(fueter_D(appell_Q(k).body).is_zero());
}

TEST_CASE("iterated conjugate derivative") {
    for (int s = 0; s <= 6; ++s)
        for (int j = 1; j <= s; ++j) CHECK(check_Dbar_power(j, s).ok());
    CHECK_THROWS_AS(check_Dbar_power(3, 2), std::domain_error);
}

TEST_CASE("generalized polynomials satisfy the lowering identity") {
    for (int k = 1; k <= 2; ++k)
        for (int s = k + 1; s <= 6; ++s) CHECK(check_poly_appell(k, s).ok());
    CHECK_THROWS_AS(check_poly_appell(2, 2), std::domain_error);
}

TEST_CASE("M_{k,s} is x0^k Q_s") {
    QuatD q{0.5, 0.3, -0.1, 0.2};
    QuatD lhs = evaluate(gen_appell_M(2, 3).body, q);
    QuatD rhs = evaluate(appell_Q(3).body, q) * (0.5 * 0.5);
    CHECK(quat_abs(lhs - rhs) < 1e-12);
}
