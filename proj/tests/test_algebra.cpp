#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fueterlab/quaternion.hpp"

using namespace fueterlab;

TEST_CASE("exact scalar term normalization folds square parts") {
    // sqrt(12 pi) = 2 sqrt(3) pi^{1/2}
    ExactScalar s = ExactScalar::term(1, 12, 1);
    REQUIRE(s.terms().size() == 1);
    const auto& [key, c] = *s.terms().begin();
    CHECK(key.rad == 3);
    CHECK(key.pihalf == 1);
    CHECK(c == Rational(2));
}

TEST_CASE("split_square_part") {
    auto [s, f] = split_square_part(BigInt(720));  // 720 = 12^2 * 5
    CHECK(s == 12);
    CHECK(f == 5);
    auto [s2, f2] = split_square_part(BigInt(1));
    CHECK(s2 == 1);
    CHECK(f2 == 1);
}

TEST_CASE("ring arithmetic and decidable equality") {
    ExactScalar a = ExactScalar::term(1, 2, 0);  // sqrt 2
    CHECK(a * a == ExactScalar(2));
    CHECK(a * a - ExactScalar(2) == ExactScalar());
    // sqrt6 * sqrt10 = 2 sqrt15
    CHECK(ExactScalar::term(1, 6, 0) * ExactScalar::term(1, 10, 0) ==
          ExactScalar::term(2, 15, 0));
    CHECK(ExactScalar::two_pi_pow(2) == ExactScalar::term(4, 1, 4));
    CHECK(ExactScalar::two_pi_pow(-1) * ExactScalar::two_pi_pow(1) == ExactScalar(1));
    ExactScalar mixed = a + ExactScalar::pi_pow(1);
    CHECK(mixed - a == ExactScalar::pi_pow(1));
    CHECK(mixed.terms().size() == 2);
}

TEST_CASE("inverse and pow") {
    ExactScalar t = ExactScalar::term(Rational(3, 2), 5, 2);
    CHECK(t * t.inverse() == ExactScalar(1));
    CHECK(t.pow(2) == ExactScalar::term(Rational(45, 4), 1, 4));
    CHECK(t.pow(0) == ExactScalar(1));
    CHECK(t.pow(-1) == t.inverse());
    CHECK_THROWS_AS((t + ExactScalar(1)).inverse(), std::domain_error);
}

TEST_CASE("square roots of single terms") {
    CHECK(scalar_sqrt_term(ExactScalar(Rational(1, 2))) ==
          ExactScalar::term(Rational(1, 2), 2, 0));
    CHECK(scalar_sqrt_term(ExactScalar::two_pi_pow(2)) == ExactScalar::two_pi_pow(1));
    // sqrt((2pi)^3 * 2) = 4 pi^{3/2}
    CHECK(scalar_sqrt_term(ExactScalar::two_pi_pow(3) * ExactScalar(2)) ==
          ExactScalar::term(4, 1, 3));
    CHECK_THROWS_AS(scalar_sqrt_term(ExactScalar(-1)), std::domain_error);
    CHECK_THROWS_AS(scalar_sqrt_term(ExactScalar::term(1, 2, 0)), std::domain_error);
}

TEST_CASE("is_rational and doubles") {
    CHECK(ExactScalar(Rational(7, 3)).is_rational());
    CHECK(!ExactScalar::pi_pow(1).is_rational());
    CHECK(ExactScalar(Rational(7, 3)).rational_value() == Rational(7, 3));
    CHECK(ExactScalar::two_pi_pow(1).to_double() ==
          doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK(scalar_sqrt_term(ExactScalar(Rational(1, 2))).to_double() ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("quaternion units multiply as Hamilton products") {
    QuatE i = QuatE::unit_i(), j = QuatE::unit_j(), k = QuatE::unit_k();
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == -k);
    CHECK(i * i == -QuatE::real(ExactScalar(1)));
    CHECK((i * j) * k == -QuatE::real(ExactScalar(1)));
}

TEST_CASE("conjugation and norm") {
    QuatE q{ExactScalar(1), ExactScalar(2), ExactScalar(3), ExactScalar(4)};
    CHECK(q * q.conj() == QuatE::real(ExactScalar(30)));
    CHECK(q.norm_sq() == ExactScalar(30));
    CHECK((q + q.conj()) == QuatE::real(ExactScalar(2)));
}

TEST_CASE("float exponential") {
    QuatD e1 = quat_exp({0.0, M_PI, 0.0, 0.0});
    CHECK(e1.w == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(e1.x) < 1e-12);
    QuatD e0 = quat_exp({0.7, 0.0, 0.0, 0.0});
    CHECK(e0.w == doctest::Approx(std::exp(0.7)));
    // |e^q| = e^{Re q}
    QuatD ev = quat_exp({0.3, 0.4, -0.2, 0.1});
    CHECK(quat_abs(ev) == doctest::Approx(std::exp(0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(quat_exp({std::nan(""), 0, 0, 0}), std::domain_error);
}
