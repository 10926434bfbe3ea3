#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fueterlab/slicepoly.hpp"

using namespace fueterlab;

namespace {
QuatE one() { return QuatE::real(ExactScalar(1)); }
}  // namespace

TEST_CASE("series trims and indexes") {
    SliceSeries s({QuatE{}, QuatE::unit_i(), QuatE{}});
    CHECK(s.trunc_degree() == 1);
    CHECK(s.coeff(1) == QuatE::unit_i());
    CHECK(s.coeff(5).is_zero());
    CHECK(SliceSeries{}.is_zero());
}

TEST_CASE("derivative uses the power rule") {
    // d/dq (q^3 i) = 3 q^2 i
    SliceSeries s = SliceSeries::power(3, QuatE::unit_i());
    SliceSeries d = slice_derivative(s);
    CHECK(d == SliceSeries::power(2, QuatE::unit_i() * ExactScalar(3)));
    CHECK(slice_derivative(SliceSeries::power(0, one())).is_zero());
}

TEST_CASE("star product is the Cauchy product with order kept") {
    // (q i) * (q j) = q^2 i j = q^2 k
    SliceSeries a = SliceSeries::power(1, QuatE::unit_i());
    SliceSeries b = SliceSeries::power(1, QuatE::unit_j());
    CHECK(star_product(a, b) == SliceSeries::power(2, QuatE::unit_k()));
    CHECK(star_product(b, a) == SliceSeries::power(2, -QuatE::unit_k()));
}

TEST_CASE("matrix expansion matches the monomial expansion") {
    SliceCoeffMatrix f = SliceCoeffMatrix::basis(3, 2, 1, QuatE::unit_j());
    CHECK(to_ncpoly(f) == expand_qbar_q(2, 1).right_mul(QuatE::unit_j()));
    CHECK(f.trunc_degree() == 1);
    CHECK(f.coeff(2, 1) == QuatE::unit_j());
    CHECK(f.coeff(0, 1).is_zero());
}

TEST_CASE("V power keeps only the top row") {
    SliceCoeffMatrix f(3);
    f.set_coeff(0, 0, one());
    f.set_coeff(1, 2, QuatE::unit_i());
    f.set_coeff(2, 1, QuatE::unit_j());
    // V^2 f = 2^2 2! f_2 = 8 f_2
    SliceSeries v = global_V_power(f);
    CHECK(v == SliceSeries::power(1, QuatE::unit_j() * ExactScalar(8)));
}

TEST_CASE("order check detects vanishing rows") {
    SliceCoeffMatrix f(3);
    f.set_coeff(0, 4, one());
    CHECK(order_check(f, 1));
    f.set_coeff(2, 0, QuatE::unit_i());
    CHECK(!order_check(f, 1));
    CHECK(order_check(f, 3));
}

TEST_CASE("evaluation agrees with the expansion") {
    SliceCoeffMatrix f(2);
    f.set_coeff(0, 2, QuatE::unit_i());
    f.set_coeff(1, 1, QuatE{ExactScalar(1), ExactScalar{}, ExactScalar{},
                            ExactScalar(-2)});
    QuatD q{0.4, -0.3, 0.2, 0.6};
    QuatD via_ncpoly = evaluate(to_ncpoly(f), q);
    QuatD direct = q * q * QuatD{0, 1, 0, 0} +
                   q.conj() * q * QuatD{1, 0, 0, -2};
    CHECK(quat_abs(via_ncpoly - direct) < 1e-12);
}

TEST_CASE("matrix addition and scaling") {
    SliceCoeffMatrix a = SliceCoeffMatrix::basis(2, 1, 1, one());
    SliceCoeffMatrix b = SliceCoeffMatrix::basis(2, 1, 1, QuatE::unit_i());
    SliceCoeffMatrix sum = a + b;
    CHECK(sum.coeff(1, 1) == one() + QuatE::unit_i());
    CHECK(a.right_mul(QuatE::unit_i()) == b);
    CHECK(SliceCoeffMatrix(2).is_zero());
    CHECK_THROWS_AS(SliceCoeffMatrix(0), std::domain_error);
}
