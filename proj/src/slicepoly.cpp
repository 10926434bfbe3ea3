#include "fueterlab/slicepoly.hpp"

namespace fueterlab {

SliceSeries SliceSeries::operator+(const SliceSeries& o) const {
    std::vector<QuatE> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t j = 0; j < c.size(); ++j)
        c[j] = coeff(static_cast<int>(j)) + o.coeff(static_cast<int>(j));
    return SliceSeries(std::move(c));
}

SliceSeries SliceSeries::operator-(const SliceSeries& o) const {
    return *this + o.right_mul(QuatE::real(ExactScalar(-1)));
}

SliceSeries SliceSeries::right_mul(const QuatE& c) const {
    std::vector<QuatE> r(coeffs_.size());
    for (size_t j = 0; j < r.size(); ++j) r[j] = coeffs_[j] * c;
    return SliceSeries(std::move(r));
}

SliceSeries SliceSeries::scalar_mul(const ExactScalar& s) const {
    std::vector<QuatE> r(coeffs_.size());
    for (size_t j = 0; j < r.size(); ++j) r[j] = coeffs_[j] * s;
    return SliceSeries(std::move(r));
}

NCPoly SliceSeries::to_ncpoly() const {
    NCPoly p;
    for (size_t j = 0; j < coeffs_.size(); ++j)
        p += expand_qbar_q(0, static_cast<int>(j)).right_mul(coeffs_[j]);
    return p;
}

QuatD SliceSeries::evaluate(const QuatD& q) const {
    QuatD acc{}, qp = QuatD::real(1.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        acc = acc + qp * to_float(coeffs_[j]);
        qp = qp * q;
    }
    return acc;
}

void SliceCoeffMatrix::set_coeff(int k, int j, const QuatE& a) {
    auto c = rows_.at(k).coeffs();
    if (static_cast<int>(c.size()) <= j) c.resize(j + 1);
    c[j] = a;
    rows_[k] = SliceSeries(std::move(c));
}

SliceCoeffMatrix SliceCoeffMatrix::operator+(const SliceCoeffMatrix& o) const {
    SliceCoeffMatrix r(std::max(order(), o.order()));
    for (int k = 0; k < r.order(); ++k) {
        SliceSeries s;
        if (k < order()) s = s + rows_[k];
        if (k < o.order()) s = s + o.rows_[k];
        r.rows_[k] = s;
    }
    return r;
}

SliceCoeffMatrix SliceCoeffMatrix::right_mul(const QuatE& c) const {
    SliceCoeffMatrix r(order());
    for (int k = 0; k < order(); ++k) r.rows_[k] = rows_[k].right_mul(c);
    return r;
}

SliceCoeffMatrix SliceCoeffMatrix::basis(int order, int k, int j, const QuatE& a) {
    SliceCoeffMatrix f(order);
    f.set_coeff(k, j, a);
    return f;
}

int SliceCoeffMatrix::trunc_degree() const {
    int d = 0;
    for (const auto& r : rows_) d = std::max(d, r.trunc_degree());
    return d;
}

bool SliceCoeffMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

NCPoly to_ncpoly(const SliceCoeffMatrix& f) {
    NCPoly p;
    for (int k = 0; k < f.order(); ++k) {
        const auto& row = f.row(k);
        for (int j = 0; j <= row.trunc_degree(); ++j)
            p += expand_qbar_q(k, j).right_mul(row.coeff(j));
    }
    return p;
}

SliceSeries slice_derivative(const SliceSeries& f) {
    std::vector<QuatE> c;
    for (int j = 1; j <= f.trunc_degree(); ++j)
        c.push_back(f.coeff(j) * ExactScalar(j));
    return SliceSeries(std::move(c));
}

SliceSeries star_product(const SliceSeries& f, const SliceSeries& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<QuatE> c(f.trunc_degree() + g.trunc_degree() + 1);
    for (int a = 0; a <= f.trunc_degree(); ++a)
        for (int b = 0; b <= g.trunc_degree(); ++b)
            c[a + b] = c[a + b] + f.coeff(a) * g.coeff(b);
    return SliceSeries(std::move(c));
}

SliceSeries global_V_power(const SliceCoeffMatrix& f) {
    int n = f.order() - 1;
    ExactScalar c = ExactScalar(Rational(int_pow(2, n) * factorial(n)));
    return f.row(n).scalar_mul(c);
}

bool order_check(const SliceCoeffMatrix& f, int m) {
    for (int k = m; k < f.order(); ++k)
        if (!f.row(k).is_zero()) return false;
    return true;
}

}  // namespace fueterlab
