#pragma once

#include <vector>

#include "fueterlab/ncpoly.hpp"

namespace fueterlab {

/// Slice regular polynomial sum_j q^j a_j with right quaternion
/// coefficients; trailing zeros trimmed.
class SliceSeries {
public:
    SliceSeries() = default;
    explicit SliceSeries(std::vector<QuatE> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static SliceSeries power(int j, const QuatE& a) {
        std::vector<QuatE> c(j + 1);
        c[j] = a;
        return SliceSeries(std::move(c));
    }

    bool operator==(const SliceSeries&) const = default;

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    QuatE coeff(int j) const {
        return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[j] : QuatE{};
    }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<QuatE>& coeffs() const { return coeffs_; }

    SliceSeries operator+(const SliceSeries& o) const;
    SliceSeries operator-(const SliceSeries& o) const;
    SliceSeries right_mul(const QuatE& c) const;
    SliceSeries scalar_mul(const ExactScalar& s) const;

    NCPoly to_ncpoly() const;
    QuatD evaluate(const QuatD& q) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<QuatE> coeffs_;
};

/// Truncated slice polyanalytic function of order n+1 as the coefficient
/// array a_{k,j} of sum_k sum_j qbar^k q^j a_{k,j}; row k is the slice
/// regular component f_k of the polyanalytic decomposition.
class SliceCoeffMatrix {
public:
    explicit SliceCoeffMatrix(int order = 1) : rows_(order) {
        if (order < 1) throw std::domain_error("SliceCoeffMatrix: order must be >= 1");
    }

    int order() const { return static_cast<int>(rows_.size()); }
    const SliceSeries& row(int k) const { return rows_.at(k); }
    QuatE coeff(int k, int j) const {
        return k >= 0 && k < order() ? rows_[k].coeff(j) : QuatE{};
    }
    void set_coeff(int k, int j, const QuatE& a);

    bool operator==(const SliceCoeffMatrix&) const = default;

    SliceCoeffMatrix operator+(const SliceCoeffMatrix& o) const;
    SliceCoeffMatrix right_mul(const QuatE& c) const;

    static SliceCoeffMatrix basis(int order, int k, int j, const QuatE& a);

    int trunc_degree() const;
    bool is_zero() const;

private:
    std::vector<SliceSeries> rows_;
};

/// Exact expansion sum_{k,j} qbar^k q^j a_{k,j} into x0..x3 coordinates.
NCPoly to_ncpoly(const SliceCoeffMatrix& f);

/// Power-rule derivative on a slice regular polynomial: j a_j shifted down.
SliceSeries slice_derivative(const SliceSeries& f);

/// Cauchy product (f*g)_m = sum_{a+b=m} alpha_a beta_b, quaternion products
/// in that order.
SliceSeries star_product(const SliceSeries& f, const SliceSeries& g);

/// Closed-form action of the n-th power of the global operator V on the
/// polyanalytic decomposition: V^n f = 2^n n! f_n.
SliceSeries global_V_power(const SliceCoeffMatrix& f);

/// True iff every row k >= m vanishes, i.e. f is slice polyanalytic of
/// order <= m at the representation level.
bool order_check(const SliceCoeffMatrix& f, int m);

}  // namespace fueterlab
