#include "fueterlab/ncpoly.hpp"

namespace fueterlab {

void NCPoly::add_term(const Monomial4& m, const QuatE& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::monomial(const Monomial4& m, const QuatE& c) {
    NCPoly p;
    p.add_term(m, c);
    return p;
}

NCPoly NCPoly::variable(int axis) {
    Monomial4 m;
    m.e[axis] = 1;
    return monomial(m, QuatE::real(ExactScalar(1)));
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

NCPoly NCPoly::left_mul(const QuatE& c) const {
    NCPoly r;
    for (const auto& [m, v] : terms_) r.add_term(m, c * v);
    return r;
}

NCPoly NCPoly::right_mul(const QuatE& c) const {
    NCPoly r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

NCPoly NCPoly::scalar_mul(const ExactScalar& s) const {
    NCPoly r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * s);
    return r;
}

NCPoly partial(const NCPoly& f, int axis) {
    NCPoly r;
    for (const auto& [m, c] : f.terms()) {
        if (m.e[axis] == 0) continue;
        Monomial4 d = m;
        d.e[axis] -= 1;
        r += NCPoly::monomial(d, c * ExactScalar(m.e[axis]));
    }
    return r;
}

NCPoly fueter_D(const NCPoly& f) {
    return partial(f, 0) + partial(f, 1).left_mul(QuatE::unit_i()) +
           partial(f, 2).left_mul(QuatE::unit_j()) +
           partial(f, 3).left_mul(QuatE::unit_k());
}

NCPoly fueter_Dbar(const NCPoly& f) {
    return partial(f, 0) - partial(f, 1).left_mul(QuatE::unit_i()) -
           partial(f, 2).left_mul(QuatE::unit_j()) -
           partial(f, 3).left_mul(QuatE::unit_k());
}

NCPoly fueter_D_pow(const NCPoly& f, int n) {
    NCPoly r = f;
    for (int i = 0; i < n; ++i) r = fueter_D(r);
    return r;
}

NCPoly fueter_Dbar_pow(const NCPoly& f, int n) {
    NCPoly r = f;
    for (int i = 0; i < n; ++i) r = fueter_Dbar(r);
    return r;
}

NCPoly laplacian(const NCPoly& f) {
    NCPoly r;
    for (int a = 0; a < 4; ++a) r += partial(partial(f, a), a);
    return r;
}

QuatD evaluate(const NCPoly& f, const QuatD& q) {
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z))
        throw std::domain_error("evaluate: non-finite point");
    const double comp[4] = {q.w, q.x, q.y, q.z};
    QuatD acc{};
    for (const auto& [m, c] : f.terms()) {
        double v = 1.0;
        for (int a = 0; a < 4; ++a)
            for (int i = 0; i < m.e[a]; ++i) v *= comp[a];
        QuatD fc = to_float(c);
        acc = acc + QuatD{v * fc.w, v * fc.x, v * fc.y, v * fc.z};
    }
    return acc;
}

NCPoly expand_qbar_q(int k, int j) {
    static const NCPoly q = [] {
        return NCPoly::variable(0) +
               NCPoly::variable(1).left_mul(QuatE::unit_i()) +
               NCPoly::variable(2).left_mul(QuatE::unit_j()) +
               NCPoly::variable(3).left_mul(QuatE::unit_k());
    }();
    static const NCPoly qbar = [] {
        return NCPoly::variable(0) -
               NCPoly::variable(1).left_mul(QuatE::unit_i()) -
               NCPoly::variable(2).left_mul(QuatE::unit_j()) -
               NCPoly::variable(3).left_mul(QuatE::unit_k());
    }();
    NCPoly r = NCPoly::constant(QuatE::real(ExactScalar(1)));
    for (int i = 0; i < k; ++i) r = r * qbar;
    for (int i = 0; i < j; ++i) r = r * q;
    return r;
}

NCPoly mul_x0_pow(const NCPoly& f, int k) {
    Monomial4 m;
    m.e[0] = k;
    return NCPoly::monomial(m, QuatE::real(ExactScalar(1))) * f;
}

}  // namespace fueterlab
