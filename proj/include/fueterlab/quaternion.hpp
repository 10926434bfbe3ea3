#pragma once

#include <cmath>
#include <stdexcept>

#include "fueterlab/exact_scalar.hpp"

namespace fueterlab {

/// q = w + x*i + y*j + z*k over a real scalar type (ExactScalar for the
/// exact mode, double for the numeric mode). The two modes are distinct
/// types on purpose: identity checks never coerce silently to floats.
template <typename S>
struct Quaternion {
    S w{}, x{}, y{}, z{};

    Quaternion() = default;
    Quaternion(S w_, S x_, S y_, S z_) : w(w_), x(x_), y(y_), z(z_) {}
    static Quaternion real(S v) { return {v, S{}, S{}, S{}}; }
    static Quaternion unit_i() { return {S{}, S{1}, S{}, S{}}; }
    static Quaternion unit_j() { return {S{}, S{}, S{1}, S{}}; }
    static Quaternion unit_k() { return {S{}, S{}, S{}, S{1}}; }

    bool operator==(const Quaternion&) const = default;

    Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product, operand order preserved.
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quaternion operator*(const S& s) const { return {w * s, x * s, y * s, z * s}; }

    Quaternion conj() const { return {w, -x, -y, -z}; }

    S norm_sq() const { return w * w + x * x + y * y + z * z; }

    bool is_zero() const { return *this == Quaternion{}; }
};

template <typename S>
Quaternion<S> operator*(const S& s, const Quaternion<S>& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
}

using QuatE = Quaternion<ExactScalar>;
using QuatD = Quaternion<double>;

inline QuatD to_float(const QuatE& q) {
    return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()};
}

/// e^q = e^a (cos|v| + (v/|v|) sin|v|) for q = a + v.
inline QuatD quat_exp(const QuatD& q) {
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z))
        throw std::domain_error("quat_exp: non-finite input");
    double vn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    double ea = std::exp(q.w);
    // sin(v)/v -> 1 as v -> 0
    double s = vn < 1e-12 ? 1.0 : std::sin(vn) / vn;
    return {ea * std::cos(vn), ea * s * q.x, ea * s * q.y, ea * s * q.z};
}

inline double quat_abs(const QuatD& q) { return std::sqrt(q.norm_sq()); }

}  // namespace fueterlab
