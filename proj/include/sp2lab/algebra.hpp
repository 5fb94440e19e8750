#pragma once

// The Lie algebra sp(2) written as (lambda, u, v, w) with lambda real and
// u, v, w in R^3, the bi-invariant inner product, the isotropy circle action
// and an independent quaternionic-matrix model of the same algebra.
//
// The coordinate (lambda, u, v, w) stands for the quaternionic matrix
//
//     1/2 * | u + w     v - lambda |
//           | v + lambda  u - w    |
//
// where u, v, w are read as pure imaginary quaternions (ij = k).
// The subalgebra h is the lambda-factor, m is its orthogonal complement.

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sp2lab {

/// Thrown when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Absolute tolerance used for unit-scale comparisons.
inline constexpr double kTolerance = 1e-10;

template <class T>
struct BasicVec3 {
    std::array<T, 3> c{T(0), T(0), T(0)};

    BasicVec3() = default;
    BasicVec3(T x, T y, T z) : c{x, y, z} {}

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    BasicVec3& operator+=(const BasicVec3& o) {
        for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
        return *this;
    }
    BasicVec3& operator-=(const BasicVec3& o) {
        for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend BasicVec3 operator+(BasicVec3 a, const BasicVec3& b) { return a += b; }
    friend BasicVec3 operator-(BasicVec3 a, const BasicVec3& b) { return a -= b; }
    friend BasicVec3 operator-(const BasicVec3& a) { return {-a[0], -a[1], -a[2]}; }
    template <class S>
    friend BasicVec3 operator*(const S& s, const BasicVec3& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
    friend bool operator==(const BasicVec3&, const BasicVec3&) = default;
};

template <class T>
T dot(const BasicVec3<T>& a, const BasicVec3<T>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
BasicVec3<T> cross(const BasicVec3<T>& a, const BasicVec3<T>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

using Vec3 = BasicVec3<double>;

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline const Vec3 e1{1.0, 0.0, 0.0};
inline const Vec3 e2{0.0, 1.0, 0.0};
inline const Vec3 e3{0.0, 0.0, 1.0};

/// Element (lambda, u, v, w) of sp(2). The scalar type is templated so the
/// same bracket serves plain doubles and truncated power series.
template <class T>
struct BasicSpElement {
    T lambda{0};
    BasicVec3<T> u, v, w;

    BasicSpElement() = default;
    BasicSpElement(T l, BasicVec3<T> u_, BasicVec3<T> v_, BasicVec3<T> w_)
        : lambda(l), u(u_), v(v_), w(w_) {}

    BasicSpElement& operator+=(const BasicSpElement& o) {
        lambda += o.lambda;
        u += o.u;
        v += o.v;
        w += o.w;
        return *this;
    }
    BasicSpElement& operator-=(const BasicSpElement& o) {
        lambda -= o.lambda;
        u -= o.u;
        v -= o.v;
        w -= o.w;
        return *this;
    }
    friend BasicSpElement operator+(BasicSpElement a, const BasicSpElement& b) { return a += b; }
    friend BasicSpElement operator-(BasicSpElement a, const BasicSpElement& b) { return a -= b; }
    friend BasicSpElement operator-(const BasicSpElement& a) { return {-a.lambda, -a.u, -a.v, -a.w}; }
    template <class S>
    friend BasicSpElement operator*(const S& s, const BasicSpElement& a) {
        return {s * a.lambda, s * a.u, s * a.v, s * a.w};
    }
    friend bool operator==(const BasicSpElement&, const BasicSpElement&) = default;
};

using SpElement = BasicSpElement<double>;

/// Shorthand for an element of m.
inline SpElement m_element(const Vec3& u, const Vec3& v, const Vec3& w) { return {0.0, u, v, w}; }

/// Lie bracket. On m x m the u, v, w components are
///   (u x u' + v x v' + w x w',  u x v' - u' x v,  u x w' - u' x w),
/// the lambda component is v'.w - v.w', and lambda enters through the
/// rotation of the (v, w) factors. Agrees with the matrix commutator.
template <class T>
BasicSpElement<T> bracket(const BasicSpElement<T>& x, const BasicSpElement<T>& y) {
    BasicSpElement<T> r;
    r.lambda = dot(y.v, x.w) - dot(x.v, y.w);
    r.u = cross(x.u, y.u) + cross(x.v, y.v) + cross(x.w, y.w);
    r.v = cross(x.u, y.v) - cross(y.u, x.v) + (x.lambda * y.w - y.lambda * x.w);
    r.w = cross(x.u, y.w) - cross(y.u, x.w) + (y.lambda * x.v - x.lambda * y.v);
    return r;
}

/// Bi-invariant inner product, unit weight on every factor.
template <class T>
T bi_inner(const BasicSpElement<T>& x, const BasicSpElement<T>& y) {
    return x.lambda * y.lambda + dot(x.u, y.u) + dot(x.v, y.v) + dot(x.w, y.w);
}

inline double bi_norm(const SpElement& x) { return std::sqrt(bi_inner(x, x)); }

template <class T>
BasicSpElement<T> project_h(const BasicSpElement<T>& x) {
    return {x.lambda, {}, {}, {}};
}

template <class T>
BasicSpElement<T> project_m(const BasicSpElement<T>& x) {
    return {T(0), x.u, x.v, x.w};
}

/// Ad(exp(angle Z)) on m: u fixed, (v, w) rotated by twice the angle.
/// Throws DomainError unless x lies in m.
SpElement ad_h(double angle, const SpElement& x);

bool in_m(const SpElement& x, double tol = 1e-12);

/// Largest absolute coordinate difference.
double max_abs_diff(const SpElement& a, const SpElement& b);

std::array<double, 10> to_array(const SpElement& x);
SpElement from_array(const std::array<double, 10>& a);

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const SpElement& x);

// ---------------------------------------------------------------------------
// Quaternionic oracle

struct Quaternion {
    double re = 0.0;
    Vec3 im;

    static Quaternion real(double r) { return {r, {}}; }
    static Quaternion pure(const Vec3& v) { return {0.0, v}; }

    bool is_pure(double tol = 1e-12) const { return std::abs(re) <= tol; }
    Quaternion conj() const { return {re, -im}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.re + b.re, a.im + b.im}; }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.re - b.re, a.im - b.im}; }
    friend Quaternion operator-(const Quaternion& a) { return {-a.re, -a.im}; }
    friend Quaternion operator*(double s, const Quaternion& a) { return {s * a.re, s * a.im}; }
    /// Hamilton product with ij = k, jk = i, ki = j.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.re * b.re - dot(a.im, b.im), a.re * b.im + b.re * a.im + cross(a.im, b.im)};
    }
};

/// 2x2 matrix over the quaternions. Products of anti-Hermitian matrices are
/// not anti-Hermitian, so the shape is only checked where it matters.
struct QuatMatrix {
    std::array<std::array<Quaternion, 2>, 2> e{};

    Quaternion& operator()(int i, int j) { return e[i][j]; }
    const Quaternion& operator()(int i, int j) const { return e[i][j]; }

    friend QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b);
    friend QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b);

    bool is_anti_hermitian(double tol = 1e-10) const;
    /// Real part of the (quaternionic) trace.
    double re_trace() const { return e[0][0].re + e[1][1].re; }
};

QuatMatrix to_matrix(const SpElement& x);
/// Inverse of to_matrix. Throws DomainError for matrices outside sp(2).
SpElement from_matrix(const QuatMatrix& m, double tol = 1e-10);

/// Bracket computed as the matrix commutator; independent of `bracket`.
SpElement bracket_oracle(const SpElement& x, const SpElement& y);

/// -Re tr(XY) on the matrix model. Equals bi_inner / 2.
double trace_form(const SpElement& x, const SpElement& y);

}  // namespace sp2lab
