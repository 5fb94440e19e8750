#include "sp2lab/algebra.hpp"

#include <algorithm>
#include <ostream>

namespace sp2lab {

bool in_m(const SpElement& x, double tol) { return std::abs(x.lambda) <= tol; }

SpElement ad_h(double angle, const SpElement& x) {
    if (!in_m(x)) throw DomainError("ad_h: element has a nonzero h-component");
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    return {0.0, x.u, c * x.v + s * x.w, (-s) * x.v + c * x.w};
}

double max_abs_diff(const SpElement& a, const SpElement& b) {
    const auto da = to_array(a);
    const auto db = to_array(b);
    double m = 0.0;
    for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
    return m;
}

std::array<double, 10> to_array(const SpElement& x) {
    return {x.lambda, x.u[0], x.u[1], x.u[2], x.v[0], x.v[1], x.v[2], x.w[0], x.w[1], x.w[2]};
}

SpElement from_array(const std::array<double, 10>& a) {
    return {a[0], {a[1], a[2], a[3]}, {a[4], a[5], a[6]}, {a[7], a[8], a[9]}};
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '[' << v[0] << ", " << v[1] << ", " << v[2] << ']';
}

std::ostream& operator<<(std::ostream& os, const SpElement& x) {
    return os << '(' << x.lambda << ", " << x.u << ", " << x.v << ", " << x.w << ')';
}

QuatMatrix operator*(const QuatMatrix& a, const QuatMatrix& b) {
    QuatMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b) {
    QuatMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

bool QuatMatrix::is_anti_hermitian(double tol) const {
    const auto close = [tol](const Quaternion& p, const Quaternion& q) {
        const Quaternion d = p - q;
        return std::abs(d.re) <= tol && std::abs(d.im[0]) <= tol && std::abs(d.im[1]) <= tol &&
               std::abs(d.im[2]) <= tol;
    };
    return e[0][0].is_pure(tol) && e[1][1].is_pure(tol) && close(e[1][0], -e[0][1].conj());
}

QuatMatrix to_matrix(const SpElement& x) {
    QuatMatrix m;
    m(0, 0) = 0.5 * Quaternion::pure(x.u + x.w);
    m(0, 1) = 0.5 * (Quaternion::pure(x.v) - Quaternion::real(x.lambda));
    m(1, 0) = 0.5 * (Quaternion::pure(x.v) + Quaternion::real(x.lambda));
    m(1, 1) = 0.5 * Quaternion::pure(x.u - x.w);
    return m;
}

SpElement from_matrix(const QuatMatrix& m, double tol) {
    if (!m.is_anti_hermitian(tol)) throw DomainError("from_matrix: matrix is not anti-Hermitian");
    const Quaternion sum_diag = m(0, 0) + m(1, 1);
    const Quaternion diff_diag = m(0, 0) - m(1, 1);
    const Quaternion sum_off = m(0, 1) + m(1, 0);
    // Anti-Hermitian forces m10 - m01 to be real.
    const Quaternion diff_off = m(1, 0) - m(0, 1);
    return {diff_off.re, sum_diag.im, sum_off.im, diff_diag.im};
}

SpElement bracket_oracle(const SpElement& x, const SpElement& y) {
    const QuatMatrix a = to_matrix(x);
    const QuatMatrix b = to_matrix(y);
    return from_matrix(a * b - b * a);
}

double trace_form(const SpElement& x, const SpElement& y) { return -(to_matrix(x) * to_matrix(y)).re_trace(); }

}  // namespace sp2lab
