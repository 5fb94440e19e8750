#include "sp2lab/plane.hpp"

#include <algorithm>

namespace sp2lab {

Eigen::Matrix<double, 9, 1> m_coordinates(const SpElement& x) {
    Eigen::Matrix<double, 9, 1> c;
    c << x.u[0], x.u[1], x.u[2], x.v[0], x.v[1], x.v[2], x.w[0], x.w[1], x.w[2];
    return c;
}

SpElement from_m_coordinates(const Eigen::Matrix<double, 9, 1>& c) {
    return {0.0, {c(0), c(1), c(2)}, {c(3), c(4), c(5)}, {c(6), c(7), c(8)}};
}

TangentPlane::TangentPlane(SpElement x, SpElement y) : x_(x), y_(y) {
    if (!in_m(x_) || !in_m(y_)) throw DomainError("TangentPlane: vectors must lie in m");
    const double nx = bi_norm(x_);
    const double ny = bi_norm(y_);
    if (nx == 0.0 || ny == 0.0) throw DomainError("TangentPlane: zero vector");
    const double c = bi_inner(x_, y_) / (nx * ny);
    if (!(1.0 - c * c > 1e-12)) throw DomainError("TangentPlane: vectors are linearly dependent");
}

TangentPlane TangentPlane::transformed(const Mat2& g) const {
    return {g(0, 0) * x_ + g(1, 0) * y_, g(0, 1) * x_ + g(1, 1) * y_};
}

TangentPlane TangentPlane::rotated(double angle) const { return {ad_h(angle, x_), ad_h(angle, y_)}; }

TangentPlane TangentPlane::orthonormalized() const {
    const SpElement ex = (1.0 / bi_norm(x_)) * x_;
    SpElement f = y_ - bi_inner(ex, y_) * ex;
    // second pass for accuracy on nearly dependent pairs
    f -= bi_inner(ex, f) * ex;
    return {ex, (1.0 / bi_norm(f)) * f};
}

Basis9x2 TangentPlane::orthonormal_basis() const {
    const TangentPlane o = orthonormalized();
    Basis9x2 q;
    q.col(0) = m_coordinates(o.x());
    q.col(1) = m_coordinates(o.y());
    return q;
}

bool commutes(const TangentPlane& p, double rel_tol) {
    return bi_norm(bracket(p.x(), p.y())) <= rel_tol * bi_norm(p.x()) * bi_norm(p.y());
}

double subspace_distance(const Basis9x2& qa, const Basis9x2& qb) {
    // Sines of the principal angles are the singular values of the part of
    // qb orthogonal to span(qa); asin keeps small angles accurate.
    const Basis9x2 residual = qb - qa * (qa.transpose() * qb);
    const Eigen::JacobiSVD<Basis9x2> svd(residual);
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double th = std::asin(std::min(1.0, svd.singularValues()(i)));
        sum += th * th;
    }
    return std::sqrt(sum);
}

double subspace_distance(const TangentPlane& a, const TangentPlane& b) {
    return subspace_distance(a.orthonormal_basis(), b.orthonormal_basis());
}

Mat2 basis_change(const TangentPlane& source, const TangentPlane& target) {
    Basis9x2 s;
    s.col(0) = m_coordinates(source.x());
    s.col(1) = m_coordinates(source.y());
    Basis9x2 t;
    t.col(0) = m_coordinates(target.x());
    t.col(1) = m_coordinates(target.y());
    return s.colPivHouseholderQr().solve(t);
}

}  // namespace sp2lab
