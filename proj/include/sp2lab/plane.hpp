#pragma once

// 2-planes in m and the subspace geometry used to compare them.

#include <Eigen/Dense>

#include "sp2lab/algebra.hpp"

namespace sp2lab {

using Mat2 = Eigen::Matrix2d;
using Basis9x2 = Eigen::Matrix<double, 9, 2>;

/// Coordinates (u, v, w) of an element of m.
Eigen::Matrix<double, 9, 1> m_coordinates(const SpElement& x);
SpElement from_m_coordinates(const Eigen::Matrix<double, 9, 1>& c);

/// Ordered pair of linearly independent elements of m.
class TangentPlane {
public:
    /// Throws DomainError if either vector leaves m or the pair is
    /// (numerically) dependent: Gram determinant of the normalized pair
    /// must exceed 1e-12.
    TangentPlane(SpElement x, SpElement y);

    const SpElement& x() const { return x_; }
    const SpElement& y() const { return y_; }

    /// New basis (x', y') = (g00 x + g10 y, g01 x + g11 y).
    TangentPlane transformed(const Mat2& g) const;
    /// Ad(H) image.
    TangentPlane rotated(double angle) const;
    /// Gram-Schmidt under the bi-invariant product, keeping x's direction.
    TangentPlane orthonormalized() const;

    /// Orthonormal basis of the span as a 9x2 matrix.
    Basis9x2 orthonormal_basis() const;

private:
    SpElement x_, y_;
};

/// |[x, y]|_bi <= 1e-9 |x| |y|.
bool commutes(const TangentPlane& p, double rel_tol = 1e-9);

/// Geodesic Grassmann distance sqrt(sum theta_i^2) over the principal angles.
double subspace_distance(const TangentPlane& a, const TangentPlane& b);
double subspace_distance(const Basis9x2& qa, const Basis9x2& qb);

/// Coefficients g with (x, y) of `target` = g applied to the basis of
/// `source` (least squares). Meaningful when both spans agree.
Mat2 basis_change(const TangentPlane& source, const TangentPlane& target);

}  // namespace sp2lab
