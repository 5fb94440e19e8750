#pragma once

// Ad(H)-invariant operators on m. Every such operator has the shape
//
//     L(0, u, v, w) = (0, A u, C v - B w, B v + C w)
//
// with A, C symmetric and B antisymmetric. The same triple serves as a
// deformation direction L (no sign condition) and, through M = I + t L, as a
// metric <x, y> = <x, M y>_bi.

#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "sp2lab/algebra.hpp"
#include "sp2lab/jet.hpp"

namespace sp2lab {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Smallest eigenvalue a metric block may have.
inline constexpr double kPositivityThreshold = 1e-9;

struct MetricDeformation {
    Mat3 a = Mat3::Zero();
    Mat3 b = Mat3::Zero();
    Mat3 c = Mat3::Zero();

    static MetricDeformation zero() { return {}; }

    /// True when A and C are symmetric and B antisymmetric.
    bool has_invariant_shape(double tol = 1e-12) const;

    /// The 6x6 block (C -B; B C) acting on (v, w).
    Mat6 vw_block() const;
};

/// A = (0 1 0; 1 0 0; 0 0 0), B = (0 1 0; -1 0 0; 0 0 0), C = (1 0 1; 0 0 1; 1 1 0).
MetricDeformation fixed_deformation();

template <class T>
BasicVec3<T> mat_vec(const Mat3& m, const BasicVec3<T>& x) {
    BasicVec3<T> r;
    for (int i = 0; i < 3; ++i) r[i] = m(i, 0) * x[0] + m(i, 1) * x[1] + m(i, 2) * x[2];
    return r;
}

/// L x for x in m. Throws DomainError when x has an h-component.
SpElement apply(const MetricDeformation& d, const SpElement& x);

template <class T>
BasicSpElement<T> apply_unchecked(const MetricDeformation& d, const BasicSpElement<T>& x) {
    return {T(0), mat_vec(d.a, x.u), mat_vec(d.c, x.v) - mat_vec(d.b, x.w), mat_vec(d.b, x.v) + mat_vec(d.c, x.w)};
}

/// M_t = I + t L with positivity checked at construction.
class DeformedMetric {
public:
    /// Throws DomainError when the deformation lacks the invariant shape or
    /// when I + t L is not positive definite.
    DeformedMetric(MetricDeformation deformation, double t);

    static DeformedMetric identity() { return {MetricDeformation::zero(), 0.0}; }

    const MetricDeformation& deformation() const { return deformation_; }
    double t() const { return t_; }

    /// Blocks of I + t L.
    Mat3 a_block() const;
    Mat6 vw_block() const;

    /// Smallest eigenvalue of I + t L.
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    MetricDeformation deformation_;
    double t_;
    Eigen::LLT<Mat3> a_factor_;
    Eigen::LLT<Mat6> vw_factor_;
    double min_eigenvalue_ = 0.0;

    friend SpElement inverse_apply(const DeformedMetric& m, const SpElement& x);
};

/// Smallest eigenvalues of the A block and of the (v, w) block.
std::pair<double, double> block_min_eigenvalues(const Mat3& a, const Mat6& vw);

bool is_positive_definite(const MetricDeformation& d, double t);

/// x + t L x.
SpElement apply_metric(const DeformedMetric& m, const SpElement& x);
/// Solves (I + t L) y = x.
SpElement inverse_apply(const DeformedMetric& m, const SpElement& x);
/// <x, (I + t L) y>_bi.
double metric_inner(const DeformedMetric& m, const SpElement& x, const SpElement& y);

/// Samples L with entries uniform in [-1, 1] (A, C symmetric, B antisymmetric)
/// and rejects until I + L is positive definite. Deterministic per seed.
MetricDeformation random_admissible_metric(std::uint64_t seed, std::uint64_t index = 0);

/// Same shape constraints without the positivity rejection.
MetricDeformation random_deformation(std::uint64_t seed, std::uint64_t index = 0);

/// Eigenvalues of I + t L: those of its A block followed by those of its
/// (v, w) block, each ascending.
Eigen::VectorXd metric_spectrum(const DeformedMetric& m);

/// Dense 9x9 matrix of I + t L in (u, v, w) coordinates.
Eigen::Matrix<double, 9, 9> dense_matrix(const DeformedMetric& m);

}  // namespace sp2lab
