#include "sp2lab/metric.hpp"

#include <algorithm>

#include "sp2lab/random.hpp"

namespace sp2lab {

namespace {

constexpr std::uint64_t kMetricStream = 0x6d6574726963ULL;  // "metric"

Mat3 random_symmetric(Rng& rng) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = uniform(rng, -1.0, 1.0);
    return m;
}

Mat3 random_antisymmetric(Rng& rng) {
    Mat3 m = Mat3::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            m(i, j) = uniform(rng, -1.0, 1.0);
            m(j, i) = -m(i, j);
        }
    return m;
}

MetricDeformation draw(Rng& rng) { return {random_symmetric(rng), random_antisymmetric(rng), random_symmetric(rng)}; }

}  // namespace

bool MetricDeformation::has_invariant_shape(double tol) const {
    return (a - a.transpose()).cwiseAbs().maxCoeff() <= tol && (c - c.transpose()).cwiseAbs().maxCoeff() <= tol &&
           (b + b.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Mat6 MetricDeformation::vw_block() const {
    Mat6 m;
    m << c, -b, b, c;
    return m;
}

MetricDeformation fixed_deformation() {
    MetricDeformation d;
    d.a << 0, 1, 0, 1, 0, 0, 0, 0, 0;
    d.b << 0, 1, 0, -1, 0, 0, 0, 0, 0;
    d.c << 1, 0, 1, 0, 0, 1, 1, 1, 0;
    return d;
}

SpElement apply(const MetricDeformation& d, const SpElement& x) {
    if (!in_m(x)) throw DomainError("apply: element has a nonzero h-component");
    return apply_unchecked(d, x);
}

std::pair<double, double> block_min_eigenvalues(const Mat3& a, const Mat6& vw) {
    const Eigen::SelfAdjointEigenSolver<Mat3> ea(a, Eigen::EigenvaluesOnly);
    const Eigen::SelfAdjointEigenSolver<Mat6> ev(vw, Eigen::EigenvaluesOnly);
    return {ea.eigenvalues()(0), ev.eigenvalues()(0)};
}

bool is_positive_definite(const MetricDeformation& d, double t) {
    const auto [ma, mv] =
        block_min_eigenvalues(Mat3::Identity() + t * d.a, Mat6::Identity() + t * d.vw_block());
    return std::min(ma, mv) > kPositivityThreshold;
}

DeformedMetric::DeformedMetric(MetricDeformation deformation, double t) : deformation_(std::move(deformation)), t_(t) {
    if (!deformation_.has_invariant_shape(1e-10))
        throw DomainError("DeformedMetric: A, C must be symmetric and B antisymmetric");
    const Mat3 a = a_block();
    const Mat6 vw = vw_block();
    const auto [ma, mv] = block_min_eigenvalues(a, vw);
    min_eigenvalue_ = std::min(ma, mv);
    if (!(min_eigenvalue_ > kPositivityThreshold))
        throw DomainError("DeformedMetric: I + tL is not positive definite");
    a_factor_.compute(a);
    vw_factor_.compute(vw);
}

Mat3 DeformedMetric::a_block() const { return Mat3::Identity() + t_ * deformation_.a; }

Mat6 DeformedMetric::vw_block() const { return Mat6::Identity() + t_ * deformation_.vw_block(); }

SpElement apply_metric(const DeformedMetric& m, const SpElement& x) {
    return x + m.t() * apply(m.deformation(), x);
}

SpElement inverse_apply(const DeformedMetric& m, const SpElement& x) {
    if (!in_m(x)) throw DomainError("inverse_apply: element has a nonzero h-component");
    const Eigen::Vector3d u = m.a_factor_.solve(Eigen::Vector3d(x.u[0], x.u[1], x.u[2]));
    Eigen::Matrix<double, 6, 1> vw;
    vw << x.v[0], x.v[1], x.v[2], x.w[0], x.w[1], x.w[2];
    const Eigen::Matrix<double, 6, 1> s = m.vw_factor_.solve(vw);
    return {0.0, {u(0), u(1), u(2)}, {s(0), s(1), s(2)}, {s(3), s(4), s(5)}};
}

double metric_inner(const DeformedMetric& m, const SpElement& x, const SpElement& y) {
    return bi_inner(x, apply_metric(m, y));
}

MetricDeformation random_admissible_metric(std::uint64_t seed, std::uint64_t index) {
    Rng rng = make_rng(seed, kMetricStream, index);
    for (;;) {
        MetricDeformation d = draw(rng);
        if (is_positive_definite(d, 1.0)) return d;
    }
}

MetricDeformation random_deformation(std::uint64_t seed, std::uint64_t index) {
    Rng rng = make_rng(seed, kMetricStream + 1, index);
    return draw(rng);
}

Eigen::VectorXd metric_spectrum(const DeformedMetric& m) {
    const Eigen::SelfAdjointEigenSolver<Mat3> ea(m.a_block(), Eigen::EigenvaluesOnly);
    const Eigen::SelfAdjointEigenSolver<Mat6> ev(m.vw_block(), Eigen::EigenvaluesOnly);
    Eigen::VectorXd r(9);
    r << ea.eigenvalues(), ev.eigenvalues();
    return r;
}

Eigen::Matrix<double, 9, 9> dense_matrix(const DeformedMetric& m) {
    Eigen::Matrix<double, 9, 9> r = Eigen::Matrix<double, 9, 9>::Zero();
    r.topLeftCorner<3, 3>() = m.a_block();
    r.bottomRightCorner<6, 6>() = m.vw_block();
    return r;
}

}  // namespace sp2lab
