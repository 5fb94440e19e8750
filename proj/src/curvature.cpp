#include "sp2lab/curvature.hpp"

namespace sp2lab {

namespace detail {

JetElement jet_solve(const MetricDeformation& d, const JetElement& y) {
    JetElement z;
    SpElement prev = coefficient(y, 0);
    add_coefficient(z, 0, prev);
    for (std::size_t k = 1; k <= Jet::kDegree; ++k) {
        const SpElement next = coefficient(y, k) - apply_unchecked(d, prev);
        add_coefficient(z, k, next);
        prev = next;
    }
    return z;
}

}  // namespace detail

namespace {

auto metric_ops(const DeformedMetric& m) {
    auto ap = [&m](const SpElement& z) { return apply_metric(m, z); };
    auto so = [&m](const SpElement& z) { return inverse_apply(m, z); };
    return std::pair{ap, so};
}

auto jet_ops(const MetricDeformation& d) {
    auto ap = [&d](const JetElement& z) { return detail::jet_apply(d, z); };
    auto so = [&d](const JetElement& z) { return detail::jet_solve(d, z); };
    return std::pair{ap, so};
}

}  // namespace

SpElement u_tensor(const DeformedMetric& m, const SpElement& x, const SpElement& y) {
    if (!in_m(x) || !in_m(y)) throw DomainError("u_tensor: arguments must lie in m");
    const auto [ap, so] = metric_ops(m);
    return detail::u_tensor_generic(x, y, ap, so);
}

double numerator(const DeformedMetric& m, const TangentPlane& p) {
    const auto [ap, so] = metric_ops(m);
    return detail::numerator_generic(p.x(), p.y(), ap, so);
}

double denominator(const DeformedMetric& m, const TangentPlane& p) {
    const double xx = metric_inner(m, p.x(), p.x());
    const double yy = metric_inner(m, p.y(), p.y());
    const double xy = metric_inner(m, p.x(), p.y());
    return xx * yy - xy * xy;
}

CurvatureReport sectional_curvature(const DeformedMetric& m, const TangentPlane& p) {
    CurvatureReport r;
    r.c_value = numerator(m, p);
    r.s_value = denominator(m, p);
    r.k_value = r.c_value / r.s_value;
    return r;
}

Jet numerator_jet(const MetricDeformation& d, const TangentPlane& p) {
    const auto [ap, so] = jet_ops(d);
    return detail::numerator_generic(lift(p.x()), lift(p.y()), ap, so);
}

Jet u_norm_jet(const MetricDeformation& d, const TangentPlane& p) {
    const auto [ap, so] = jet_ops(d);
    const JetElement x = lift(p.x());
    const JetElement y = lift(p.y());
    const JetElement u = detail::u_tensor_generic(x, y, ap, so);
    return bi_inner(u, ap(u));
}

Jet u_cross_jet(const MetricDeformation& d, const TangentPlane& p) {
    const auto [ap, so] = jet_ops(d);
    const JetElement x = lift(p.x());
    const JetElement y = lift(p.y());
    const JetElement uxx = detail::u_tensor_generic(x, x, ap, so);
    const JetElement uyy = detail::u_tensor_generic(y, y, ap, so);
    return bi_inner(uxx, ap(uyy));
}

double second_derivative_closed_form(const MetricDeformation& d, const TangentPlane& p) {
    if (!commutes(p)) throw DomainError("second_derivative_closed_form: the pair does not commute");
    const SpElement diff = bracket(p.x(), apply(d, p.y())) - bracket(p.y(), apply(d, p.x()));
    return 0.5 * bi_inner(diff, diff);
}

}  // namespace sp2lab
