#pragma once

// Sectional curvature of the homogeneous metric g_t at the base point:
//
//   K = C / S,   S = g(X,X) g(Y,Y) - g(X,Y)^2,
//   C = -3/4 |[X,Y]_m|_g^2 + 1/2 g([[Y,X]_m,Y]_m, X) + 1/2 g([[X,Y]_m,X]_m, Y)
//       + g([[X,Y]_h, X], Y) + g(U(X,Y), U(X,Y)) - g(U(X,X), U(Y,Y)),
//   U(X,Y) = 1/2 M^{-1} ([X, M Y] + [Y, M X])_m.
//
// The numerator is written once, generic over the scalar, so the same code
// yields plain values and degree-4 jets in t around t = 0.

#include "sp2lab/algebra.hpp"
#include "sp2lab/jet.hpp"
#include "sp2lab/metric.hpp"
#include "sp2lab/plane.hpp"

namespace sp2lab {

struct CurvatureReport {
    double c_value = 0.0;
    double s_value = 0.0;
    double k_value = 0.0;
};

namespace detail {

template <class T, class ApplyM, class SolveM>
BasicSpElement<T> u_tensor_generic(const BasicSpElement<T>& x, const BasicSpElement<T>& y, ApplyM&& apply_m,
                                   SolveM&& solve_m) {
    return 0.5 * solve_m(project_m(bracket(x, apply_m(y)) + bracket(y, apply_m(x))));
}

template <class T, class ApplyM, class SolveM>
T numerator_generic(const BasicSpElement<T>& x, const BasicSpElement<T>& y, ApplyM&& apply_m, SolveM&& solve_m) {
    const auto g = [&](const BasicSpElement<T>& a, const BasicSpElement<T>& b) { return bi_inner(a, apply_m(b)); };
    const BasicSpElement<T> xy = bracket(x, y);
    const BasicSpElement<T> xy_m = project_m(xy);
    const BasicSpElement<T> yx_m = project_m(bracket(y, x));
    const BasicSpElement<T> uxy = u_tensor_generic(x, y, apply_m, solve_m);
    const BasicSpElement<T> uxx = u_tensor_generic(x, x, apply_m, solve_m);
    const BasicSpElement<T> uyy = u_tensor_generic(y, y, apply_m, solve_m);

    T c = -0.75 * g(xy_m, xy_m);
    c += 0.5 * g(project_m(bracket(yx_m, y)), x);
    c += 0.5 * g(project_m(bracket(xy_m, x)), y);
    // [[X,Y]_h, X] already lies in m
    c += g(bracket(project_h(xy), x), y);
    c += g(uxy, uxy);
    c -= g(uxx, uyy);
    return c;
}

/// M_t applied to a jet in t: z + t L z.
inline JetElement jet_apply(const MetricDeformation& d, const JetElement& z) {
    return z + shifted(apply_unchecked(d, z));
}

/// Solves (I + t L) z = y coefficient by coefficient (Neumann series).
JetElement jet_solve(const MetricDeformation& d, const JetElement& y);

}  // namespace detail

/// U(X, Y) for the metric m. Symmetric in (x, y).
SpElement u_tensor(const DeformedMetric& m, const SpElement& x, const SpElement& y);

double numerator(const DeformedMetric& m, const TangentPlane& p);
double denominator(const DeformedMetric& m, const TangentPlane& p);
CurvatureReport sectional_curvature(const DeformedMetric& m, const TangentPlane& p);

/// Degree-4 series of C(X, Y, t) for M_t = I + t d, exact at t = 0.
Jet numerator_jet(const MetricDeformation& d, const TangentPlane& p);

/// Series of g_t(U(X,Y), U(X,Y)) and g_t(U(X,X), U(Y,Y)).
Jet u_norm_jet(const MetricDeformation& d, const TangentPlane& p);
Jet u_cross_jet(const MetricDeformation& d, const TangentPlane& p);

/// 1/2 |[X, LY] - [Y, LX]|_bi^2, the second t-derivative of C at 0 for a
/// commuting pair. Throws DomainError when the pair does not commute.
double second_derivative_closed_form(const MetricDeformation& d, const TangentPlane& p);

}  // namespace sp2lab
