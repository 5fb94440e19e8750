#include <doctest.h>

#include <cmath>

#include "sp2lab/jet.hpp"

using namespace sp2lab;

namespace {

Jet series(double c0, double c1, double c2, double c3, double c4) { return Jet(Jet::Coefficients{c0, c1, c2, c3, c4}); }

void check_series(const Jet& a, const Jet& b, double tol = 1e-14) {
    for (std::size_t k = 0; k <= Jet::kDegree; ++k) {
        INFO("k = " << k);
        CHECK(std::abs(a[k] - b[k]) <= tol);
    }
}

}  // namespace

TEST_CASE("jet: constants and the variable") {
    const Jet c = 2.5;
    CHECK(c[0] == 2.5);
    CHECK(c[1] == 0.0);
    const Jet t = Jet::variable();
    CHECK(t[1] == 1.0);
    check_series(t * t * t, series(0, 0, 0, 1, 0));
    check_series(t * t * t * t * t, Jet(0.0));  // truncated
    check_series(t.shifted(), series(0, 0, 1, 0, 0));
}

TEST_CASE("jet: inverse") {
    const Jet t = Jet::variable();
    // 1 / (1 - t) = 1 + t + t^2 + ...
    check_series((1.0 - t).inverse(), series(1, 1, 1, 1, 1));
    // t^3 / (1 - t^2) = t^3 + t^5 + ...
    check_series(t * t * t / (1.0 - t * t), series(0, 0, 0, 1, 0));
    // x * x^-1 = 1 for a generic series
    const Jet x = series(1.5, -0.3, 2.0, 0.7, -1.1);
    check_series(x * x.inverse(), Jet(1.0));
    CHECK_THROWS_AS(series(0.0, 1, 0, 0, 0).inverse(), DomainError);
}

TEST_CASE("jet: derivatives match a closed form") {
    // exp(t) truncated: k-th derivative at 0 is 1
    const Jet e = series(1.0, 1.0, 1.0 / 2, 1.0 / 6, 1.0 / 24);
    for (std::size_t k = 0; k <= Jet::kDegree; ++k) CHECK(e.derivative(k) == doctest::Approx(1.0));
    // (e^t)^2 = e^{2t}: k-th derivative 2^k
    const Jet e2 = e * e;
    for (std::size_t k = 0; k <= Jet::kDegree; ++k) CHECK(e2.derivative(k) == doctest::Approx(std::pow(2.0, k)));
}

TEST_CASE("jet: ring laws") {
    const Jet a = series(0.3, 1.2, -0.5, 2.0, 0.1);
    const Jet b = series(-1.0, 0.4, 0.9, -0.2, 3.0);
    const Jet c = series(2.0, 0.0, -1.0, 0.5, 0.25);
    check_series(a * b, b * a);
    check_series(a * (b + c), a * b + a * c, 1e-13);
    check_series((a * b) * c, a * (b * c), 1e-13);
    check_series(a - a, Jet(0.0));
    check_series(2.0 * a, a + a);
}

TEST_CASE("jet elements") {
    const SpElement x = m_element(e1, 2.0 * e2, -e3);
    const JetElement j = lift(x);
    CHECK(coefficient(j, 0) == x);
    CHECK(coefficient(j, 1) == SpElement{});
    JetElement k = j;
    add_coefficient(k, 2, x);
    CHECK(coefficient(k, 2) == x);
    CHECK(coefficient(shifted(k), 3) == x);
    CHECK(coefficient(shifted(k), 1) == x);
}
