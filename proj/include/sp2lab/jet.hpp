#pragma once

// Truncated power series c0 + c1 t + ... + c4 t^4 around t = 0.
// Arithmetic drops every term of degree > 4, so the k-th derivative at 0
// of any polynomial/rational expression is k! * c_k exactly.

#include <array>
#include <cmath>
#include <cstddef>

#include "sp2lab/algebra.hpp"

namespace sp2lab {

class Jet {
public:
    static constexpr std::size_t kDegree = 4;
    using Coefficients = std::array<double, kDegree + 1>;

    Jet() = default;
    Jet(double constant) : c_{constant, 0.0, 0.0, 0.0, 0.0} {}  // NOLINT: implicit lift of constants
    explicit Jet(const Coefficients& c) : c_(c) {}

    /// The series of t itself.
    static Jet variable() { return Jet(Coefficients{0.0, 1.0, 0.0, 0.0, 0.0}); }

    double operator[](std::size_t k) const { return c_[k]; }
    double& operator[](std::size_t k) { return c_[k]; }
    const Coefficients& coefficients() const { return c_; }

    /// d^k/dt^k at t = 0.
    double derivative(std::size_t k) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
        return f * c_[k];
    }

    /// Multiplication by t.
    Jet shifted() const {
        Coefficients r{};
        for (std::size_t k = 1; k <= kDegree; ++k) r[k] = c_[k - 1];
        return Jet(r);
    }

    /// Series reciprocal. Throws DomainError when |c0| <= 1e-12.
    Jet inverse() const {
        if (std::abs(c_[0]) <= 1e-12) throw DomainError("Jet::inverse: constant term vanishes");
        Coefficients r{};
        r[0] = 1.0 / c_[0];
        for (std::size_t k = 1; k <= kDegree; ++k) {
            double s = 0.0;
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
            r[k] = -s / c_[0];
        }
        return Jet(r);
    }

    Jet& operator+=(const Jet& o) {
        for (std::size_t k = 0; k <= kDegree; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (std::size_t k = 0; k <= kDegree; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) {
        Jet r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Coefficients r{};
        for (std::size_t i = 0; i <= kDegree; ++i) {
            if (a.c_[i] == 0.0) continue;
            for (std::size_t j = 0; i + j <= kDegree; ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Jet(r);
    }
    friend Jet operator*(double s, Jet a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend Jet operator*(Jet a, double s) { return s * a; }
    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    friend bool operator==(const Jet&, const Jet&) = default;

private:
    Coefficients c_{};
};

using JetElement = BasicSpElement<Jet>;

inline JetElement lift(const SpElement& x) {
    return {Jet(x.lambda), {x.u[0], x.u[1], x.u[2]}, {x.v[0], x.v[1], x.v[2]}, {x.w[0], x.w[1], x.w[2]}};
}

/// Coefficient of t^k of every coordinate.
inline SpElement coefficient(const JetElement& x, std::size_t k) {
    return {x.lambda[k], {x.u[0][k], x.u[1][k], x.u[2][k]}, {x.v[0][k], x.v[1][k], x.v[2][k]},
            {x.w[0][k], x.w[1][k], x.w[2][k]}};
}

/// Adds `value * t^k` to every coordinate of x.
inline void add_coefficient(JetElement& x, std::size_t k, const SpElement& value) {
    x.lambda[k] += value.lambda;
    for (std::size_t i = 0; i < 3; ++i) {
        x.u[i][k] += value.u[i];
        x.v[i][k] += value.v[i];
        x.w[i][k] += value.w[i];
    }
}

inline JetElement shifted(const JetElement& x) {
    auto sh = [](const BasicVec3<Jet>& a) { return BasicVec3<Jet>{a[0].shifted(), a[1].shifted(), a[2].shifted()}; };
    return {x.lambda.shifted(), sh(x.u), sh(x.v), sh(x.w)};
}

}  // namespace sp2lab
