#pragma once

// Seeded sampling helpers. Every sample index gets its own generator derived
// from (seed, stream, index), so results never depend on evaluation order.

#include <cstdint>
#include <random>

#include "sp2lab/algebra.hpp"

namespace sp2lab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0) {
    return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index));
}

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

inline Vec3 gaussian_vec3(Rng& rng) { return {gaussian(rng), gaussian(rng), gaussian(rng)}; }

inline Vec3 random_unit(Rng& rng) {
    for (;;) {
        const Vec3 g = gaussian_vec3(rng);
        const double n = norm(g);
        if (n > 1e-6) return (1.0 / n) * g;
    }
}

/// Unit vector orthogonal to the unit vector `a`.
inline Vec3 random_unit_orthogonal(Rng& rng, const Vec3& a) {
    for (;;) {
        Vec3 g = gaussian_vec3(rng);
        g -= dot(g, a) * a;
        const double n = norm(g);
        if (n > 1e-6) return (1.0 / n) * g;
    }
}

inline SpElement random_element(Rng& rng) {
    return {gaussian(rng), gaussian_vec3(rng), gaussian_vec3(rng), gaussian_vec3(rng)};
}

inline SpElement random_m_element(Rng& rng) { return {0.0, gaussian_vec3(rng), gaussian_vec3(rng), gaussian_vec3(rng)}; }

/// Log-uniform magnitude in [lo, hi].
inline double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace sp2lab
