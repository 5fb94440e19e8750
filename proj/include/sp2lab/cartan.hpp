#pragma once

// Cartan subalgebras of sp(2) contained in m. Up to Ad(H) every such plane
// is one of
//
//   F1  span{(0,0,v,0), (0,0,0,w)}        |v| = |w| = 1, v.w = 0
//   F2  span{(0,u,0,w), (0,0,u,0)}        |u| = 1, u.w = 0
//   F3  span{(0,u,u',0), (0,u',u,0)}      u, u' independent, u.u' = 0
//   F4  span{(0,u,u',0), (0,u',u,mu u)}   u, u' independent, u.u' = 0, mu != 0
//
// In complex notation z = v + i w the circle acts by z -> exp(-2is) z and
// leaves u alone; canonicalize() uses that picture to pick the rotation.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sp2lab/algebra.hpp"
#include "sp2lab/plane.hpp"

namespace sp2lab {

enum class Family { F1, F2, F3, F4 };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

struct F1Params {
    Vec3 v, w;
};
struct F2Params {
    Vec3 u, w;
};
struct F3Params {
    Vec3 u, u2;
};
struct F4Params {
    Vec3 u, u2;
    double mu = 0.0;
};
using CartanParameters = std::variant<F1Params, F2Params, F3Params, F4Params>;

Family family_of(const CartanParameters& p);
TangentPlane representative(const CartanParameters& p);

/// input basis = (ad_h(angle) applied to the representative).transformed(basis)
struct CartanWitness {
    double angle = 0.0;
    Mat2 basis = Mat2::Identity();
};

struct CartanClassification {
    Family family = Family::F1;
    CartanParameters parameters;
    CartanWitness witness;

    TangentPlane representative() const { return sp2lab::representative(parameters); }
    /// Applies the witness to the representative.
    TangentPlane reconstruct() const;
};

/// Raised when a commuting plane cannot be reduced (never expected for valid
/// input; kept as a hard failure so a sampling experiment surfaces it).
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// span{(0,0,e1,0), (0,0,0,e2)}.
TangentPlane special_plane();

/// Orthonormal basis of {Y in m : [x, Y] = 0}, starting with x / |x|.
std::vector<SpElement> centralizer_in_m(const SpElement& x);

/// Throws DomainError for non-commuting input, ClassificationError when a
/// reduction step fails its own check.
CartanClassification canonicalize(const TangentPlane& p);

/// min over s in [0, pi) of the distance between ad_h(s) span(p) and span(t0).
double special_orbit_distance(const TangentPlane& p);
bool in_special_orbit(const TangentPlane& p);

struct PlaneSample {
    TangentPlane plane;
    std::optional<Family> family_hint;
};

/// Canonical parameters drawn from their constraint sets, followed by a
/// random Ad(H) angle and a random well-conditioned basis change.
PlaneSample sample_cartan(std::uint64_t seed, std::optional<Family> family = std::nullopt, std::uint64_t index = 0);

/// Planes on or near the Ad(H)-orbit of t0: exact orbit points and
/// perturbations of size in [1e-3, 1e-1], partly re-derived through
/// centralizer_in_m.
PlaneSample sample_near_special(std::uint64_t seed, std::uint64_t index = 0);

/// Plane (x, y) with y drawn from the centralizer of x, where x is either a
/// random element of a sampled Cartan plane or a singular element of m.
PlaneSample sample_centralizer_plane(std::uint64_t seed, std::uint64_t index = 0);

}  // namespace sp2lab
