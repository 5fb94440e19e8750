#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "sp2lab/cartan.hpp"
#include "sp2lab/experiments.hpp"
#include "sp2lab/random.hpp"

using namespace sp2lab;

namespace {

std::array<double, 3> as_array(const Vec3& v) { return {v[0], v[1], v[2]}; }

double vec_gap(const Vec3& a, const Vec3& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// canonical parameters as one comparable vector
std::vector<double> flat(const CartanParameters& p) {
    return std::visit(
        [](const auto& q) {
            std::vector<double> out;
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, F1Params>) {
                for (double c : as_array(q.v)) out.push_back(c);
                for (double c : as_array(q.w)) out.push_back(c);
            } else if constexpr (std::is_same_v<T, F2Params>) {
                for (double c : as_array(q.u)) out.push_back(c);
                for (double c : as_array(q.w)) out.push_back(c);
            } else {
                for (double c : as_array(q.u)) out.push_back(c);
                for (double c : as_array(q.u2)) out.push_back(c);
                if constexpr (std::is_same_v<T, F4Params>) out.push_back(q.mu);
            }
            return out;
        },
        p);
}

void check_reconstruction(const TangentPlane& p, const CartanClassification& c, double tol = 1e-8) {
    const TangentPlane r = c.reconstruct();
    const double scale = 1.0 + bi_norm(p.x()) + bi_norm(p.y());
    CHECK(max_abs_diff(r.x(), p.x()) <= tol * scale);
    CHECK(max_abs_diff(r.y(), p.y()) <= tol * scale);
    CHECK(commutes(c.representative()));
}

}  // namespace

TEST_CASE("commutes: fixed examples") {
    CHECK(commutes(special_plane()));
    CHECK(commutes(TangentPlane(m_element(e3, {}, e1), m_element({}, e3, {}))));
    CHECK_FALSE(commutes(TangentPlane(m_element({}, e1, {}), m_element({}, e2, {}))));
    CHECK_FALSE(commutes(TangentPlane(m_element({}, e1, {}), m_element({}, {}, e1))));
}

TEST_CASE("centralizer_in_m") {
    SUBCASE("(0, 0, e1, 0) is singular") {
        const SpElement x = m_element({}, e1, {});
        const auto basis = centralizer_in_m(x);
        REQUIRE(basis.size() >= 2);
        CHECK(max_abs_diff(basis.front(), x) < 1e-12);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(bi_norm(bracket(x, basis[i])) < 1e-10);
            CHECK(in_m(basis[i]));
            for (std::size_t j = 0; j < basis.size(); ++j)
                CHECK(bi_inner(basis[i], basis[j]) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
        }
        // contains the other generator of t0
        const SpElement y = m_element({}, {}, e2);
        double captured = 0.0;
        for (const auto& b : basis) captured += std::pow(bi_inner(b, y), 2);
        CHECK(captured == doctest::Approx(bi_inner(y, y)).epsilon(1e-12));
    }
    SUBCASE("generic element of a Cartan plane: exactly a plane") {
        for (std::uint64_t i = 0; i < 50; ++i) {
            const TangentPlane p = sample_cartan(41, std::nullopt, i).plane;
            Rng rng = make_rng(41, 1, i);
            const SpElement x = gaussian(rng) * p.x() + gaussian(rng) * p.y();
            const auto basis = centralizer_in_m(x);
            CHECK(basis.size() == 2);
            for (const auto& b : basis) CHECK(bi_norm(bracket(x, b)) < 1e-9 * bi_norm(x));
        }
    }
    CHECK_THROWS_AS(centralizer_in_m(SpElement{}), DomainError);
}

TEST_CASE("canonicalize: t0 is F1 with the identity witness") {
    const TangentPlane t0 = special_plane();
    const CartanClassification c = canonicalize(t0);
    CHECK(c.family == Family::F1);
    const auto& q = std::get<F1Params>(c.parameters);
    CHECK(vec_gap(q.v, e1) < 1e-12);
    CHECK(vec_gap(q.w, e2) < 1e-12);
    CHECK(c.witness.angle == doctest::Approx(0.0).scale(1.0));
    CHECK((c.witness.basis - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(in_special_orbit(t0));
    CHECK(special_orbit_distance(t0) < 1e-12);
}

TEST_CASE("canonicalize: F2 round trip") {
    const F2Params params{e1, 0.7 * e3};
    const TangentPlane p = representative(params).rotated(0.4);
    const CartanClassification c = canonicalize(p);
    CHECK(c.family == Family::F2);
    check_reconstruction(p, c);
    CHECK_FALSE(in_special_orbit(p));
}

TEST_CASE("canonicalize: F4 fixed example") {
    const double mu = 0.5;
    const TangentPlane q(m_element(e1, e2, {}), m_element(e2, e1, mu * e1));
    REQUIRE(commutes(q));
    const CartanClassification c = canonicalize(q);
    CHECK(c.family == Family::F4);
    CHECK(std::abs(std::get<F4Params>(c.parameters).mu) > 1e-6);
    check_reconstruction(q, c);
}

TEST_CASE("in_special_orbit") {
    CHECK(in_special_orbit(special_plane().rotated(1.1)));
    CHECK(in_special_orbit(special_plane().transformed((Mat2() << 2.0, 1.0, -0.5, 3.0).finished())));
    CHECK_FALSE(in_special_orbit(TangentPlane(m_element(e3, {}, e1), m_element({}, e3, {}))));
    // a different F1 plane: (e1, e3) instead of (e1, e2)
    CHECK_FALSE(in_special_orbit(TangentPlane(m_element({}, e1, {}), m_element({}, {}, e3))));
    const TangentPlane f3 = representative(F3Params{e1, e2});
    CHECK_FALSE(in_special_orbit(f3));
    CHECK(special_orbit_distance(f3) > 1e-3);
}

TEST_CASE("sampled planes commute and round-trip") {
    std::array<int, 4> seen{};
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const PlaneSample s = sample_commuting_plane(42, i);
        REQUIRE(commutes(s.plane));
        if (i % 10 != 0) continue;
        const CartanClassification c = canonicalize(s.plane);
        ++seen[static_cast<int>(c.family)];
        if (s.family_hint) CHECK(c.family == *s.family_hint);
        check_reconstruction(s.plane, c);
    }
    for (int n : seen) CHECK(n > 0);
}

TEST_CASE("per-family round trip") {
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4}) {
        for (std::uint64_t i = 0; i < 500; ++i) {
            const PlaneSample s = sample_cartan(43, f, i);
            const CartanClassification c = canonicalize(s.plane);
            INFO("family " << to_string(f) << " index " << i);
            CHECK(c.family == f);
            check_reconstruction(s.plane, c);
        }
    }
}

TEST_CASE("canonical parameters are Ad(H) and basis invariant") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        const PlaneSample s = sample_cartan(44, std::nullopt, i);
        Rng rng = make_rng(44, 1, i);
        const double angle = uniform(rng, 0.0, std::numbers::pi);
        Mat2 g;
        do {
            g << gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng);
        } while (std::abs(g.determinant()) < 0.3);
        const CartanClassification a = canonicalize(s.plane);
        const CartanClassification b = canonicalize(s.plane.rotated(angle).transformed(g));
        REQUIRE(a.family == b.family);
        const auto fa = flat(a.parameters), fb = flat(b.parameters);
        double gap = 0.0;
        for (std::size_t k = 0; k < fa.size(); ++k) gap = std::max(gap, std::abs(fa[k] - fb[k]));
        CHECK(gap < 1e-7);
        CHECK(in_special_orbit(s.plane) == in_special_orbit(s.plane.rotated(angle).transformed(g)));
    }
}

TEST_CASE("near-special and centralizer samples") {
    int exact = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const PlaneSample s = sample_near_special(45, i);
        REQUIRE(commutes(s.plane));
        const CartanClassification c = canonicalize(s.plane);
        check_reconstruction(s.plane, c);
        if (in_special_orbit(s.plane)) {
            ++exact;
            CHECK(c.family == Family::F1);
        } else {
            CHECK(special_orbit_distance(s.plane) > 0.0);
        }
        const PlaneSample z = sample_centralizer_plane(45, i);
        REQUIRE(commutes(z.plane));
        check_reconstruction(z.plane, canonicalize(z.plane));
    }
    CHECK(exact > 100);
    CHECK(exact < 400);
}

TEST_CASE("F1 planes are the orthogonal frames, only t0's orbit is special among them") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const PlaneSample s = sample_cartan(46, Family::F1, i);
        const auto q = std::get<F1Params>(canonicalize(s.plane).parameters);
        CHECK(std::abs(dot(q.v, q.w)) < 1e-10);
        CHECK(norm(q.v) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm(q.w) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // in the special orbit iff the canonical form is t0's
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const PlaneSample s = sample_commuting_plane(47, i);
        const CartanClassification c = canonicalize(s.plane);
        const bool t0_form = subspace_distance(c.representative(), special_plane()) < 1e-8;
        CHECK(in_special_orbit(s.plane) == t0_form);
    }
}

TEST_CASE("determinism") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        const PlaneSample a = sample_commuting_plane(48, i), b = sample_commuting_plane(48, i);
        CHECK(a.plane.x() == b.plane.x());
        CHECK(a.plane.y() == b.plane.y());
        CHECK(flat(canonicalize(a.plane).parameters) == flat(canonicalize(b.plane).parameters));
    }
}

TEST_CASE("canonicalize rejects non-commuting planes") {
    CHECK_THROWS_AS(canonicalize(TangentPlane(m_element({}, e1, {}), m_element({}, e2, {}))), DomainError);
}

TEST_CASE("family names") {
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4}) CHECK(parse_family(to_string(f)) == f);
    CHECK_FALSE(parse_family("F5").has_value());
}
