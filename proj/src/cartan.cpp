#include "sp2lab/cartan.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <numbers>

#include "sp2lab/random.hpp"

namespace sp2lab {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;
using ZVec = std::array<Complex, 3>;

constexpr double kRankTol = 1e-8;
constexpr double kCoordTol = 1e-9;
constexpr double kWitnessTol = 1e-8;
constexpr std::uint64_t kCartanStream = 0x636172746e;
constexpr std::uint64_t kNearStream = 0x6e656172;
constexpr std::uint64_t kCentralizerStream = 0x63656e74;

ZVec zvec(const SpElement& x) { return {Complex(x.v[0], x.w[0]), Complex(x.v[1], x.w[1]), Complex(x.v[2], x.w[2])}; }

/// Complex-bilinear (not Hermitian) pairing z . z'.
Complex beta(const ZVec& a, const ZVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

/// Sign making the first coordinate with |c| > kCoordTol positive.
double canonical_sign(const Vec3& a) {
    for (int i = 0; i < 3; ++i)
        if (std::abs(a[i]) > kCoordTol) return a[i] > 0.0 ? 1.0 : -1.0;
    return 1.0;
}

bool lex_greater(const Vec3& a, const Vec3& b) {
    for (int i = 0; i < 3; ++i)
        if (std::abs(a[i] - b[i]) > kCoordTol) return a[i] > b[i];
    return false;
}

SpElement combine(const TangentPlane& p, double a, double b) { return a * p.x() + b * p.y(); }
SpElement combine(const TangentPlane& p, const Eigen::Vector2d& c) { return combine(p, c(0), c(1)); }

double wrap_pi(double s) {
    double r = std::fmod(s, pi);
    if (r < 0.0) r += pi;
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

/// Parameters plus the angle s with ad_h(s) span(input) = span(representative).
struct Reduction {
    CartanParameters params;
    double angle = 0.0;
};

/// Null vector of a 3x2 matrix (right singular vector of the smallest value).
Eigen::Vector2d null_direction(const Eigen::Matrix<double, 3, 2>& m) {
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().col(1);
}

Eigen::Matrix<double, 3, 2> columns(const Vec3& a, const Vec3& b) {
    Eigen::Matrix<double, 3, 2> m;
    m << a[0], b[0], a[1], b[1], a[2], b[2];
    return m;
}

// Case I: u = 0 on the whole plane. With the right rotation the bilinear Gram
// of the z's becomes real with signature (1, -1); its eigenvectors are the
// directions whose z is real (v-factor) and purely imaginary (w-factor).
Reduction reduce_case1(const TangentPlane& o) {
    const ZVec z1 = zvec(o.x());
    const ZVec z2 = zvec(o.y());
    const Complex g00 = beta(z1, z1), g01 = beta(z1, z2), g11 = beta(z2, z2);
    const Complex sumsq = g00 * g00 + 2.0 * g01 * g01 + g11 * g11;
    double s = std::arg(sumsq) / 8.0;
    const Complex phase = std::polar(1.0, -4.0 * s);
    Mat2 sym;
    sym << (phase * g00).real(), (phase * g01).real(), (phase * g01).real(), (phase * g11).real();
    const double imag = std::max({std::abs((phase * g00).imag()), std::abs((phase * g01).imag()),
                                  std::abs((phase * g11).imag())});
    if (imag > 1e-8) throw ClassificationError("case I: Gram phase is not common");

    const Eigen::SelfAdjointEigenSolver<Mat2> eig(sym);
    if (!(eig.eigenvalues()(0) < -kRankTol && eig.eigenvalues()(1) > kRankTol))
        throw ClassificationError("case I: Gram form is not of signature (1,-1)");
    const SpElement real_dir = ad_h(s, combine(o, eig.eigenvectors().col(1)));
    const SpElement imag_dir = ad_h(s, combine(o, eig.eigenvectors().col(0)));

    Vec3 v = normalized(real_dir.v);
    Vec3 w = normalized(imag_dir.w);
    v = canonical_sign(v) * v;
    w = canonical_sign(w) * w;
    if (!lex_greater(v, w)) {
        // a quarter turn of z maps (v, i w) to (-i v, w): the roles swap
        const Vec3 old_v = v;
        v = w;
        w = canonical_sign(old_v) * old_v;
        s += pi / 4.0;
    }
    return {F1Params{v, w}, s};
}

// Case II: u-components of rank one. The u-free direction has z = c u for a
// complex c; rotating c onto the real axis gives Y = (0,0,u,0).
Reduction reduce_case2(const TangentPlane& o, const Eigen::Matrix2d& right_singular) {
    const SpElement x0 = combine(o, right_singular.col(0));
    const SpElement y0 = combine(o, right_singular.col(1));
    const ZVec zy = zvec(y0);
    double s = std::arg(beta(zy, zy)) / 4.0;
    SpElement x1 = ad_h(s, x0);
    const SpElement y1 = ad_h(s, y0);

    const double ux = norm(x1.u);
    x1 = (canonical_sign(x1.u) / ux) * x1;
    const Vec3 u = x1.u;
    const double yu = dot(y1.v, u);
    if (std::abs(yu) <= kRankTol) throw ClassificationError("case II: u-free direction is not along u");
    const SpElement y2 = (1.0 / yu) * y1;
    const SpElement x2 = x1 - dot(x1.v, u) * y2;
    Vec3 w = x2.w;
    if (canonical_sign(w) < 0.0) {
        // half turn: z -> -z, then Y -> -Y
        w = -w;
        s += pi / 2.0;
    }
    return {F2Params{u, w}, s};
}

Reduction reduce_case3_same_phase(const TangentPlane& o) {
    const ZVec z1 = zvec(o.x());
    const ZVec z2 = zvec(o.y());
    double s = std::arg(beta(z1, z1) + beta(z2, z2)) / 4.0;
    const TangentPlane r = o.rotated(s);
    const Eigen::Vector2d ca = null_direction(columns(r.x().u - r.x().v, r.y().u - r.y().v));
    const Eigen::Vector2d cb = null_direction(columns(r.x().u + r.x().v, r.y().u + r.y().v));
    Vec3 a = normalized(combine(r, ca).u);
    Vec3 b = normalized(combine(r, cb).u);
    a = canonical_sign(a) * a;
    b = canonical_sign(b) * b;
    if (!lex_greater(a, b)) {
        // z -> -z exchanges the lines {v = u} and {v = -u}
        std::swap(a, b);
        s += pi / 2.0;
    }
    return {F3Params{0.5 * (a + b), 0.5 * (a - b)}, s};
}

struct F4Candidate {
    F4Params params;
    double angle;
};

// dx becomes X = (0,u,u',0) after rotating its z onto the real axis, dy is
// rescaled so that its u-part is u'.
std::optional<F4Candidate> f4_from_directions(const SpElement& dx, const SpElement& dy) {
    const ZVec zx = zvec(dx);
    const double s = std::arg(beta(zx, zx)) / 4.0;
    SpElement x = ad_h(s, dx);
    const SpElement y1 = ad_h(s, dy);
    x = (1.0 / norm(x.u)) * x;
    const Vec3 u2 = x.v;
    const double yu = dot(y1.u, u2);
    if (std::abs(yu) <= kRankTol) return std::nullopt;
    const SpElement y = (dot(u2, u2) / yu) * y1;
    return F4Candidate{F4Params{x.u, u2, dot(y.w, x.u)}, s};
}

Reduction reduce_case3(const TangentPlane& o) {
    const Vec3 n = normalized(cross(o.x().u, o.y().u));
    const std::array<SpElement, 2> e{o.x(), o.y()};
    Mat2 q;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            q(i, j) = 0.5 * (dot(n, cross(e[i].v, e[j].w)) + dot(n, cross(e[j].v, e[i].w)));
    const Eigen::SelfAdjointEigenSolver<Mat2> eig(q);
    const double lo = eig.eigenvalues()(0);
    const double hi = eig.eigenvalues()(1);
    if (std::max(std::abs(lo), std::abs(hi)) <= kRankTol) return reduce_case3_same_phase(o);
    if (!(lo < -kRankTol && hi > kRankTol)) throw ClassificationError("case III: v x w form is not indefinite");

    // null directions of q: the two elements whose (v, w) are dependent
    const Eigen::Vector2d d1 = std::sqrt(hi) * eig.eigenvectors().col(0) + std::sqrt(-lo) * eig.eigenvectors().col(1);
    const Eigen::Vector2d d2 = std::sqrt(hi) * eig.eigenvectors().col(0) - std::sqrt(-lo) * eig.eigenvectors().col(1);
    const SpElement a = combine(o, d1);
    const SpElement b = combine(o, d2);

    std::optional<F4Candidate> best;
    for (const auto& cand : {f4_from_directions(a, b), f4_from_directions(b, a)}) {
        if (cand && (!best || cand->params.mu > best->params.mu)) best = cand;
    }
    if (!best) throw ClassificationError("case III: no admissible F4 assignment");
    F4Params p = best->params;
    double s = best->angle;
    if (std::abs(p.mu) <= kRankTol) return reduce_case3_same_phase(o);

    const double su = canonical_sign(p.u);
    p.u = su * p.u;
    p.u2 = su * p.u2;
    if (canonical_sign(p.u2) < 0.0) {
        // half turn: (u, u', mu) -> (u, -u', mu)
        p.u2 = -p.u2;
        s += pi / 2.0;
    }
    return {p, s};
}

Mat2 random_basis_change(Rng& rng) {
    for (;;) {
        Mat2 g;
        g << gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng);
        const Eigen::JacobiSVD<Mat2> svd(g);
        const auto sv = svd.singularValues();
        if (sv(1) > 0.1 && sv(0) / sv(1) < 10.0) return g;
    }
}

CartanParameters random_parameters(Rng& rng, Family f) {
    const Vec3 a = random_unit(rng);
    const Vec3 b = random_unit_orthogonal(rng, a);
    switch (f) {
        case Family::F1:
            return F1Params{a, b};
        case Family::F2:
            return F2Params{a, uniform(rng, 0.0, 2.0) * b};
        case Family::F3:
            return F3Params{a, log_uniform(rng, 0.25, 4.0) * b};
        case Family::F4: {
            const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
            return F4Params{a, log_uniform(rng, 0.25, 4.0) * b, sign * log_uniform(rng, 0.05, 20.0)};
        }
    }
    return F1Params{a, b};
}

TangentPlane dress(Rng& rng, const TangentPlane& rep) {
    const double angle = uniform(rng, 0.0, pi);
    return rep.rotated(angle).transformed(random_basis_change(rng));
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::F1:
            return "F1";
        case Family::F2:
            return "F2";
        case Family::F3:
            return "F3";
        case Family::F4:
            return "F4";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

Family family_of(const CartanParameters& p) { return static_cast<Family>(p.index()); }

TangentPlane representative(const CartanParameters& p) {
    const Vec3 zero;
    return std::visit(
        [&](const auto& q) -> TangentPlane {
            using P = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<P, F1Params>) {
                return {m_element(zero, q.v, zero), m_element(zero, zero, q.w)};
            } else if constexpr (std::is_same_v<P, F2Params>) {
                return {m_element(q.u, zero, q.w), m_element(zero, q.u, zero)};
            } else if constexpr (std::is_same_v<P, F3Params>) {
                return {m_element(q.u, q.u2, zero), m_element(q.u2, q.u, zero)};
            } else {
                return {m_element(q.u, q.u2, zero), m_element(q.u2, q.u, q.mu * q.u)};
            }
        },
        p);
}

TangentPlane CartanClassification::reconstruct() const {
    return representative().rotated(witness.angle).transformed(witness.basis);
}

TangentPlane special_plane() { return {m_element({}, e1, {}), m_element({}, {}, e2)}; }

std::vector<SpElement> centralizer_in_m(const SpElement& x) {
    if (!in_m(x)) throw DomainError("centralizer_in_m: element must lie in m");
    const double nx = bi_norm(x);
    if (nx == 0.0) throw DomainError("centralizer_in_m: zero element");

    Eigen::Matrix<double, 10, 9> ad;
    for (int k = 0; k < 9; ++k) {
        Eigen::Matrix<double, 9, 1> ek = Eigen::Matrix<double, 9, 1>::Zero();
        ek(k) = 1.0;
        const auto col = to_array(bracket(x, from_m_coordinates(ek)));
        for (int i = 0; i < 10; ++i) ad(i, k) = col[i];
    }
    const Eigen::JacobiSVD<Eigen::Matrix<double, 10, 9>> svd(ad, Eigen::ComputeFullV);
    const double cutoff = kRankTol * std::max(svd.singularValues()(0), nx);

    std::vector<Eigen::Matrix<double, 9, 1>> basis{m_coordinates(x) / nx};
    for (int k = 0; k < 9; ++k) {
        if (svd.singularValues()(k) > cutoff) continue;
        Eigen::Matrix<double, 9, 1> c = svd.matrixV().col(k);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) c -= b.dot(c) * b;
        const double n = c.norm();
        if (n > 1e-6) basis.push_back(c / n);
    }
    std::vector<SpElement> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(from_m_coordinates(b));
    return out;
}

CartanClassification canonicalize(const TangentPlane& p) {
    if (!commutes(p)) throw DomainError("canonicalize: the plane is not abelian");
    const TangentPlane o = p.orthonormalized();
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(columns(o.x().u, o.y().u), Eigen::ComputeFullV);
    const auto sv = svd.singularValues();
    const int rank = (sv(0) > kRankTol) + (sv(1) > kRankTol);

    Reduction r = rank == 0 ? reduce_case1(o) : rank == 1 ? reduce_case2(o, svd.matrixV()) : reduce_case3(o);

    CartanClassification out;
    out.family = family_of(r.params);
    out.parameters = r.params;
    out.witness.angle = wrap_pi(-r.angle);
    const TangentPlane moved = out.representative().rotated(out.witness.angle);
    out.witness.basis = basis_change(moved, p);
    if (subspace_distance(moved, p) >= kWitnessTol)
        throw ClassificationError("canonicalize: witness does not reproduce the input span");
    return out;
}

double special_orbit_distance(const TangentPlane& p) {
    const Basis9x2 target = special_plane().orthonormal_basis();
    const TangentPlane o = p.orthonormalized();
    const auto dist = [&](double s) { return subspace_distance(o.rotated(s).orthonormal_basis(), target); };

    constexpr int kGrid = 256;
    const double h = pi / kGrid;
    int best = 0;
    double best_d = dist(0.0);
    for (int i = 1; i < kGrid; ++i) {
        const double d = dist(i * h);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    // golden-section refinement on the bracketing cell pair
    constexpr double kInvPhi = 0.6180339887498949;
    double a = (best - 1) * h;
    double b = (best + 1) * h;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = dist(c);
    double fd = dist(d);
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = dist(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = dist(d);
        }
    }
    return std::min({best_d, fc, fd});
}

bool in_special_orbit(const TangentPlane& p) { return special_orbit_distance(p) < 1e-8; }

PlaneSample sample_cartan(std::uint64_t seed, std::optional<Family> family, std::uint64_t index) {
    Rng rng = make_rng(seed, kCartanStream, index);
    const Family f = family ? *family : static_cast<Family>(std::uniform_int_distribution<int>(0, 3)(rng));
    const CartanParameters params = random_parameters(rng, f);
    return {dress(rng, representative(params)), f};
}

PlaneSample sample_near_special(std::uint64_t seed, std::uint64_t index) {
    Rng rng = make_rng(seed, kNearStream, index);
    const double eps = uniform(rng, 0.0, 1.0) < 0.2 ? 0.0 : log_uniform(rng, 1e-3, 1e-1);
    const Vec3 v = normalized(e1 + eps * gaussian_vec3(rng));
    Vec3 w = e2 + eps * gaussian_vec3(rng);
    w = normalized(w - dot(w, v) * v);
    const TangentPlane plane = dress(rng, representative(F1Params{v, w}));
    if (uniform(rng, 0.0, 1.0) < 0.5) return {plane, Family::F1};

    // re-derive the partner from the centralizer of a random element
    const SpElement x = combine(plane, gaussian(rng), gaussian(rng));
    const auto cent = centralizer_in_m(x);
    SpElement y;
    for (const auto& c : cent) y += bi_inner(c, plane.y()) * c;
    const SpElement xn = cent.front();
    y -= bi_inner(xn, y) * xn;
    return {TangentPlane(x, y), Family::F1};
}

PlaneSample sample_centralizer_plane(std::uint64_t seed, std::uint64_t index) {
    Rng rng = make_rng(seed, kCentralizerStream, index);
    SpElement x;
    const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    switch (kind) {
        case 0:
            x = m_element(random_unit(rng), {}, {});
            break;
        case 1:
            x = m_element({}, random_unit(rng), {});
            break;
        case 2: {
            const Vec3 a = random_unit(rng);
            x = ad_h(uniform(rng, 0.0, pi), m_element(a, {}, uniform(rng, -2.0, 2.0) * a));
            break;
        }
        default: {
            const PlaneSample s = sample_cartan(seed, std::nullopt, index);
            x = combine(s.plane, gaussian(rng), gaussian(rng));
        }
    }
    const auto cent = centralizer_in_m(x);
    if (cent.size() < 2) throw ClassificationError("sample_centralizer_plane: centralizer is one-dimensional");
    SpElement y;
    for (std::size_t k = 1; k < cent.size(); ++k) y += gaussian(rng) * cent[k];
    return {TangentPlane(x, y), std::nullopt};
}

}  // namespace sp2lab
