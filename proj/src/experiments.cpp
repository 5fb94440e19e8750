#include "sp2lab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "sp2lab/random.hpp"

namespace sp2lab {

namespace {

constexpr std::uint64_t kOracleStream = 0x6f7261636c65;
constexpr std::uint64_t kBaselineStream = 0x6e6f726d616c;
constexpr std::size_t kMaxReportedFailures = 20;

// Runs f(i) for i in [0, n). The exception of the lowest failing index is
// rethrown, so error reporting does not depend on scheduling either.
template <class F>
void parallel_for(std::size_t n, Parallelism par, F&& f) {
    unsigned workers = par.threads ? par.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = std::numeric_limits<std::size_t>::max();
    std::exception_ptr error;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                f(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    error = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double inf_norm(const SpElement& x) {
    double m = 0.0;
    for (double c : to_array(x)) m = std::max(m, std::abs(c));
    return m;
}

/// Index of the smallest value; the lowest index wins ties.
std::size_t argmin(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

std::vector<TangentPlane> orthonormal_samples(std::uint64_t seed, std::size_t n, Parallelism par) {
    std::vector<std::optional<TangentPlane>> tmp(n);
    parallel_for(n, par, [&](std::size_t i) { tmp[i] = sample_commuting_plane(seed, i).plane.orthonormalized(); });
    std::vector<TangentPlane> out;
    out.reserve(n);
    for (auto& p : tmp) out.push_back(*p);
    return out;
}

std::vector<double> curvatures(const DeformedMetric& m, const std::vector<TangentPlane>& planes, Parallelism par) {
    std::vector<double> k(planes.size());
    parallel_for(planes.size(), par, [&](std::size_t i) { k[i] = sectional_curvature(m, planes[i]).k_value; });
    return k;
}

}  // namespace

PlaneSample sample_commuting_plane(std::uint64_t seed, std::uint64_t index) {
    switch (index % 5) {
        case 3:
            return sample_centralizer_plane(seed, index);
        case 4:
            return sample_near_special(seed, index);
        default:
            return sample_cartan(seed, std::nullopt, index);
    }
}

std::vector<double> quantiles(std::vector<double> values, const std::vector<double>& qs) {
    std::vector<double> out;
    if (values.empty()) return out;
    std::sort(values.begin(), values.end());
    const double last = static_cast<double>(values.size() - 1);
    for (double q : qs) {
        const auto i = static_cast<std::size_t>(std::lround(std::clamp(q, 0.0, 1.0) * last));
        out.push_back(values[i]);
    }
    return out;
}

// ---------------------------------------------------------------- oracle

OracleReport run_oracle_suite(std::uint64_t seed, std::size_t pairs, const BracketFn& impl, double tol) {
    const BracketFn br = impl ? impl : BracketFn([](const SpElement& a, const SpElement& b) { return bracket(a, b); });
    OracleReport r;
    r.pairs = pairs;
    for (std::size_t i = 0; i < pairs; ++i) {
        Rng rng = make_rng(seed, kOracleStream, i);
        const SpElement x = random_element(rng);
        const SpElement y = random_element(rng);
        const SpElement z = random_element(rng);
        const SpElement f = br(x, y);
        const SpElement o = bracket_oracle(x, y);
        const double err = max_abs_diff(f, o) / std::max(1.0, inf_norm(x) * inf_norm(y));
        r.max_bracket_error = std::max(r.max_bracket_error, err);
        if (err > tol && r.mismatches.size() < kMaxReportedFailures) r.mismatches.push_back({i, x, y, f, o, err});

        const double inv = bi_inner(br(z, x), y) + bi_inner(x, br(z, y));
        const double scale = std::max(1.0, inf_norm(x) * inf_norm(y) * inf_norm(z));
        r.max_invariance_error = std::max(r.max_invariance_error, std::abs(inv) / scale);
    }

    // bi_inner / (-Re tr) on single-factor elements and on full elements
    std::vector<double> ratios;
    std::array<double, 4> sums{};
    std::array<int, 4> counts{};
    const std::size_t per_factor = std::max<std::size_t>(1, std::min<std::size_t>(pairs, 1000));
    for (std::size_t i = 0; i < per_factor; ++i) {
        Rng rng = make_rng(seed, kOracleStream + 1, i);
        const SpElement g = random_element(rng);
        const std::array<SpElement, 5> parts{SpElement{g.lambda, {}, {}, {}}, SpElement{0.0, g.u, {}, {}},
                                             SpElement{0.0, {}, g.v, {}}, SpElement{0.0, {}, {}, g.w}, g};
        for (std::size_t f = 0; f < parts.size(); ++f) {
            const double ratio = bi_inner(parts[f], parts[f]) / trace_form(parts[f], parts[f]);
            ratios.push_back(ratio);
            if (f < 4) {
                sums[f] += ratio;
                ++counts[f];
            }
        }
    }
    for (int f = 0; f < 4; ++f) r.factor_ratio[f] = sums[f] / counts[f];
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    double mean = 0.0;
    for (double q : ratios) mean += q;
    mean /= static_cast<double>(ratios.size());
    r.ratio_spread = (*hi - *lo) / mean;

    r.pass = r.max_bracket_error <= tol && r.ratio_spread < tol && r.max_invariance_error <= tol;
    return r;
}

// ---------------------------------------------------------------- lemma 0

Lemma0Report verify_lemma0(std::uint64_t seed, std::size_t planes, std::size_t deformations, double tol,
                           Parallelism par) {
    std::vector<MetricDeformation> defs;
    defs.reserve(deformations);
    for (std::size_t j = 0; j < deformations; ++j) defs.push_back(random_deformation(seed, j));

    struct PlaneResult {
        double c0 = 0.0, c1 = 0.0, c2 = std::numeric_limits<double>::infinity(), gap = 0.0;
        std::size_t failure_count = 0;
        std::vector<Lemma0Failure> failures;
    };
    std::vector<PlaneResult> res(planes);
    parallel_for(planes, par, [&](std::size_t i) {
        const TangentPlane p = sample_commuting_plane(seed, i).plane.orthonormalized();
        PlaneResult& pr = res[i];
        for (std::size_t j = 0; j < deformations; ++j) {
            const Jet jet = numerator_jet(defs[j], p);
            const double closed = second_derivative_closed_form(defs[j], p);
            const double gap = std::abs(2.0 * jet[2] - closed);
            pr.c0 = std::max(pr.c0, std::abs(jet[0]));
            pr.c1 = std::max(pr.c1, std::abs(jet[1]));
            pr.c2 = std::min(pr.c2, jet[2]);
            pr.gap = std::max(pr.gap, gap);
            if (std::abs(jet[0]) > tol || std::abs(jet[1]) > tol || jet[2] < -tol || gap > tol) {
                ++pr.failure_count;
                if (pr.failures.size() < kMaxReportedFailures)
                    pr.failures.push_back({i, j, p.x(), p.y(), jet[0], jet[1], jet[2], closed});
            }
        }
    });

    Lemma0Report r;
    r.planes = planes;
    r.deformations = deformations;
    r.min_c2 = std::numeric_limits<double>::infinity();
    for (const auto& pr : res) {
        r.max_abs_c0 = std::max(r.max_abs_c0, pr.c0);
        r.max_abs_c1 = std::max(r.max_abs_c1, pr.c1);
        r.min_c2 = std::min(r.min_c2, pr.c2);
        r.max_closed_form_gap = std::max(r.max_closed_form_gap, pr.gap);
        r.failure_count += pr.failure_count;
        for (const auto& f : pr.failures)
            if (r.failures.size() < kMaxReportedFailures) r.failures.push_back(f);
    }
    if (planes == 0 || deformations == 0) r.min_c2 = 0.0;
    r.pass = r.failure_count == 0 && planes > 0 && deformations > 0;
    return r;
}

// ---------------------------------------------------------------- lemma 1

std::string_view to_string(Lemma1Class c) {
    switch (c) {
        case Lemma1Class::GenericPositive:
            return "GENERIC_POSITIVE";
        case Lemma1Class::DegenerateCubic:
            return "DEGENERATE_CUBIC";
        case Lemma1Class::Violation:
            return "VIOLATION";
    }
    return "?";
}

Lemma1Verdict lemma1_verdict(const TangentPlane& p, std::uint64_t id, double tol) {
    const TangentPlane o = p.orthonormalized();
    Lemma1Verdict v;
    v.id = id;
    v.x = o.x();
    v.y = o.y();
    const Jet jet = numerator_jet(fixed_deformation(), o);
    v.c2 = jet[2];
    v.c3 = jet[3];
    v.orbit_distance = special_orbit_distance(o);
    v.special_orbit = v.orbit_distance < 1e-8;
    try {
        v.family = canonicalize(o).family;
    } catch (const std::exception& e) {
        v.note = e.what();
        v.classification = Lemma1Class::Violation;
        return v;
    }
    if (!v.special_orbit && v.c2 > tol)
        v.classification = Lemma1Class::GenericPositive;
    else if (v.special_orbit && std::abs(v.c2) <= tol && std::abs(v.c3) > tol)
        v.classification = Lemma1Class::DegenerateCubic;
    else
        v.classification = Lemma1Class::Violation;
    return v;
}

std::vector<Lemma1Verdict> verify_lemma1(const Lemma1Config& cfg) {
    if (cfg.adversarial && cfg.family && *cfg.family != Family::F1)
        throw DomainError("verify_lemma1: near-t0 sampling only produces F1 planes");
    std::vector<Lemma1Verdict> out(cfg.samples);
    parallel_for(cfg.samples, cfg.par, [&](std::size_t i) {
        TangentPlane p = special_plane();
        if (cfg.adversarial) {
            if (i > 0) p = sample_near_special(cfg.seed, i).plane;
        } else if (cfg.family) {
            p = sample_cartan(cfg.seed, cfg.family, i).plane;
        } else {
            p = sample_commuting_plane(cfg.seed, i).plane;
        }
        out[i] = lemma1_verdict(p, i, cfg.tol);
    });
    return out;
}

std::vector<Lemma1Verdict> verify_lemma1(std::uint64_t seed, std::size_t samples) {
    Lemma1Config cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    return verify_lemma1(cfg);
}

// ---------------------------------------------------------------- theorem 1

double working_sign() {
    const double c3 = numerator_jet(fixed_deformation(), special_plane())[3];
    return c3 > 0.0 ? 1.0 : -1.0;
}

Theorem1Report verify_theorem1(const Theorem1Config& cfg) {
    const MetricDeformation L = fixed_deformation();
    Theorem1Report r;
    r.special_c3 = numerator_jet(L, special_plane())[3];
    r.sigma = r.special_c3 > 0.0 ? 1.0 : -1.0;

    for (double m : cfg.multipliers)
        if (!is_positive_definite(L, r.sigma * m) || !is_positive_definite(L, -r.sigma * m))
            throw DomainError("verify_theorem1: M_t is not positive definite for t = " + std::to_string(r.sigma * m));

    const std::vector<TangentPlane> planes = orthonormal_samples(cfg.seed, cfg.samples, cfg.par);
    if (planes.empty()) throw DomainError("verify_theorem1: at least one sample is required");

    bool pass = true;
    for (double m : cfg.multipliers) {
        Theorem1Row row;
        row.multiplier = m;
        row.t = r.sigma * m;
        const std::vector<double> k = curvatures(DeformedMetric(L, row.t), planes, cfg.par);
        row.argmin = argmin(k);
        row.min_k = k[row.argmin];
        row.x = planes[row.argmin].x();
        row.y = planes[row.argmin].y();
        row.k_quantiles = quantiles(k, {0.0, 0.01, 0.5, 0.99, 1.0});
        if (m == 0.0) {
            // normal metric: commuting planes are flat
            row.zero_row = true;
            row.pass = std::abs(row.min_k) <= 1e-12;
        } else {
            row.min_k_over_t2 = row.min_k / (row.t * row.t);
            row.min_k_over_t3 = row.min_k / std::abs(row.t * row.t * row.t);
            row.pass = row.min_k > 0.0;
        }
        pass = pass && row.pass;
        r.rows.push_back(row);
    }

    for (double m : cfg.multipliers) {
        if (!(m > 0.0)) continue;
        OppositeSignProbe probe;
        probe.t = -r.sigma * m;
        const std::vector<double> k = curvatures(DeformedMetric(L, probe.t), planes, cfg.par);
        probe.argmin = argmin(k);
        probe.min_k = k[probe.argmin];
        probe.x = planes[probe.argmin].x();
        probe.y = planes[probe.argmin].y();
        probe.orbit_distance = special_orbit_distance(planes[probe.argmin]);
        probe.special_orbit = probe.orbit_distance < 1e-8;
        probe.found_negative = probe.min_k < 0.0;
        pass = pass && probe.found_negative;
        r.opposite.push_back(probe);
    }

    if (cfg.scan) {
        double abs_t = 1e-3;
        for (int step = 0; step < 40; ++step, abs_t *= 2.0) {
            if (!is_positive_definite(L, r.sigma * abs_t)) {
                r.scan_stop = "metric";
                break;
            }
            const std::vector<double> k = curvatures(DeformedMetric(L, r.sigma * abs_t), planes, cfg.par);
            if (!(*std::min_element(k.begin(), k.end()) > 0.0)) {
                r.scan_stop = "curvature";
                break;
            }
            r.largest_passing_abs_t = abs_t;
        }
        r.first_failing_abs_t = abs_t;
    }
    r.pass = pass;
    return r;
}

// ---------------------------------------------------------------- wilking

DeformedMetric metric_from_blocks(const Mat3& a, const Mat3& b, const Mat3& c) {
    MetricDeformation d;
    d.a = a - Mat3::Identity();
    d.b = b;
    d.c = c - Mat3::Identity();
    return {d, 1.0};
}

std::string_view to_string(WilkingCase c) {
    switch (c) {
        case WilkingCase::UFactor:
            return "u-factor";
        case WilkingCase::BlockDependent:
            return "vw-dependent";
        case WilkingCase::BlockIndependent:
            return "vw-independent";
    }
    return "?";
}

WilkingCertificate wilking_pair(const DeformedMetric& m) {
    const Eigen::SelfAdjointEigenSolver<Mat3> ea(m.a_block());
    const Eigen::SelfAdjointEigenSolver<Mat6> ev(m.vw_block());
    if (ea.info() != Eigen::Success || ev.info() != Eigen::Success)
        throw std::runtime_error("wilking_pair: eigen decomposition failed");
    const double lambda = std::min(ea.eigenvalues()(0), ev.eigenvalues()(0));
    const double scale = std::max(ea.eigenvalues()(2), ev.eigenvalues()(5));
    const double cut = lambda + 1e-9 * scale;

    // eigenspace of the smallest eigenvalue, embedded in (u, v, w) coordinates
    std::vector<Eigen::Matrix<double, 9, 1>> cols;
    for (int i = 0; i < 3; ++i)
        if (ea.eigenvalues()(i) <= cut) {
            Eigen::Matrix<double, 9, 1> c = Eigen::Matrix<double, 9, 1>::Zero();
            c.head<3>() = ea.eigenvectors().col(i);
            cols.push_back(c);
        }
    for (int i = 0; i < 6; ++i)
        if (ev.eigenvalues()(i) <= cut) {
            Eigen::Matrix<double, 9, 1> c = Eigen::Matrix<double, 9, 1>::Zero();
            c.tail<6>() = ev.eigenvectors().col(i);
            cols.push_back(c);
        }
    Eigen::Matrix<double, 9, Eigen::Dynamic> e(9, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) e.col(static_cast<Eigen::Index>(i)) = cols[i];
    const Eigen::Matrix<double, 9, 9> proj = e * e.transpose();

    // deterministic pick: projection of the standard basis vector that
    // survives best, then largest component positive
    int best = 0;
    for (int k = 1; k < 9; ++k)
        if (proj(k, k) > proj(best, best) + 1e-12) best = k;
    Eigen::Matrix<double, 9, 1> xc = proj.col(best).normalized();
    Eigen::Index big = 0;
    xc.cwiseAbs().maxCoeff(&big);
    if (xc(big) < 0.0) xc = -xc;
    const SpElement x = from_m_coordinates(xc);

    WilkingCertificate cert{m, lambda, x, {}, {}, 0.0, WilkingCase::UFactor, 0.0};
    if (best < 3) {
        cert.z = m_element({}, x.u, {});
    } else {
        Eigen::Matrix<double, 2, 3> vw;
        vw << x.v[0], x.v[1], x.v[2], x.w[0], x.w[1], x.w[2];
        const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(vw);
        if (svd.singularValues()(1) <= 1e-8 * svd.singularValues()(0)) {
            cert.case_tag = WilkingCase::BlockDependent;
            cert.z = norm(x.v) >= norm(x.w) ? m_element(x.v, {}, {}) : m_element(x.w, {}, {});
        } else {
            cert.case_tag = WilkingCase::BlockIndependent;
            const double s = std::atan2(2.0 * dot(x.v, x.w), dot(x.v, x.v) - dot(x.w, x.w)) / 4.0;
            const SpElement xr = ad_h(s, x);
            cert.rotation_angle = s;
            cert.z = ad_h(-s, m_element({}, xr.v, {}));
        }
    }
    cert.y = inverse_apply(m, cert.z);
    const SpElement y_unit = (1.0 / bi_norm(cert.y)) * cert.y;
    cert.k_value = sectional_curvature(m, TangentPlane(x, y_unit)).k_value;
    return cert;
}

WilkingChecks verify_wilking_inequalities(const DeformedMetric& m, const WilkingCertificate& c, double tol) {
    WilkingChecks k;
    const double lambda = c.lambda;
    const SpElement& x = c.x;
    const SpElement& y = c.y;
    const SpElement w = bracket(x, y);
    const SpElement wm = project_m(w);
    const double ww = bi_inner(w, w);
    const double mnorm = dense_matrix(m).norm();
    // magnitudes of the vector and quadratic quantities involved
    const double vec_scale = std::max(1.0, bi_norm(x) * bi_norm(y) * mnorm);
    const double quad_scale = std::max(1.0, vec_scale * vec_scale / std::max(lambda, 1e-300));

    k.xz_bracket = bi_norm(bracket(x, c.z));
    k.y_residual = bi_norm(apply_metric(m, y) - c.z);
    k.w_lambda = std::abs(w.lambda);
    const double wmw = bi_inner(wm, apply_metric(m, wm));
    const double wiw = bi_inner(wm, inverse_apply(m, wm));
    k.lower_gap = wmw - lambda * ww;
    k.upper_gap = ww / lambda - wiw;
    k.identity_residual =
        bi_norm(bracket(x, apply_metric(m, y)) + bracket(y, apply_metric(m, x)) + lambda * w);
    k.three_term = -0.75 * wmw + 0.5 * lambda * ww + 0.25 * lambda * lambda * wiw;
    k.three_term_gap = std::abs(k.three_term - numerator(m, TangentPlane(x, y)));

    k.pass = k.xz_bracket <= tol * vec_scale && k.y_residual <= tol * vec_scale && k.w_lambda <= tol * vec_scale &&
             k.lower_gap >= -tol * quad_scale && k.upper_gap >= -tol * quad_scale &&
             k.identity_residual <= tol * vec_scale && k.three_term <= tol * quad_scale &&
             k.three_term_gap <= tol * quad_scale;
    return k;
}

WilkingSuiteReport run_wilking_suite(std::uint64_t seed, std::size_t metrics, double k_tol, Parallelism par) {
    WilkingSuiteReport r;
    r.rows.resize(metrics);
    parallel_for(metrics, par, [&](std::size_t i) {
        const DeformedMetric m(random_admissible_metric(seed, i), 1.0);
        const WilkingCertificate cert = wilking_pair(m);
        WilkingRow& row = r.rows[i];
        row.index = i;
        row.case_tag = cert.case_tag;
        row.lambda = cert.lambda;
        row.k_value = cert.k_value;
        row.b_norm = m.deformation().b.norm();
        row.c_norm = m.deformation().c.norm();
        row.checks = verify_wilking_inequalities(m, cert);
        row.pass = row.checks.pass && cert.k_value <= k_tol && row.checks.xz_bracket <= 1e-10;
    });
    for (const auto& row : r.rows) r.failures += row.pass ? 0 : 1;
    r.pass = r.failures == 0 && metrics > 0;
    return r;
}

// ---------------------------------------------------------------- baseline

BaselineReport normal_metric_baseline(std::uint64_t seed, std::size_t samples, double tol, Parallelism par) {
    const DeformedMetric id = DeformedMetric::identity();
    std::vector<double> k(samples);
    std::vector<char> comm(samples);
    parallel_for(samples, par, [&](std::size_t i) {
        std::optional<TangentPlane> p;
        if (i % 2 == 0) {
            p = sample_commuting_plane(seed, i / 2).plane;
        } else {
            Rng rng = make_rng(seed, kBaselineStream, i);
            p = TangentPlane(random_m_element(rng), random_m_element(rng));
        }
        comm[i] = commutes(*p);
        k[i] = sectional_curvature(id, p->orthonormalized()).k_value;
    });

    BaselineReport r;
    r.samples = samples;
    r.min_k = std::numeric_limits<double>::infinity();
    r.max_k_commuting = -std::numeric_limits<double>::infinity();
    r.min_k_noncommuting = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        r.min_k = std::min(r.min_k, k[i]);
        if (comm[i]) {
            ++r.commuting;
            r.max_k_commuting = std::max(r.max_k_commuting, k[i]);
        } else {
            r.min_k_noncommuting = std::min(r.min_k_noncommuting, k[i]);
        }
        if (static_cast<bool>(comm[i]) != (k[i] <= tol)) ++r.mismatches;
    }
    r.pass = samples > 0 && r.min_k >= -tol && r.mismatches == 0;
    return r;
}

}  // namespace sp2lab
