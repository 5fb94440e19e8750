#pragma once

// Numerical experiments: oracle equivalence, the second/third derivative
// statements for commuting pairs, the positivity scan over t, the
// nonpositive-plane construction for arbitrary metrics and the normal-metric
// baseline. Sample loops run on worker threads; every sample owns a generator
// derived from (seed, index), so results do not depend on the thread count.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sp2lab/algebra.hpp"
#include "sp2lab/cartan.hpp"
#include "sp2lab/curvature.hpp"
#include "sp2lab/metric.hpp"
#include "sp2lab/plane.hpp"

namespace sp2lab {

/// 0 means std::thread::hardware_concurrency().
struct Parallelism {
    unsigned threads = 0;
};

/// Commuting plane for mixed sampling. Indices cycle through family samples
/// (three in five), centralizer-derived planes and near-t0 planes.
PlaneSample sample_commuting_plane(std::uint64_t seed, std::uint64_t index);

/// Nearest-rank quantiles, q in [0, 1]. Empty input gives an empty result.
std::vector<double> quantiles(std::vector<double> values, const std::vector<double>& qs);

// ---------------------------------------------------------------- oracle

using BracketFn = std::function<SpElement(const SpElement&, const SpElement&)>;

struct OracleMismatch {
    std::uint64_t index = 0;
    SpElement x, y, formula, oracle;
    double error = 0.0;
};

struct OracleReport {
    std::size_t pairs = 0;
    /// max over pairs of |formula - oracle|_inf / max(1, |x|_inf |y|_inf)
    double max_bracket_error = 0.0;
    /// bi_inner / trace_form on each factor (lambda, u, v, w), averaged
    std::array<double, 4> factor_ratio{};
    /// (max - min) / mean over every per-sample ratio
    double ratio_spread = 0.0;
    double max_invariance_error = 0.0;
    std::vector<OracleMismatch> mismatches;
    bool pass = false;
};

OracleReport run_oracle_suite(std::uint64_t seed, std::size_t pairs, const BracketFn& impl = {},
                              double tol = 1e-12);

// ---------------------------------------------------------------- lemma 0

struct Lemma0Failure {
    std::uint64_t plane_index = 0;
    std::uint64_t deformation_index = 0;
    SpElement x, y;
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, closed_form = 0.0;
};

struct Lemma0Report {
    std::size_t planes = 0;
    std::size_t deformations = 0;
    double max_abs_c0 = 0.0;
    double max_abs_c1 = 0.0;
    double min_c2 = 0.0;
    /// max |2 c2 - closed form|
    double max_closed_form_gap = 0.0;
    std::size_t failure_count = 0;
    std::vector<Lemma0Failure> failures;  // first few, by plane index
    bool pass = false;
};

/// Every plane is paired with every deformation.
Lemma0Report verify_lemma0(std::uint64_t seed, std::size_t planes, std::size_t deformations, double tol = 1e-10,
                           Parallelism par = {});

// ---------------------------------------------------------------- lemma 1

enum class Lemma1Class { GenericPositive, DegenerateCubic, Violation };
std::string_view to_string(Lemma1Class c);

struct Lemma1Verdict {
    std::uint64_t id = 0;
    std::optional<Family> family;
    bool special_orbit = false;
    double orbit_distance = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    Lemma1Class classification = Lemma1Class::Violation;
    SpElement x, y;  // orthonormalized basis the jet was taken on
    std::string note;
};

/// Jet of C for the fixed L on the orthonormalized plane, classified.
Lemma1Verdict lemma1_verdict(const TangentPlane& p, std::uint64_t id = 0, double tol = 1e-10);

struct Lemma1Config {
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    std::optional<Family> family;
    /// Draw only near-t0 planes; sample 0 is t0 itself.
    bool adversarial = false;
    double tol = 1e-10;
    Parallelism par;
};

std::vector<Lemma1Verdict> verify_lemma1(const Lemma1Config& cfg);
std::vector<Lemma1Verdict> verify_lemma1(std::uint64_t seed, std::size_t samples);

// ---------------------------------------------------------------- theorem 1

/// Sign of the cubic coefficient of C on t0 for the fixed L.
double working_sign();

struct Theorem1Row {
    double multiplier = 0.0;  // t = sigma * multiplier
    double t = 0.0;
    double min_k = 0.0;
    std::uint64_t argmin = 0;
    double min_k_over_t2 = 0.0;
    double min_k_over_t3 = 0.0;
    /// k at quantiles 0, 0.01, 0.5, 0.99, 1
    std::vector<double> k_quantiles;
    bool zero_row = false;
    bool pass = false;
    SpElement x, y;
};

struct OppositeSignProbe {
    double t = 0.0;
    double min_k = 0.0;
    std::uint64_t argmin = 0;
    bool special_orbit = false;
    double orbit_distance = 0.0;
    bool found_negative = false;
    SpElement x, y;
};

struct Theorem1Config {
    std::uint64_t seed = 1;
    std::size_t samples = 10000;
    /// Multiples of sigma; negative entries probe the opposite sign.
    std::vector<double> multipliers{1e-3, 1e-2};
    bool scan = true;
    Parallelism par;
};

struct Theorem1Report {
    double sigma = 0.0;
    double special_c3 = 0.0;
    std::vector<Theorem1Row> rows;
    std::vector<OppositeSignProbe> opposite;
    /// Geometric scan |t| = 1e-3 * 2^k along sigma.
    double largest_passing_abs_t = 0.0;
    double first_failing_abs_t = 0.0;
    std::string scan_stop;  // "curvature" or "metric"
    bool pass = false;
};

/// Throws DomainError if some requested t leaves M_t non-positive.
Theorem1Report verify_theorem1(const Theorem1Config& cfg);

// ---------------------------------------------------------------- wilking

/// M with the given blocks (stored as M = I + 1 * (blocks - I)).
DeformedMetric metric_from_blocks(const Mat3& a, const Mat3& b, const Mat3& c);

enum class WilkingCase { UFactor, BlockDependent, BlockIndependent };
std::string_view to_string(WilkingCase c);

struct WilkingCertificate {
    DeformedMetric metric;
    double lambda = 0.0;  // smallest eigenvalue of M
    SpElement x, z, y;
    double k_value = 0.0;
    WilkingCase case_tag = WilkingCase::UFactor;
    double rotation_angle = 0.0;  // BlockIndependent only
};

WilkingCertificate wilking_pair(const DeformedMetric& m);

struct WilkingChecks {
    double xz_bracket = 0.0;        // |[X, Z]|
    double y_residual = 0.0;        // |M Y - Z|
    double lower_gap = 0.0;         // <W, M W> - lambda |W|^2, expected >= 0
    double upper_gap = 0.0;         // |W|^2 / lambda - <W, M^-1 W>, expected >= 0
    double identity_residual = 0.0; // |[X,MY] + [Y,MX] + lambda [X,Y]|
    double w_lambda = 0.0;          // h-component of W
    double three_term = 0.0;        // -3/4 <W,MW> + 1/2 lambda |W|^2 + 1/4 lambda^2 <W,M^-1 W>
    double three_term_gap = 0.0;    // |three_term - C|
    bool pass = false;
};

/// W = [X, Y]. Every check within tol.
WilkingChecks verify_wilking_inequalities(const DeformedMetric& m, const WilkingCertificate& c, double tol = 1e-9);

struct WilkingRow {
    std::uint64_t index = 0;
    WilkingCase case_tag = WilkingCase::UFactor;
    double lambda = 0.0;
    double k_value = 0.0;
    double b_norm = 0.0;
    double c_norm = 0.0;
    WilkingChecks checks;
    bool pass = false;
};

struct WilkingSuiteReport {
    std::vector<WilkingRow> rows;
    std::size_t failures = 0;
    bool pass = false;
};

WilkingSuiteReport run_wilking_suite(std::uint64_t seed, std::size_t metrics, double k_tol = 1e-10,
                                     Parallelism par = {});

// ---------------------------------------------------------------- baseline

struct BaselineReport {
    std::size_t samples = 0;
    std::size_t commuting = 0;
    double min_k = 0.0;
    double max_k_commuting = 0.0;
    double min_k_noncommuting = 0.0;
    std::size_t mismatches = 0;  // commuting <=> k <= tol violated
    bool pass = false;
};

/// At t = 0: half commuting planes, half random planes of m.
BaselineReport normal_metric_baseline(std::uint64_t seed, std::size_t samples, double tol = 1e-12,
                                      Parallelism par = {});

}  // namespace sp2lab
