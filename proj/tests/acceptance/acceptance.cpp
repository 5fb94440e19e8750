// Full-size acceptance run. One PASS/FAIL line per criterion; exit code 1 if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sp2lab/cli/commands.hpp"
#include "sp2lab/curvature.hpp"
#include "sp2lab/experiments.hpp"

using namespace sp2lab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome oracle() {
    const auto start = std::chrono::steady_clock::now();
    const OracleReport r = run_oracle_suite(1, 10000);
    const double s = seconds_since(start);
    return {r.pass && r.max_bracket_error <= 1e-12 && r.ratio_spread < 1e-12 && s < 1.0,
            "max_err=" + fmt(r.max_bracket_error) + " spread=" + fmt(r.ratio_spread) + " time=" + fmt(s) + "s"};
}

Outcome exact_values() {
    const MetricDeformation L = fixed_deformation();
    const SpElement x = m_element({}, e1, {});
    const SpElement y = m_element({}, {}, e2);
    double worst = 0.0;
    for (double t : {0.01, 0.1}) {
        const DeformedMetric m(L, t);
        const double d = 1.0 - t * t;
        worst = std::max(worst, max_abs_diff(u_tensor(m, x, x), m_element(t * t / d * e1 - t / d * e2, {}, {})));
        worst = std::max(worst, max_abs_diff(bracket(y, apply_metric(m, y)), m_element(t * e1, {}, {})));
    }
    return {worst <= 1e-12, "max_err=" + fmt(worst)};
}

Outcome lemma0() {
    const auto start = std::chrono::steady_clock::now();
    const Lemma0Report r = verify_lemma0(1, 10000, 100);
    const double s = seconds_since(start);
    return {r.pass && s < 60.0, "pairs=" + std::to_string(r.planes * r.deformations) + " max|c0|=" + fmt(r.max_abs_c0) +
                                     " max|c1|=" + fmt(r.max_abs_c1) + " min_c2=" + fmt(r.min_c2) +
                                     " closed_form_gap=" + fmt(r.max_closed_form_gap) + " time=" + fmt(s) + "s"};
}

Outcome lemma1() {
    Lemma1Config mixed;
    mixed.seed = 1;
    mixed.samples = 10000;
    Lemma1Config adversarial = mixed;
    adversarial.samples = 2000;
    adversarial.adversarial = true;

    std::size_t total = 0, violations = 0, special = 0, bad_special = 0, bad_generic = 0;
    for (const auto& cfg : {mixed, adversarial}) {
        for (const Lemma1Verdict& v : verify_lemma1(cfg)) {
            ++total;
            if (v.classification == Lemma1Class::Violation) ++violations;
            if (v.special_orbit) {
                ++special;
                if (!(std::abs(v.c2) <= 1e-10 && std::abs(std::abs(v.c3) - 1.0) <= 1e-8)) ++bad_special;
            } else if (!(v.c2 > 0.0)) {
                ++bad_generic;
            }
        }
    }
    const TangentPlane case2(m_element(e3, {}, e1), m_element({}, e3, {}));
    const double closed = second_derivative_closed_form(fixed_deformation(), case2);
    const double jet = numerator_jet(fixed_deformation(), case2).derivative(2);
    const bool checkpoint = std::abs(closed - 3.5) <= 1e-10 && std::abs(jet - 3.5) <= 1e-10;
    return {violations == 0 && bad_special == 0 && bad_generic == 0 && special > 0 && checkpoint,
            "samples=" + std::to_string(total) + " special=" + std::to_string(special) +
                " violations=" + std::to_string(violations) + " case2_C''(0)=" + fmt(jet)};
}

Outcome theorem1() {
    Theorem1Config cfg;
    cfg.seed = 1;
    cfg.samples = 10000;
    const Theorem1Report r = verify_theorem1(cfg);
    bool ok = r.pass && (r.sigma == 1.0 || r.sigma == -1.0) && r.rows.size() == 2 && !r.opposite.empty();
    std::ostringstream d;
    d << "sigma=" << fmt(r.sigma);
    for (const auto& row : r.rows) {
        ok = ok && row.min_k > 0.0;
        d << " min_k(t=" << fmt(row.t) << ")=" << fmt(row.min_k);
    }
    for (const auto& p : r.opposite) {
        ok = ok && p.found_negative && p.orbit_distance < 0.2;
        d << " min_k(t=" << fmt(p.t) << ")=" << fmt(p.min_k) << " at orbit_dist=" << fmt(p.orbit_distance);
    }
    return {ok, d.str()};
}

Outcome wilking() {
    const auto start = std::chrono::steady_clock::now();
    const WilkingSuiteReport r = run_wilking_suite(1, 1000);
    const double s = seconds_since(start);
    double max_k = -1e300, max_ratio = 0.0;
    bool ok = r.pass && r.rows.size() == 1000 && s < 30.0;
    for (const auto& row : r.rows) {
        max_k = std::max(max_k, row.k_value);
        if (row.c_norm > 0.0) max_ratio = std::max(max_ratio, row.b_norm / row.c_norm);
        ok = ok && row.checks.pass && row.k_value <= 1e-10 && row.checks.xz_bracket <= 1e-10;
    }
    return {ok, "metrics=" + std::to_string(r.rows.size()) + " max_k=" + fmt(max_k) +
                    " max|B|/|C|=" + fmt(max_ratio) + " time=" + fmt(s) + "s"};
}

Outcome baseline() {
    const BaselineReport r = normal_metric_baseline(1, 10000);
    return {r.pass && r.min_k >= -1e-12 && r.mismatches == 0,
            "samples=" + std::to_string(r.samples) + " commuting=" + std::to_string(r.commuting) +
                " min_k=" + fmt(r.min_k) + " max_k_commuting=" + fmt(r.max_k_commuting)};
}

Outcome determinism() {
    const std::vector<std::vector<std::string>> runs{
        {"oracle", "--samples", "2000"},
        {"lemma0", "--samples", "200"},
        {"lemma1", "--samples", "2000"},
        {"lemma1", "--samples", "500", "--adversarial"},
        {"theorem1", "--samples", "2000"},
        {"wilking", "--samples", "200"},
        {"baseline", "--samples", "2000"},
        {"classify", "--x=0,0,0,1,0,0,0,0,0", "--y=0,0,0,0,0,0,0,1,0"},
        {"lemma1", "--samples", "300", "--format", "csv"},
        {"wilking", "--samples", "20", "--format", "text"}};
    std::size_t same = 0;
    std::string first_diff;
    for (const auto& args : runs) {
        std::string payload[2];
        for (int k = 0; k < 2; ++k) {
            std::vector<std::string> full{"sp2lab"};
            full.insert(full.end(), args.begin(), args.end());
            full.push_back("--seed=7");
            std::vector<const char*> argv;
            for (const auto& a : full) argv.push_back(a.c_str());
            std::ostringstream out, err;
            cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
            payload[k] = out.str();
            // text and csv carry no timing
            if (args.size() < 4 || args[args.size() - 2] != "--format")
                payload[k] = cli::without_timing(cli::Json::parse(payload[k])).dump();
        }
        if (payload[0] == payload[1] && !payload[0].empty())
            ++same;
        else if (first_diff.empty())
            first_diff = args.front();
    }
    return {same == runs.size(), "identical=" + std::to_string(same) + "/" + std::to_string(runs.size()) +
                                     (first_diff.empty() ? "" : " first_diff=" + first_diff)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 oracle equivalence", oracle},     {"2 exact values", exact_values},
        {"3 lemma0 suite", lemma0},           {"4 lemma1 dichotomy", lemma1},
        {"5 theorem1 scan", theorem1},        {"6 wilking suite", wilking},
        {"7 normal-metric baseline", baseline}, {"8 determinism", determinism}};
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
