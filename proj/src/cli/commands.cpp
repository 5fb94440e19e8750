#include "sp2lab/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

#include "sp2lab/experiments.hpp"

namespace sp2lab::cli {

namespace {

constexpr std::size_t kLemma0Deformations = 100;

Json config_json(const RunConfig& c, std::size_t samples) {
    Json j;
    j["seed"] = c.seed;
    j["samples"] = samples;
    j["t"] = c.t_values;
    j["tol"] = c.tol ? Json(*c.tol) : Json(nullptr);
    j["family"] = c.family ? Json(std::string(to_string(*c.family))) : Json(nullptr);
    j["adversarial"] = c.adversarial;
    j["format"] = c.format;
    if (!c.x.empty()) j["x"] = c.x;
    if (!c.y.empty()) j["y"] = c.y;
    if (c.corrupt_bracket) j["corrupt_bracket"] = true;
    return j;
}

Json stats_json(const std::vector<double>& values) {
    if (values.empty()) return nullptr;
    const auto q = quantiles(values, {0.0, 0.01, 0.5, 0.99, 1.0});
    return {{"min", q[0]}, {"p01", q[1]}, {"p50", q[2]}, {"p99", q[3]}, {"max", q[4]}};
}

Json family_json(const std::optional<Family>& f) {
    return f ? Json(std::string(to_string(*f))) : Json(nullptr);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

// ---------------------------------------------------------------- oracle

Json cmd_oracle(const RunConfig& c, std::size_t n) {
    const double tol = c.tol.value_or(1e-12);
    BracketFn impl;
    if (c.corrupt_bracket) {
        // negative control: wrong sign on the h-component
        impl = [](const SpElement& a, const SpElement& b) {
            SpElement r = bracket(a, b);
            r.lambda = -r.lambda;
            return r;
        };
    }
    const OracleReport o = run_oracle_suite(c.seed, n, impl, tol);
    Json r = make_report("oracle");
    r["summary"] = {{"pairs", o.pairs},
                    {"tol", tol},
                    {"max_bracket_error", o.max_bracket_error},
                    {"max_invariance_error", o.max_invariance_error},
                    {"ratio_spread", o.ratio_spread},
                    {"mismatches", o.mismatches.size()}};
    const char* names[] = {"lambda", "u", "v", "w"};
    for (int f = 0; f < 4; ++f) r["rows"].push_back({{"factor", names[f]}, {"bi_over_trace", o.factor_ratio[f]}});
    for (const auto& m : o.mismatches)
        r["failures"].push_back({{"check", "bracket_vs_oracle"},
                                 {"seed", c.seed},
                                 {"index", m.index},
                                 {"error", m.error},
                                 {"x", element_json(m.x)},
                                 {"y", element_json(m.y)},
                                 {"formula", element_json(m.formula)},
                                 {"oracle", element_json(m.oracle)}});
    if (o.ratio_spread >= tol)
        r["failures"].push_back({{"check", "trace_form_proportionality"}, {"ratio_spread", o.ratio_spread}});
    if (o.max_invariance_error > tol)
        r["failures"].push_back({{"check", "ad_invariance"}, {"error", o.max_invariance_error}});
    r["pass"] = o.pass;
    return r;
}

// ---------------------------------------------------------------- lemma 0

Json cmd_lemma0(const RunConfig& c, std::size_t n) {
    const double tol = c.tol.value_or(1e-10);
    const Lemma0Report l = verify_lemma0(c.seed, n, kLemma0Deformations, tol, {c.threads});
    Json r = make_report("lemma0");
    r["config"]["deformations"] = kLemma0Deformations;
    r["summary"] = {{"planes", l.planes},
                    {"deformations", l.deformations},
                    {"evaluations", l.planes * l.deformations},
                    {"tol", tol},
                    {"max_abs_c0", l.max_abs_c0},
                    {"max_abs_c1", l.max_abs_c1},
                    {"min_c2", l.min_c2},
                    {"max_closed_form_gap", l.max_closed_form_gap},
                    {"failure_count", l.failure_count}};
    for (const auto& f : l.failures) {
        Json j = plane_json(f.x, f.y);
        j["check"] = "lemma0";
        j["seed"] = c.seed;
        j["index"] = f.plane_index;
        j["deformation_index"] = f.deformation_index;
        j["c0"] = f.c0;
        j["c1"] = f.c1;
        j["c2"] = f.c2;
        j["closed_form"] = f.closed_form;
        r["failures"].push_back(j);
    }
    r["pass"] = l.pass;
    return r;
}

// ---------------------------------------------------------------- lemma 1

Json cmd_lemma1(const RunConfig& c, std::size_t n) {
    Lemma1Config cfg;
    cfg.seed = c.seed;
    cfg.samples = n;
    cfg.family = c.family;
    cfg.adversarial = c.adversarial;
    cfg.tol = c.tol.value_or(1e-10);
    cfg.par.threads = c.threads;
    require(!(cfg.adversarial && cfg.family && *cfg.family != Family::F1),
            "--adversarial samples near t0 and only combines with --family F1");
    const std::vector<Lemma1Verdict> verdicts = verify_lemma1(cfg);

    std::map<std::string, std::size_t> by_class{
        {"GENERIC_POSITIVE", 0}, {"DEGENERATE_CUBIC", 0}, {"VIOLATION", 0}};
    std::map<std::string, std::size_t> by_family{{"F1", 0}, {"F2", 0}, {"F3", 0}, {"F4", 0}, {"unclassified", 0}};
    std::vector<double> c2_generic, c3_degenerate;
    double special_max_c2 = 0.0, special_c3_dev = 0.0;
    std::size_t special = 0;

    Json r = make_report("lemma1");
    for (const auto& v : verdicts) {
        ++by_class[std::string(to_string(v.classification))];
        ++by_family[v.family ? std::string(to_string(*v.family)) : "unclassified"];
        if (v.classification == Lemma1Class::GenericPositive) c2_generic.push_back(v.c2);
        if (v.classification == Lemma1Class::DegenerateCubic) c3_degenerate.push_back(std::abs(v.c3));
        if (v.special_orbit) {
            ++special;
            special_max_c2 = std::max(special_max_c2, std::abs(v.c2));
            special_c3_dev = std::max(special_c3_dev, std::abs(std::abs(v.c3) - 1.0));
        }
        r["rows"].push_back({{"id", v.id},
                             {"family", family_json(v.family)},
                             {"special_orbit", v.special_orbit},
                             {"orbit_distance", v.orbit_distance},
                             {"c2", v.c2},
                             {"c3", v.c3},
                             {"classification", to_string(v.classification)}});
        if (v.classification == Lemma1Class::Violation) {
            Json j = plane_json(v.x, v.y);
            j["check"] = "lemma1";
            j["seed"] = c.seed;
            j["index"] = v.id;
            j["c2"] = v.c2;
            j["c3"] = v.c3;
            j["orbit_distance"] = v.orbit_distance;
            if (!v.note.empty()) j["note"] = v.note;
            r["failures"].push_back(j);
        }
    }
    Json fam(by_family), cls(by_class);
    r["summary"] = {{"samples", verdicts.size()},
                    {"tol", cfg.tol},
                    {"by_classification", cls},
                    {"by_family", fam},
                    {"special_orbit", special},
                    {"special_max_abs_c2", special_max_c2},
                    {"special_max_abs_c3_minus_1", special_c3_dev},
                    {"c2_generic", stats_json(c2_generic)},
                    {"abs_c3_degenerate", stats_json(c3_degenerate)}};
    r["pass"] = by_class["VIOLATION"] == 0;
    return r;
}

// ---------------------------------------------------------------- theorem 1

Json cmd_theorem1(const RunConfig& c, std::size_t n) {
    Theorem1Config cfg;
    cfg.seed = c.seed;
    cfg.samples = n;
    if (!c.t_values.empty()) cfg.multipliers = c.t_values;
    cfg.par.threads = c.threads;
    for (double t : cfg.multipliers) require(std::isfinite(t), "--t values must be finite");
    Theorem1Report t;
    try {
        t = verify_theorem1(cfg);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    Json r = make_report("theorem1");
    r["config"]["t"] = cfg.multipliers;
    r["config"]["t_units"] = "multiples of sigma";
    for (const auto& row : t.rows) {
        Json j{{"multiplier", row.multiplier},
               {"t", row.t},
               {"min_k", row.min_k},
               {"argmin", row.argmin},
               {"min_k_over_t2", row.zero_row ? Json(nullptr) : Json(row.min_k_over_t2)},
               {"min_k_over_t3", row.zero_row ? Json(nullptr) : Json(row.min_k_over_t3)},
               {"k", {{"min", row.k_quantiles[0]},
                      {"p01", row.k_quantiles[1]},
                      {"p50", row.k_quantiles[2]},
                      {"p99", row.k_quantiles[3]},
                      {"max", row.k_quantiles[4]}}},
               {"zero_row", row.zero_row},
               {"pass", row.pass}};
        r["rows"].push_back(j);
        if (!row.pass) {
            Json f = plane_json(row.x, row.y);
            f["check"] = row.zero_row ? "normal_metric_zero" : "positivity";
            f["seed"] = c.seed;
            f["index"] = row.argmin;
            f["t"] = row.t;
            f["k_value"] = row.min_k;
            r["failures"].push_back(f);
        }
    }
    Json opposite = Json::array();
    for (const auto& p : t.opposite) {
        Json j{{"t", p.t},
               {"min_k", p.min_k},
               {"argmin", p.argmin},
               {"special_orbit", p.special_orbit},
               {"orbit_distance", p.orbit_distance},
               {"found_negative", p.found_negative}};
        j["witness"] = plane_json(p.x, p.y);
        opposite.push_back(j);
        if (!p.found_negative) {
            Json f = plane_json(p.x, p.y);
            f["check"] = "opposite_sign_negative";
            f["seed"] = c.seed;
            f["index"] = p.argmin;
            f["t"] = p.t;
            f["k_value"] = p.min_k;
            r["failures"].push_back(f);
        }
    }
    r["summary"] = {{"sigma", t.sigma},
                    {"special_pair_c3", t.special_c3},
                    {"positive_side", t.sigma > 0 ? "t > 0" : "t < 0"},
                    {"samples", n},
                    {"opposite_sign", opposite},
                    {"largest_passing_abs_t", t.largest_passing_abs_t},
                    {"first_failing_abs_t", t.first_failing_abs_t},
                    {"scan_stop", t.scan_stop}};
    r["pass"] = t.pass;
    return r;
}

// ---------------------------------------------------------------- wilking

Json certificate_json(const WilkingCertificate& cert, const WilkingChecks& k) {
    return {{"case", to_string(cert.case_tag)},
            {"lambda", cert.lambda},
            {"k_value", cert.k_value},
            {"x", element_json(cert.x)},
            {"z", element_json(cert.z)},
            {"y", element_json(cert.y)},
            {"checks",
             {{"xz_bracket", k.xz_bracket},
              {"y_residual", k.y_residual},
              {"lower_gap", k.lower_gap},
              {"upper_gap", k.upper_gap},
              {"identity_residual", k.identity_residual},
              {"w_lambda", k.w_lambda},
              {"three_term", k.three_term},
              {"three_term_gap", k.three_term_gap},
              {"pass", k.pass}}}};
}

Json blocks_json(const DeformedMetric& m) {
    auto mat = [](const Mat3& a) {
        Json j = Json::array();
        for (int i = 0; i < 3; ++i) j.push_back({a(i, 0), a(i, 1), a(i, 2)});
        return j;
    };
    return {{"A", mat(m.a_block())}, {"B", mat(m.t() * m.deformation().b)}, {"C", mat(Mat3::Identity() + m.t() * m.deformation().c)}};
}

Json cmd_wilking(const RunConfig& c, std::size_t n) {
    const double tol = c.tol.value_or(1e-10);
    const WilkingSuiteReport w = run_wilking_suite(c.seed, n, tol, {c.threads});
    Json r = make_report("wilking");
    std::map<std::string, std::size_t> by_case{{"u-factor", 0}, {"vw-dependent", 0}, {"vw-independent", 0}};
    double max_k = -std::numeric_limits<double>::infinity();
    double max_b_over_c = 0.0;
    std::size_t check_failures = 0;
    for (const auto& row : w.rows) {
        ++by_case[std::string(to_string(row.case_tag))];
        max_k = std::max(max_k, row.k_value);
        if (row.c_norm > 0.0) max_b_over_c = std::max(max_b_over_c, row.b_norm / row.c_norm);
        check_failures += row.checks.pass ? 0 : 1;
        r["rows"].push_back({{"index", row.index},
                             {"case", to_string(row.case_tag)},
                             {"lambda", row.lambda},
                             {"k_value", row.k_value},
                             {"b_norm", row.b_norm},
                             {"c_norm", row.c_norm},
                             {"checks_pass", row.checks.pass},
                             {"pass", row.pass}});
        if (!row.pass) {
            const DeformedMetric m(random_admissible_metric(c.seed, row.index), 1.0);
            Json f = certificate_json(wilking_pair(m), row.checks);
            f["check"] = "wilking";
            f["seed"] = c.seed;
            f["index"] = row.index;
            f["metric"] = blocks_json(m);
            r["failures"].push_back(f);
        }
    }

    // fixed metrics: the normal metric and one with a dominant B block
    Mat3 big_b;
    big_b << 0.0, 1.8, 0.9, -1.8, 0.0, 1.8, -0.9, -1.8, 0.0;
    const std::vector<std::pair<std::string, DeformedMetric>> fixtures{
        {"identity", DeformedMetric::identity()},
        {"large_b", metric_from_blocks(Eigen::Vector3d(1.0, 2.0, 3.0).asDiagonal().toDenseMatrix(), big_b,
                                       3.0 * Mat3::Identity())}};
    Json fx = Json::array();
    bool fixtures_pass = true;
    for (const auto& [name, m] : fixtures) {
        const WilkingCertificate cert = wilking_pair(m);
        const WilkingChecks k = verify_wilking_inequalities(m, cert);
        const bool ok = k.pass && cert.k_value <= tol;
        fixtures_pass = fixtures_pass && ok;
        Json j = certificate_json(cert, k);
        j["name"] = name;
        j["pass"] = ok;
        fx.push_back(j);
        if (!ok) {
            Json f = j;
            f["check"] = "wilking_fixture";
            f["metric"] = blocks_json(m);
            r["failures"].push_back(f);
        }
    }

    r["summary"] = {{"metrics", w.rows.size()},
                    {"tol", tol},
                    {"by_case", Json(by_case)},
                    {"max_k_value", w.rows.empty() ? Json(nullptr) : Json(max_k)},
                    {"max_b_over_c_norm", max_b_over_c},
                    {"inequality_failures", check_failures},
                    {"failures", w.failures},
                    {"fixtures", fx}};
    r["pass"] = w.pass && fixtures_pass;
    return r;
}

// ---------------------------------------------------------------- baseline

Json cmd_baseline(const RunConfig& c, std::size_t n) {
    const double tol = c.tol.value_or(1e-12);
    const BaselineReport b = normal_metric_baseline(c.seed, n, tol, {c.threads});
    Json r = make_report("baseline");
    r["summary"] = {{"samples", b.samples},
                    {"commuting", b.commuting},
                    {"tol", tol},
                    {"min_k", b.min_k},
                    {"max_k_commuting", b.commuting ? Json(b.max_k_commuting) : Json(nullptr)},
                    {"min_k_noncommuting", b.commuting < b.samples ? Json(b.min_k_noncommuting) : Json(nullptr)},
                    {"mismatches", b.mismatches}};
    if (!b.pass)
        r["failures"].push_back({{"check", "normal_metric_baseline"}, {"seed", c.seed}, {"mismatches", b.mismatches}});
    r["pass"] = b.pass;
    return r;
}

// ---------------------------------------------------------------- classify

SpElement parse_element(const std::vector<double>& v, const char* flag) {
    require(v.size() == 9 || v.size() == 10,
            std::string(flag) + " expects 9 (u,v,w) or 10 (lambda,u,v,w) comma-separated reals");
    for (double c : v) require(std::isfinite(c), std::string(flag) + " has a non-finite entry");
    const std::size_t o = v.size() - 9;
    if (o == 1) require(v[0] == 0.0, std::string(flag) + ": lambda must be 0 for a tangent vector");
    return m_element({v[o], v[o + 1], v[o + 2]}, {v[o + 3], v[o + 4], v[o + 5]}, {v[o + 6], v[o + 7], v[o + 8]});
}

Json parameters_json(const CartanParameters& p) {
    return std::visit(
        [](const auto& q) -> Json {
            using P = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<P, F1Params>)
                return {{"v", vec_json(q.v)}, {"w", vec_json(q.w)}};
            else if constexpr (std::is_same_v<P, F2Params>)
                return {{"u", vec_json(q.u)}, {"w", vec_json(q.w)}};
            else if constexpr (std::is_same_v<P, F3Params>)
                return {{"u", vec_json(q.u)}, {"u2", vec_json(q.u2)}};
            else
                return {{"u", vec_json(q.u)}, {"u2", vec_json(q.u2)}, {"mu", q.mu}};
        },
        p);
}

Json cmd_classify(const RunConfig& c) {
    require(!c.x.empty() && !c.y.empty(), "classify needs --x and --y");
    const SpElement x = parse_element(c.x, "--x");
    const SpElement y = parse_element(c.y, "--y");
    std::optional<TangentPlane> plane;
    try {
        plane.emplace(x, y);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    if (!commutes(*plane)) {
        const double rel = bi_norm(bracket(x, y)) / (bi_norm(x) * bi_norm(y));
        throw UsageError("classify: the pair does not commute (|[x,y]| / (|x||y|) = " + format_real(rel) + ")");
    }

    Json r = make_report("classify");
    r["summary"]["input"] = plane_json(x, y);
    try {
        const CartanClassification cc = canonicalize(*plane);
        const Lemma1Verdict v = lemma1_verdict(*plane);
        const TangentPlane rep = cc.representative();
        r["summary"]["family"] = to_string(cc.family);
        r["summary"]["parameters"] = parameters_json(cc.parameters);
        r["summary"]["representative"] = {{"x", element_json(rep.x())}, {"y", element_json(rep.y())}};
        r["summary"]["witness"] = {
            {"angle", cc.witness.angle},
            {"basis", {{cc.witness.basis(0, 0), cc.witness.basis(0, 1)}, {cc.witness.basis(1, 0), cc.witness.basis(1, 1)}}},
            {"reconstruction_distance", subspace_distance(cc.reconstruct(), *plane)}};
        r["summary"]["special_orbit"] = v.special_orbit;
        r["summary"]["orbit_distance"] = v.orbit_distance;
        r["summary"]["c2"] = v.c2;
        r["summary"]["c3"] = v.c3;
        r["summary"]["lemma1"] = to_string(v.classification);
        r["pass"] = true;
    } catch (const ClassificationError& e) {
        Json f = plane_json(x, y);
        f["check"] = "classification";
        f["note"] = e.what();
        r["failures"].push_back(f);
        r["pass"] = false;
    }
    return r;
}

}  // namespace

std::size_t default_samples(const std::string& subcommand) {
    if (subcommand == "wilking") return 1000;
    if (subcommand == "classify") return 1;
    return 10000;
}

Json execute(const RunConfig& c) {
    const std::size_t n = c.samples.value_or(default_samples(c.subcommand));
    require(n >= 1, "--samples must be at least 1");
    require(c.format == "json" || c.format == "csv" || c.format == "text", "--format must be json, csv or text");
    require(c.t_values.empty() || c.subcommand == "theorem1", "--t only applies to theorem1");
    require((c.x.empty() && c.y.empty()) || c.subcommand == "classify", "--x/--y only apply to classify");
    require((!c.family && !c.adversarial) || c.subcommand == "lemma1", "--family/--adversarial only apply to lemma1");
    require(!c.corrupt_bracket || c.subcommand == "oracle", "--corrupt-bracket only applies to oracle");
    require(!c.tol || (std::isfinite(*c.tol) && *c.tol > 0.0), "--tol must be a positive real");

    Json r;
    if (c.subcommand == "oracle")
        r = cmd_oracle(c, n);
    else if (c.subcommand == "lemma0")
        r = cmd_lemma0(c, n);
    else if (c.subcommand == "lemma1")
        r = cmd_lemma1(c, n);
    else if (c.subcommand == "theorem1")
        r = cmd_theorem1(c, n);
    else if (c.subcommand == "wilking")
        r = cmd_wilking(c, n);
    else if (c.subcommand == "baseline")
        r = cmd_baseline(c, n);
    else if (c.subcommand == "classify")
        r = cmd_classify(c);
    else
        throw UsageError("unknown subcommand: " + c.subcommand);

    // the subcommand may have added derived entries; the echo goes first
    Json config = config_json(c, n);
    for (auto& [k, v] : r["config"].items()) config[k] = v;
    r["config"] = config;
    return r;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature experiments on sp(2) / u(1)", std::string(kArtifactName)};
    app.set_version_flag("--version", std::string(artifact_version()));
    app.require_subcommand(1, 1);

    RunConfig c;
    std::string family;
    std::uint64_t samples = 0;
    std::optional<double> tol_value;
    auto* samples_opt = app.add_option("--samples", samples, "Number of samples (default depends on the command)");
    app.add_option("--seed", c.seed, "Base seed")->capture_default_str();
    app.add_option("--t", c.t_values, "theorem1: comma list of t in units of sigma")->delimiter(',');
    auto* tol_opt = app.add_option("--tol", tol_value, "Override the command's main tolerance");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--out", c.out, "Write the report to this path instead of stdout");
    app.add_option("--family", family, "lemma1: restrict sampling to one family")
        ->check(CLI::IsMember({"F1", "F2", "F3", "F4"}));
    app.add_flag("--adversarial", c.adversarial, "lemma1: sample on and near the orbit of t0");
    app.add_option("--x", c.x, "classify: first vector")->delimiter(',');
    app.add_option("--y", c.y, "classify: second vector")->delimiter(',');
    app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");
    app.add_flag("--corrupt-bracket", c.corrupt_bracket)->group("");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"oracle", "Bracket and trace-form checks against the quaternionic matrix model"},
        {"lemma0", "Vanishing of C and C' at t = 0 and the closed form of C'' for commuting pairs"},
        {"lemma1", "Second/third derivative dichotomy for the fixed deformation"},
        {"theorem1", "Positivity of commuting-pair curvature for small t of the measured sign"},
        {"wilking", "Nonpositively curved plane for random admissible metrics"},
        {"baseline", "Normal metric: curvature signs on commuting and generic planes"},
        {"classify", "Orbit family of the plane spanned by --x and --y"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (samples_opt->count() > 0) c.samples = static_cast<std::size_t>(samples);
    if (tol_opt->count() > 0) c.tol = tol_value;
    if (!family.empty()) c.family = parse_family(family);

    const auto start = std::chrono::steady_clock::now();
    Json report;
    try {
        report = execute(c);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFail;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"wall_seconds", seconds},
                        {"threads", c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency())}};

    const std::string text = render(report, c.format);
    if (c.out.empty()) {
        out << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.out << '\n';
            return kExitUsage;
        }
        f << text;
    }
    const bool pass = report["pass"].get<bool>();
    if (!pass) err << kArtifactName << ' ' << c.subcommand << ": verification failed, see report\n";
    return pass ? kExitPass : kExitFail;
}

}  // namespace sp2lab::cli
