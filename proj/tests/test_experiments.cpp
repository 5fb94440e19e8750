#include <doctest.h>

#include <cmath>

#include "sp2lab/experiments.hpp"
#include "sp2lab/random.hpp"

using namespace sp2lab;

TEST_CASE("quantiles") {
    const std::vector<double> v{5, 1, 4, 2, 3};
    const auto q = quantiles(v, {0.0, 0.5, 1.0});
    REQUIRE(q.size() == 3);
    CHECK(q[0] == 1.0);
    CHECK(q[1] == 3.0);
    CHECK(q[2] == 5.0);
    CHECK(quantiles({}, {0.5}).empty());
}

TEST_CASE("oracle suite") {
    const OracleReport r = run_oracle_suite(1, 2000);
    CHECK(r.pass);
    CHECK(r.max_bracket_error <= 1e-12);
    CHECK(r.ratio_spread <= 1e-12);
    for (double f : r.factor_ratio) CHECK(f == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.mismatches.empty());

    SUBCASE("a corrupted bracket is caught") {
        const BracketFn flipped = [](const SpElement& x, const SpElement& y) {
            SpElement z = bracket(x, y);
            z.lambda = -z.lambda;
            return z;
        };
        const OracleReport bad = run_oracle_suite(1, 200, flipped);
        CHECK_FALSE(bad.pass);
        REQUIRE_FALSE(bad.mismatches.empty());
        CHECK(bad.mismatches.front().error > 1e-6);
    }
}

TEST_CASE("lemma 0 on a small grid") {
    const Lemma0Report r = verify_lemma0(2, 200, 10);
    CHECK(r.pass);
    CHECK(r.failure_count == 0);
    CHECK(r.max_abs_c0 <= 1e-10);
    CHECK(r.max_abs_c1 <= 1e-10);
    CHECK(r.min_c2 >= -1e-10);
    CHECK(r.max_closed_form_gap <= 1e-9);
}

TEST_CASE("lemma 1 verdicts") {
    SUBCASE("t0 has a vanishing second and a nonzero third coefficient") {
        const Lemma1Verdict v = lemma1_verdict(special_plane());
        CHECK(v.classification == Lemma1Class::DegenerateCubic);
        CHECK(v.special_orbit);
        CHECK(std::abs(v.c2) < 1e-12);
        CHECK(v.c3 == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("Case-II representative is generic") {
        const TangentPlane p(m_element(e3, {}, e1), m_element({}, e3, {}));
        const Lemma1Verdict v = lemma1_verdict(p);
        CHECK(v.classification == Lemma1Class::GenericPositive);
        CHECK_FALSE(v.special_orbit);
        CHECK(v.c2 > 0.0);
    }
    SUBCASE("sampling run") {
        Lemma1Config cfg;
        cfg.seed = 3;
        cfg.samples = 1000;
        const auto verdicts = verify_lemma1(cfg);
        REQUIRE(verdicts.size() == 1000);
        std::size_t degenerate = 0;
        for (const auto& v : verdicts) {
            CHECK(v.classification != Lemma1Class::Violation);
            if (v.classification == Lemma1Class::DegenerateCubic) {
                ++degenerate;
                CHECK(v.special_orbit);
                CHECK(std::abs(v.c3) > 1e-6);
            }
        }
        CHECK(degenerate > 0);
    }
    SUBCASE("adversarial run starts at t0") {
        Lemma1Config cfg;
        cfg.seed = 4;
        cfg.samples = 200;
        cfg.adversarial = true;
        const auto verdicts = verify_lemma1(cfg);
        REQUIRE(!verdicts.empty());
        CHECK(verdicts.front().classification == Lemma1Class::DegenerateCubic);
        for (const auto& v : verdicts) CHECK(v.classification != Lemma1Class::Violation);
        cfg.family = Family::F3;
        CHECK_THROWS_AS(verify_lemma1(cfg), DomainError);
    }
    SUBCASE("restricted to one family") {
        Lemma1Config cfg;
        cfg.seed = 5;
        cfg.samples = 200;
        cfg.family = Family::F4;
        for (const auto& v : verify_lemma1(cfg)) {
            CHECK(v.family == Family::F4);
            CHECK(v.classification == Lemma1Class::GenericPositive);
        }
    }
}

TEST_CASE("theorem 1 on a small sample") {
    CHECK(working_sign() == -1.0);
    Theorem1Config cfg;
    cfg.seed = 6;
    cfg.samples = 1000;
    cfg.multipliers = {0.0, 1e-3, 1e-2};
    const Theorem1Report r = verify_theorem1(cfg);
    CHECK(r.sigma == -1.0);
    CHECK(r.special_c3 == doctest::Approx(-1.0).epsilon(1e-12));
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].zero_row);
    CHECK(r.rows[0].pass);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        CHECK(r.rows[i].t == -r.rows[i].multiplier);
        CHECK(r.rows[i].min_k > 0.0);
        CHECK(r.rows[i].pass);
        CHECK(r.rows[i].k_quantiles.size() == 5);
    }
    REQUIRE(r.opposite.size() == 2);
    CHECK(r.opposite[0].t == doctest::Approx(1e-3));
    CHECK(r.opposite[0].found_negative);
    CHECK(r.opposite[1].found_negative);
    CHECK(r.largest_passing_abs_t >= 1e-2);
    CHECK(r.first_failing_abs_t > r.largest_passing_abs_t);
    CHECK(r.pass);

    cfg.multipliers = {2.0};
    CHECK_THROWS_AS(verify_theorem1(cfg), DomainError);
}

TEST_CASE("wilking: fixtures") {
    SUBCASE("identity metric: X = (0,e1,0,0), Z = (0,0,e1,0), k = 0") {
        const DeformedMetric m = DeformedMetric::identity();
        const WilkingCertificate c = wilking_pair(m);
        CHECK(c.lambda == doctest::Approx(1.0));
        CHECK(c.case_tag == WilkingCase::UFactor);
        CHECK(max_abs_diff(c.x, m_element(e1, {}, {})) < 1e-12);
        CHECK(max_abs_diff(c.z, m_element({}, e1, {})) < 1e-12);
        CHECK(std::abs(c.k_value) < 1e-12);
        const WilkingChecks k = verify_wilking_inequalities(m, c);
        CHECK(k.pass);
        // equality throughout when M = I
        CHECK(std::abs(k.lower_gap) < 1e-12);
        CHECK(std::abs(k.upper_gap) < 1e-12);
    }
    SUBCASE("A = a I below the (v, w) block") {
        const DeformedMetric m = metric_from_blocks(0.3 * Mat3::Identity(), Mat3::Zero(), Mat3::Identity());
        const WilkingCertificate c = wilking_pair(m);
        CHECK(c.lambda == doctest::Approx(0.3));
        CHECK(c.case_tag == WilkingCase::UFactor);
        CHECK(max_abs_diff(c.x, m_element(e1, {}, {})) < 1e-12);
        CHECK(max_abs_diff(c.z, m_element({}, e1, {})) < 1e-12);
        CHECK(c.k_value <= 1e-10);
        CHECK(verify_wilking_inequalities(m, c).pass);
    }
    SUBCASE("dependent (v, w) eigenvector") {
        Mat3 c_block = Mat3::Identity();
        c_block(0, 0) = 0.5;
        const DeformedMetric m = metric_from_blocks(Mat3::Identity(), Mat3::Zero(), c_block);
        const WilkingCertificate c = wilking_pair(m);
        CHECK(c.lambda == doctest::Approx(0.5));
        CHECK(c.case_tag == WilkingCase::BlockDependent);
        CHECK(c.k_value <= 1e-10);
        CHECK(verify_wilking_inequalities(m, c).pass);
    }
    SUBCASE("large antisymmetric block") {
        Mat3 a = Mat3::Zero();
        a.diagonal() << 1.0, 2.0, 3.0;
        Mat3 b;
        b << 0, 1.8, 0.9, -1.8, 0, 1.8, -0.9, -1.8, 0;
        const DeformedMetric m = metric_from_blocks(a, b, 3.0 * Mat3::Identity());
        const WilkingCertificate c = wilking_pair(m);
        CHECK(c.case_tag == WilkingCase::BlockIndependent);
        CHECK(c.k_value <= 1e-10);
        CHECK(verify_wilking_inequalities(m, c).pass);
    }
}

TEST_CASE("wilking: perturbing Y breaks the certificate") {
    const DeformedMetric m(random_admissible_metric(7, 0), 1.0);
    WilkingCertificate c = wilking_pair(m);
    REQUIRE(verify_wilking_inequalities(m, c).pass);
    c.y = c.y + 1e-3 * m_element(e2, e3, e1);
    const WilkingChecks k = verify_wilking_inequalities(m, c);
    CHECK_FALSE(k.pass);
    CHECK(k.y_residual > 1e-6);
}

TEST_CASE("wilking suite") {
    const WilkingSuiteReport r = run_wilking_suite(8, 200);
    CHECK(r.pass);
    CHECK(r.failures == 0);
    REQUIRE(r.rows.size() == 200);
    for (const auto& row : r.rows) {
        CHECK(row.k_value <= 1e-10);
        CHECK(row.checks.pass);
        CHECK(row.checks.lower_gap >= -1e-9);
        CHECK(row.checks.upper_gap >= -1e-9);
    }
}

TEST_CASE("results do not depend on the thread count") {
    const Lemma0Report a = verify_lemma0(9, 100, 5, 1e-10, {1});
    const Lemma0Report b = verify_lemma0(9, 100, 5, 1e-10, {4});
    CHECK(a.min_c2 == b.min_c2);
    CHECK(a.max_closed_form_gap == b.max_closed_form_gap);

    Theorem1Config cfg;
    cfg.seed = 10;
    cfg.samples = 300;
    cfg.scan = false;
    cfg.par = {1};
    const Theorem1Report t1 = verify_theorem1(cfg);
    cfg.par = {3};
    const Theorem1Report t3 = verify_theorem1(cfg);
    REQUIRE(t1.rows.size() == t3.rows.size());
    for (std::size_t i = 0; i < t1.rows.size(); ++i) {
        CHECK(t1.rows[i].min_k == t3.rows[i].min_k);
        CHECK(t1.rows[i].argmin == t3.rows[i].argmin);
    }

    const WilkingSuiteReport w1 = run_wilking_suite(11, 50, 1e-10, {1});
    const WilkingSuiteReport w2 = run_wilking_suite(11, 50, 1e-10, {5});
    for (std::size_t i = 0; i < w1.rows.size(); ++i) CHECK(w1.rows[i].k_value == w2.rows[i].k_value);
}

TEST_CASE("normal metric baseline") {
    const BaselineReport r = normal_metric_baseline(12, 1000);
    CHECK(r.pass);
    CHECK(r.commuting == 500);
    CHECK(r.mismatches == 0);
    CHECK(r.max_k_commuting <= 1e-12);
    CHECK(r.min_k_noncommuting > 1e-12);
}
