#include "doctest.h"

#include <cmath>

#include "wigcat/observables.hpp"
#include "wigcat/oracle.hpp"

using namespace wigcat;

namespace {

double rel_dev(double a, double b, double floor = 1e-3) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

}  // namespace

TEST_SUITE("observables") {

TEST_CASE("number moments: references and limits") {
    const NumberMoments even = number_moments(0.0, 1.0, Parity::even);
    CHECK(even.mean_n == doctest::Approx(std::tanh(1.0)).epsilon(1e-13));

    // odd w -> 0: the state collapses to |1, lambda>
    const NumberMoments odd0 = number_moments(0.5, 1e-4, Parity::odd);
    CHECK(std::abs(odd0.mean_n - 1.0) < 1e-7);
    CHECK(std::abs(odd0.mean_n2 - 1.0) < 1e-7);

    // arbitrary-precision references at lambda = 0.5, w = 2
    const NumberMoments odd = number_moments(0.5, 2.0, Parity::odd);
    CHECK(odd.mean_n == doctest::Approx(3.632189069437438342).epsilon(1e-12));
    CHECK(odd.mean_n2 == doctest::Approx(17.0).epsilon(1e-12));

    CHECK(odd.mean_n2 >= odd.mean_n * odd.mean_n);  // variance nonnegativity
    CHECK_THROWS_AS(number_moments(0.5, 0.0, Parity::even), std::domain_error);
    CHECK_THROWS_AS(number_moments(-0.7, 1.0, Parity::even), std::domain_error);
}

TEST_CASE("Mandel parameter: signs and references") {
    CHECK(std::abs(mandel_q(0.2, 1e-3, Parity::odd) + 1.0) < 1e-5);
    CHECK(mandel_q(0.0, 2.0, Parity::even) ==
          doctest::Approx(0.005367402650461784479).epsilon(1e-11));
    const double x = 4.0;
    CHECK(mandel_q(0.0, 2.0, Parity::even) ==
          doctest::Approx(x * (1.0 - std::tanh(x) * std::tanh(x)) / std::tanh(x))
              .epsilon(1e-12));
    CHECK(mandel_q(-0.25, 2.0, Parity::even) ==
          doctest::Approx(-0.08658325628344685169).epsilon(1e-11));
    CHECK(mandel_q(-0.25, 2.0, Parity::even) < 0.0);
    CHECK_THROWS_AS(mandel_q(0.3, 0.0, Parity::even), std::domain_error);
}

TEST_CASE("x/p variances: reference value and uncertainty bound") {
    const XpVariances v = xp_variances(0.5, 1.5, M_PI / 2.0, Parity::even);
    CHECK(v.var_x == doctest::Approx(0.4033910178532049508).epsilon(1e-12));
    CHECK(v.commutator_mean == 2.0);

    // undeformed bound var_x var_p >= 1/4, approached as w -> 0 (even)
    for (double w : {1e-4, 0.3, 1.0, 2.5})
        for (Parity parity : {Parity::even, Parity::odd}) {
            if (parity == Parity::odd && w < 1e-3) continue;
            const XpVariances u = xp_variances(0.0, w, 0.3, parity);
            CHECK(u.var_x * u.var_p >= 0.25 * (1.0 - 1e-12));
        }
    const XpVariances tiny = xp_variances(0.0, 1e-4, 0.3, Parity::even);
    CHECK(std::abs(tiny.var_x * tiny.var_p - 0.25) < 1e-7);
}

TEST_CASE("x/p variances match the brute-force oracle") {
    const WignerCatSpec cases[] = {
        {0.5, 1.5, M_PI / 2.0, Parity::even},
        {-1.0, 2.0, 0.0, Parity::odd},
        {-0.25, 1.0, M_PI / 4.0, Parity::even},
    };
    for (const WignerCatSpec& spec : cases) {
        const XpVariances closed = xp_variances(spec.lambda, spec.w_abs, spec.phi, spec.parity);
        const StatisticsReport brute = oracle_statistics(spec);
        CHECK(rel_dev(closed.var_x, brute.var_x) < 1e-10);
        CHECK(rel_dev(closed.var_p, brute.var_p) < 1e-10);
        CHECK(rel_dev(closed.commutator_mean, brute.commutator_mean) < 1e-12);
    }
}

TEST_CASE("squeezing factors: signs, limits, degeneracy") {
    CHECK(xp_squeezing(1.0, 2.0, M_PI / 2.0, Parity::even).s_x < 0.0);
    CHECK(xp_squeezing(-1.0, 2.0, M_PI / 2.0, Parity::odd).s_x < 0.0);
    const XpSqueezing vac = xp_squeezing(0.0, 1e-4, 0.0, Parity::even);
    CHECK(std::abs(vac.s_x) < 1e-7);
    CHECK(std::abs(vac.s_p) < 1e-7);
    // odd sector at lambda = +1/2: <1 + 2 lambda R> = 0
    CHECK_THROWS_AS(xp_squeezing(0.5, 1.0, 0.0, Parity::odd), std::domain_error);
}

TEST_CASE("su(1,1): zero squeezing and exact minimum uncertainty") {
    for (Parity parity : {Parity::even, Parity::odd})
        for (double lambda : {-1.2, -0.25, 0.0, 0.8, 2.5})
            for (double w : {0.3, 1.0, 3.0}) {
                if (lambda <= lambda_lower_bound(parity)) continue;
                const Su11Statistics s = su11_statistics(lambda, w, parity);
                CHECK(std::abs(s.s_1) < 1e-10);
                CHECK(std::abs(s.s_2) < 1e-10);
                CHECK(std::abs(s.product_ratio - 1.0) < 1e-10);
                CHECK(s.mean_j3 > 0.0);
            }
    const Su11Statistics s = su11_statistics(0.5, 2.0, Parity::even);
    const StatisticsReport brute = oracle_statistics({0.5, 2.0, 0.0, Parity::even});
    CHECK(rel_dev(s.var_x1, brute.var_x1) < 1e-10);
}

TEST_CASE("moment identity against the operator decomposition") {
    // <N^2> = <adag^2 a^2> + <adag a> + 2 lambda <adag R a>  (+ 4 lambda^2
    // - 4 lambda <adag a> in the odd sector, where N = adag a - 2 lambda)
    const WignerCatSpec cases[] = {
        {0.5, 2.0, 0.0, Parity::even},
        {0.5, 2.0, 0.0, Parity::odd},
        {-0.25, 1.5, 0.6, Parity::even},
        {-1.2, 2.0, 0.0, Parity::odd},
    };
    for (const WignerCatSpec& spec : cases) {
        const FockVector v = reference_state(spec);
        const double a4 =
            quadratic_form(v, {Op::create, Op::create, Op::annihilate, Op::annihilate})
                .value.real();
        const double ada = quadratic_form(v, {Op::create, Op::annihilate}).value.real();
        const double ara =
            quadratic_form(v, {Op::create, Op::parity, Op::annihilate}).value.real();
        double identity = a4 + ada + 2.0 * spec.lambda * ara;
        if (spec.parity == Parity::odd)
            identity += 4.0 * spec.lambda * spec.lambda - 4.0 * spec.lambda * ada;
        const double closed = number_moments(spec.lambda, spec.w_abs, spec.parity).mean_n2;
        CHECK(rel_dev(closed, identity) < 1e-10);
    }
}

TEST_CASE("phi invariance of number and su(1,1) statistics") {
    const double phis[] = {0.0, 0.4, M_PI / 3.0, 2.1, 5.9};
    StatisticsReport base = oracle_statistics({0.6, 1.7, phis[0], Parity::odd});
    for (double phi : phis) {
        const StatisticsReport r = oracle_statistics({0.6, 1.7, phi, Parity::odd});
        CHECK(std::abs(r.mean_n - base.mean_n) < 1e-12);
        CHECK(std::abs(r.mean_n2 - base.mean_n2) < 1e-11);
        CHECK(std::abs(r.mandel_q - base.mandel_q) < 1e-12);
        CHECK(std::abs(r.var_x1 - base.var_x1) < 1e-12);
        CHECK(std::abs(r.mean_j3 - base.mean_j3) < 1e-12);
    }
}

TEST_CASE("x <-> p quadrature exchange under a quarter-period phase shift") {
    for (double lambda : {-0.25, 0.0, 1.5})
        for (double w : {0.5, 2.0})
            for (double phi : {0.0, 0.3, 1.1}) {
                const XpVariances a = xp_variances(lambda, w, phi, Parity::even);
                const XpVariances b = xp_variances(lambda, w, phi + M_PI / 2.0, Parity::even);
                CHECK(std::abs(a.var_x - b.var_p) < 1e-12);
                CHECK(std::abs(a.var_p - b.var_x) < 1e-12);
            }
}

TEST_CASE("lambda = 0 regression to textbook even/odd coherent states") {
    for (double w : {0.5, 1.0, 2.0}) {
        const double x = w * w;
        const double th = std::tanh(x);
        CHECK(rel_dev(number_moments(0.0, w, Parity::even).mean_n, x * th) < 1e-12);
        CHECK(rel_dev(number_moments(0.0, w, Parity::odd).mean_n, x / th) < 1e-12);
        const XpVariances v = xp_variances(0.0, w, 0.9, Parity::even);
        CHECK(rel_dev(v.var_x,
                      2.0 * x * std::cos(0.9) * std::cos(0.9) - x + 0.5 + x * th) < 1e-12);
        const Su11Statistics s = su11_statistics(0.0, w, Parity::odd);
        CHECK(rel_dev(s.mean_j3, 0.75 + 0.5 * x * (x / th - 1.0) / x) < 1e-10);
    }
}

TEST_CASE("full statistics report is internally consistent") {
    const WignerCatSpec spec{0.8, 1.7, 0.5, Parity::even};
    const StatisticsReport r = statistics_report(spec);
    CHECK(r.mandel_q ==
          doctest::Approx((r.mean_n2 - r.mean_n * r.mean_n) / r.mean_n - 1.0).epsilon(1e-14));
    CHECK(r.xp_uncertainty_lhs == doctest::Approx(r.var_x * r.var_p).epsilon(1e-14));
    CHECK(r.xp_uncertainty_rhs ==
          doctest::Approx(0.25 * r.commutator_mean * r.commutator_mean).epsilon(1e-14));
    CHECK(r.xp_uncertainty_lhs >= r.xp_uncertainty_rhs * (1.0 - 1e-12));
    CHECK(r.su11_product_ratio == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("closed forms match the oracle on a reduced grid") {
    for (Parity parity : {Parity::even, Parity::odd})
        for (double lambda : {-1.4, -0.25, 0.5, 2.5})
            for (double w : {0.5, 2.0})
                for (double phi : {0.0, M_PI / 4.0}) {
                    if (lambda <= lambda_lower_bound(parity)) continue;
                    if (lambda == 0.5 && parity == Parity::odd)
                        continue;  // squeezing factors degenerate, covered in verify
                    const WignerCatSpec spec{lambda, w, phi, parity};
                    const StatisticsReport a = statistics_report(spec);
                    const StatisticsReport b = oracle_statistics(spec);
                    CHECK(rel_dev(a.mean_n, b.mean_n) < 1e-9);
                    CHECK(rel_dev(a.mean_n2, b.mean_n2) < 1e-9);
                    CHECK(rel_dev(a.mandel_q, b.mandel_q) < 1e-9);
                    CHECK(rel_dev(a.var_x, b.var_x) < 1e-9);
                    CHECK(rel_dev(a.var_p, b.var_p) < 1e-9);
                    CHECK(rel_dev(a.s_x, b.s_x) < 1e-9);
                    CHECK(rel_dev(a.s_p, b.s_p) < 1e-9);
                    CHECK(rel_dev(a.var_x1, b.var_x1) < 1e-9);
                    CHECK(rel_dev(a.var_x2, b.var_x2) < 1e-9);
                    CHECK(rel_dev(a.mean_j3, b.mean_j3) < 1e-9);
                }
}

}  // TEST_SUITE
