#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "wigcat/specfun.hpp"

using namespace wigcat;

namespace {

// Explicit finite sum L_n^mu(x) = sum_k (-1)^k C(n+mu, n-k) x^k / k!,
// accumulated in quad precision: the alternating sum is badly conditioned
// near (n=30, x=20) and double or long double would lose the 1e-10 target.
double laguerre_finite_sum(int n, double mu, double x) {
    __float128 term = 1.0;
    for (int j = 1; j <= n; ++j) term *= (__float128(mu) + j) / j;  // C(n+mu, n)
    __float128 sum = term;
    for (int k = 1; k <= n; ++k) {
        term *= -__float128(x) * (n - k + 1) / ((__float128(mu) + k) * k);
        sum += term;
    }
    return double(sum);
}

double hermite_recurrence(int n, double x) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("log_gamma matches high-precision references") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(2.0)) < 1e-15);
    // 30+ digit references from an arbitrary-precision evaluation
    CHECK(rel_err(log_gamma(0.5), 0.5723649429247000870717136757) < 1e-13);
    CHECK(rel_err(log_gamma(10.3), 13.48203678613835697061507343257) < 1e-13);
    CHECK(rel_err(log_gamma(170.25), 702.7206616776804649750620219444) < 1e-13);
    CHECK(rel_err(log_gamma(1e-3), 6.907178885383853682512344668077) < 1e-13);
}

TEST_CASE("log_gamma rejects the closed half-line") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-3.2), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("bessel_i special values and references") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(2.5, 0.0) == 0.0);
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    CHECK(rel_err(bessel_i(0.5, 1.0), 0.9376748882454876467172628844) < 1e-13);
    CHECK(rel_err(bessel_i(0.0, 3.0), 4.880792585865024085611235546) < 1e-13);
    CHECK(rel_err(bessel_i(2.5, 7.1), 115.5831784800438688546984542) < 1e-13);
    // negative fractional order, small argument
    CHECK(rel_err(bessel_i(-0.9, 0.37), 0.6467952837987418767051405695) < 1e-13);
    // asymptotic branch
    CHECK(rel_err(bessel_i(0.25, 100.0), 1.073414516645323706643637291e42) < 1e-12);
}

TEST_CASE("bessel_i domain and overflow errors") {
    CHECK_THROWS_AS(bessel_i(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(0.0, 800.0), std::overflow_error);
    CHECK(std::isfinite(log_bessel_i(0.0, 800.0)));
    CHECK(rel_err(log_bessel_i(0.0, 800.0), 800.0 - 0.5 * std::log(2.0 * M_PI * 800.0)) <
          1e-5);
}

TEST_CASE("bessel_i_ratio references across both evaluation branches") {
    // I_{1/2}/I_{-1/2} = tanh
    CHECK(rel_err(bessel_i_ratio(-0.5, 1.0), std::tanh(1.0)) < 1e-14);
    CHECK(rel_err(bessel_i_ratio(-0.9, 0.37), 1.415869913750532002500100978) < 1e-13);
    CHECK(rel_err(bessel_i_ratio(3.1, 42.5), 0.9179446547752184898435768199) < 1e-13);
    CHECK(rel_err(bessel_i_ratio(0.25, 100.0), 0.9924905297691325826628975345) < 1e-13);
    CHECK(rel_err(bessel_i_ratio(1.75, 1e8), 0.9999999775000001406250014063) < 1e-13);
    // small-x limit: I_{nu+1}/I_nu -> x / (2 (nu+1))
    const double x = 1e-7;
    CHECK(rel_err(bessel_i_ratio(-0.5, x), x / 1.0) < 1e-9);
    CHECK(rel_err(bessel_i_ratio(2.0, x), x / 6.0) < 1e-9);
    CHECK_THROWS_AS(bessel_i_ratio(-1.2, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i_ratio(0.0, 0.0), std::domain_error);
}

TEST_CASE("bessel ratio bounds and monotone approach to 1 for nu >= -1/2") {
    // Strict bounds while 1 - r is representable; at large x the true ratio
    // is 1 minus an exponentially small tail and rounds to 1.0 in double.
    for (double nu : {-0.5, 0.0, 1.3, 4.0}) {
        double prev = 0.0;
        for (double x = 0.125; x <= 16.0; x *= 2.0) {
            const double r = bessel_i_ratio(nu, x);
            CHECK(r > 0.0);
            CHECK(r < 1.0);
            CHECK(r > prev);
            prev = r;
        }
        for (double x = 1e2; x <= 1.1e6; x *= 100.0) {
            const double r = bessel_i_ratio(nu, x);
            CHECK(r >= prev);
            CHECK(r <= 1.0);
            prev = r;
        }
    }
}

TEST_CASE("Wronskian-style cross-check: I_nu * ratio = I_{nu+1}") {
    for (double nu : {-0.75, -0.5, 0.0, 0.6, 2.5, 5.0})
        for (double x : {0.05, 0.7, 3.0, 12.0, 29.0, 45.0, 120.0}) {
            const double lhs = bessel_i(nu, x) * bessel_i_ratio(nu, x);
            const double rhs = bessel_i(nu + 1.0, x);
            CHECK(rel_err(lhs, rhs) < 1e-11);
        }
}

TEST_CASE("laguerre closed forms for low degree") {
    CHECK(laguerre(0, 0.7, 3.3) == 1.0);
    CHECK(laguerre(1, 0.7, 3.3) == doctest::Approx(1.0 + 0.7 - 3.3).epsilon(1e-15));
    CHECK(rel_err(laguerre(5, 0.5, 2.0), 0.43515625) < 1e-14);  // exact dyadic value
    CHECK(rel_err(laguerre(12, -0.75, 3.7), 0.4410553413562939247628602854) < 1e-12);
    CHECK_THROWS_AS(laguerre(3, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre recurrence agrees with the explicit finite sum") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> degree(0, 30);
    std::uniform_real_distribution<double> order(-0.999, 5.0);
    std::uniform_real_distribution<double> arg(-20.0, 20.0);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = degree(rng);
        const double mu = order(rng);
        const double x = arg(rng);
        const double ref = laguerre_finite_sum(n, mu, x);
        CHECK(std::abs(laguerre(n, mu, x) - ref) <=
              1e-10 * std::max(1e-30, std::abs(ref)));
    }
}

TEST_CASE("gen_hermite low-degree values") {
    CHECK(gen_hermite(0, 0.8, 1.7) == 1.0);
    CHECK(gen_hermite(1, 0.8, 1.7) == doctest::Approx(2.0 * 1.7).epsilon(1e-15));
    CHECK(gen_hermite(1, -1.2, 0.4) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(gen_hermite(2, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));  // H_2(1)
}

TEST_CASE("gen_hermite reduces to ordinary Hermite at lambda = 0") {
    for (int n = 0; n <= 12; ++n)
        for (double x = -5.0; x <= 5.0; x += 0.5) {
            const double ref = hermite_recurrence(n, x);
            CHECK(std::abs(gen_hermite(n, 0.0, x) - ref) <=
                  1e-10 * std::max(1.0, std::abs(ref)));
        }
}

TEST_CASE("gen_hermite sector domain errors") {
    CHECK_THROWS_AS(gen_hermite(2, -0.6, 1.0), std::domain_error);
    CHECK_NOTHROW(gen_hermite(3, -0.6, 1.0));
    CHECK_THROWS_AS(gen_hermite(3, -1.6, 1.0), std::domain_error);
}

}  // TEST_SUITE
