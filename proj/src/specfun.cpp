#include "wigcat/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wigcat {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Largest ln I before exp() overflows, with a small safety margin.
constexpr double kLogOverflow = 709.0;

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

// ln I_nu(x) from the power series; every term is positive, so the sum is
// cancellation-free. Usable for 0 < x <= ~200 before the largest term
// leaves double range; we only route x <= 30 here.
double log_bessel_series(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return nu * std::log(0.5 * x) - log_gamma(nu + 1.0) + std::log(sum);
}

// e^{-x} I_nu(x) from the large-x asymptotic expansion. The series is
// truncated at its smallest term; for x > 30 and the moderate orders used
// here that term is below e^{-2x} relative.
double bessel_scaled_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * x * k);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-18 * std::abs(sum)) break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

// Gauss continued fraction for I_{nu+1}(x)/I_nu(x), modified Lentz scheme:
//   r = x / (2(nu+1) +) x^2 / (2(nu+2) +) x^2 / (2(nu+3) +) ...
double bessel_ratio_cf(double nu, double x) {
    constexpr double tiny = 1e-300;
    double f = tiny;
    double c = f;
    double d = 0.0;
    for (int k = 1; k <= 20000; ++k) {
        const double a = (k == 1) ? x : x * x;
        const double b = 2.0 * (nu + k);
        d = b + a * d;
        if (d == 0.0) d = tiny;
        c = b + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return f;
    }
    throw std::runtime_error("bessel_i_ratio: continued fraction failed to converge");
}

}  // namespace

double log_gamma(double x) {
    require(std::isfinite(x) && x > 0.0, "log_gamma: requires finite x > 0");
    return std::lgamma(x);
}

double log_bessel_i(double nu, double x) {
    require(std::isfinite(nu) && nu > -1.0, "bessel_i: requires order nu > -1");
    require(std::isfinite(x) && x > 0.0, "log_bessel_i: requires x > 0");
    if (x <= 30.0) return log_bessel_series(nu, x);
    if (4.0 * nu * nu < x) return x + std::log(bessel_scaled_asymptotic(nu, x));
    // Large order relative to x: the asymptotic series above would diverge
    // immediately; the power series still fits in double up to x ~ 200.
    if (x <= 200.0) return log_bessel_series(nu, x);
    throw std::domain_error("log_bessel_i: order too large for argument");
}

double bessel_i(double nu, double x) {
    require(std::isfinite(nu) && nu > -1.0, "bessel_i: requires order nu > -1");
    require(std::isfinite(x) && x >= 0.0, "bessel_i: requires x >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();  // x^nu divergence
    }
    const double lg = log_bessel_i(nu, x);
    if (lg > kLogOverflow)
        throw std::overflow_error("bessel_i: result exceeds double range (x=" +
                                  std::to_string(x) + "); use bessel_i_ratio or log_bessel_i");
    return std::exp(lg);
}

double bessel_i_ratio(double nu, double x) {
    require(std::isfinite(nu) && nu > -1.0, "bessel_i_ratio: requires order nu > -1");
    require(std::isfinite(x) && x > 0.0, "bessel_i_ratio: requires x > 0");
    if (x <= 40.0) return bessel_ratio_cf(nu, x);
    return bessel_scaled_asymptotic(nu + 1.0, x) / bessel_scaled_asymptotic(nu, x);
}

double laguerre(int n, double mu, double x) {
    require(n >= 0, "laguerre: requires n >= 0");
    require(std::isfinite(mu) && mu > -1.0, "laguerre: requires mu > -1");
    require(std::isfinite(x), "laguerre: requires finite x");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + mu - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + mu - x) * cur - (k + mu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gen_hermite(int n, double lambda, double x) {
    require(n >= 0, "gen_hermite: requires n >= 0");
    require(std::isfinite(lambda) && std::isfinite(x), "gen_hermite: non-finite input");
    const int m = n / 2;
    double pref = 1.0;  // 2^{2m} m!, exact in double for the orders used here
    for (int k = 1; k <= m; ++k) pref *= 4.0 * k;
    if (m % 2 != 0) pref = -pref;
    if (n % 2 == 0) {
        require(lambda > -0.5, "gen_hermite: even degree requires lambda > -1/2");
        return pref * laguerre(m, lambda - 0.5, x * x);
    }
    require(lambda > -1.5, "gen_hermite: odd degree requires lambda > -3/2");
    return pref * 2.0 * x * laguerre(m, lambda + 0.5, x * x);
}

}  // namespace wigcat
