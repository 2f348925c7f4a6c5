// Overflow-safe scalar special functions: log-gamma, modified Bessel I of
// real order nu > -1, Bessel ratios I_{nu+1}/I_nu, generalized Laguerre and
// generalized (Szego) Hermite polynomials.
#pragma once

namespace wigcat {

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

// I_nu(x) for nu > -1, x >= 0. Power series in log space for x <= 30,
// scaled asymptotic expansion beyond. Throws std::overflow_error once
// exp(x) leaves the representable range, std::domain_error on bad input.
double bessel_i(double nu, double x);

// ln I_nu(x); finite far past the point where bessel_i overflows.
double log_bessel_i(double nu, double x);

// I_{nu+1}(x) / I_nu(x) for nu > -1, x > 0, without evaluating either
// Bessel function. Continued fraction for moderate x, quotient of scaled
// asymptotic series for large x; no overflow for x up to 1e8 and beyond.
double bessel_i_ratio(double nu, double x);

// Generalized Laguerre polynomial L_n^mu(x), mu > -1, by the three-term
// recurrence.
double laguerre(int n, double mu, double x);

// Generalized Hermite polynomial H_n^lambda(x):
//   H_{2n}^lambda(x)   = (-1)^n 2^{2n}   n! L_n^{lambda-1/2}(x^2)
//   H_{2n+1}^lambda(x) = (-1)^n 2^{2n+1} n! x L_n^{lambda+1/2}(x^2)
// Requires lambda > -1/2 for even n, lambda > -3/2 for odd n.
double gen_hermite(int n, double lambda, double x);

}  // namespace wigcat
