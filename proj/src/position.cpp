#include "wigcat/position.hpp"

#include <cmath>

#include "wigcat/specfun.hpp"

namespace wigcat {

namespace {

void require_sector(int n, double lambda) {
    if (n < 0) throw std::domain_error("psi: requires n >= 0");
    if (n % 2 == 0 && !(lambda > -0.5))
        throw std::domain_error("psi: even index requires lambda > -1/2");
    if (n % 2 != 0 && !(lambda > -1.5))
        throw std::domain_error("psi: odd index requires lambda > -3/2");
}

// sqrt(m! / Gamma(m + lambda + 1/2 + shift)) with the (-1)^m sign, in log
// space. shift = 0 for even basis functions, 1 for odd.
double log_norm_prefactor(int m, double lambda, int shift) {
    return 0.5 * (log_gamma(m + 1.0) - log_gamma(m + lambda + 0.5 + shift));
}

}  // namespace

double psi(int n, double lambda, double x) {
    require_sector(n, lambda);
    if (!std::isfinite(x)) throw std::domain_error("psi: non-finite x");
    if (x == 0.0) {
        if (lambda < 0.0)
            throw std::domain_error("psi: x = 0 is singular for lambda < 0");
        if (n % 2 != 0 || lambda > 0.0) return 0.0;
        // lambda = 0, even n: |x|^lambda = 1
        const int m = n / 2;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        return sign * std::exp(log_norm_prefactor(m, 0.0, 0)) * laguerre(m, -0.5, 0.0);
    }
    const double ax = std::abs(x);
    const int m = n / 2;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (n % 2 == 0) {
        const double lg = log_norm_prefactor(m, lambda, 0) + lambda * std::log(ax) - 0.5 * x * x;
        return sign * std::exp(lg) * laguerre(m, lambda - 0.5, x * x);
    }
    // odd: the factor x |x|^lambda carried as sign(x) |x|^{lambda+1}
    const double lg = log_norm_prefactor(m, lambda, 1) + (lambda + 1.0) * std::log(ax) -
                      0.5 * x * x;
    const double sx = (x > 0.0) ? 1.0 : -1.0;
    return sign * sx * std::exp(lg) * laguerre(m, lambda + 0.5, x * x);
}

GaussLaguerreRule gauss_laguerre(int order, double alpha) {
    if (order < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
    if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: requires alpha > -1");
    GaussLaguerreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int n = order;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest style initial guesses, then Newton on L_n^alpha.
        if (i == 0) {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * n + 1.8 * alpha);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
                  1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
                 (z - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
        }
        double p1 = 0.0, p2 = 0.0, pp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 200; ++iter) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 + alpha - z) * p2 - (j + alpha) * p3) / (j + 1.0);
            }
            pp = (n * p1 - (n + alpha) * p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_laguerre: Newton iteration failed to converge");
        rule.nodes[i] = z;
        rule.weights[i] = -std::exp(log_gamma(alpha + n) - log_gamma(double(n))) / (pp * n * p2);
    }
    return rule;
}

double orthonormality(int n, int m, double lambda) {
    require_sector(n, lambda);
    require_sector(m, lambda);
    if (n % 2 != m % 2) return 0.0;  // odd integrand

    const int shift = (n % 2 == 0) ? 0 : 1;
    const double alpha = lambda - 0.5 + shift;
    const int a = n / 2;
    const int b = m / 2;
    const double pref = ((a + b) % 2 == 0 ? 1.0 : -1.0) *
                        std::exp(log_norm_prefactor(a, lambda, shift) +
                                 log_norm_prefactor(b, lambda, shift));

    auto integrate = [&](int order) {
        const GaussLaguerreRule rule = gauss_laguerre(order, alpha);
        double s = 0.0;
        for (int i = 0; i < order; ++i)
            s += rule.weights[i] * laguerre(a, alpha, rule.nodes[i]) *
                 laguerre(b, alpha, rule.nodes[i]);
        return pref * s;
    };

    const int order = a + b + 6;
    const double coarse = integrate(order);
    const double fine = integrate(2 * order);
    if (std::abs(fine - coarse) > 1e-9)
        throw std::runtime_error("orthonormality: quadrature did not converge");
    return fine;
}

double hamiltonian_residual(int n, double lambda, const FiniteDifferenceGrid& grid) {
    require_sector(n, lambda);
    const double h = grid.step;
    if (!(h > 0.0) || !(grid.x_min > 0.0))
        throw std::invalid_argument("hamiltonian_residual: grid requires step > 0, x_min > 0");
    const double energy = n + lambda + 0.5;
    // (a adag + adag a)/2 with the reflection-bearing differential forms of
    // the ladder operators: the x^-2 coefficient is lambda(lambda - R), so
    // lambda(lambda-1) on the even sector and lambda(lambda+1) on the odd.
    const double centrifugal =
        (n % 2 == 0) ? lambda * (lambda - 1.0) : lambda * (lambda + 1.0);
    double x_max = grid.x_max;
    if (x_max <= 0.0) x_max = std::sqrt(2.0 * energy) + 4.0;

    const int count = static_cast<int>(std::floor((x_max - grid.x_min) / h)) + 1;
    if (count < 5) throw std::invalid_argument("hamiltonian_residual: grid too small");
    std::vector<double> values(count + 4);
    for (int i = 0; i < count + 4; ++i) values[i] = psi(n, lambda, grid.x_min + (i - 2) * h);

    double worst = 0.0;
    double peak = 0.0;
    for (int i = 2; i < count + 2; ++i) peak = std::max(peak, std::abs(values[i]));
    for (int i = 2; i < count + 2; ++i) {
        const double x = grid.x_min + (i - 2) * h;
        const double d2 = (-values[i - 2] + 16.0 * values[i - 1] - 30.0 * values[i] +
                           16.0 * values[i + 1] - values[i + 2]) /
                          (12.0 * h * h);
        const double hpsi = 0.5 * (-d2 + (x * x + centrifugal / (x * x)) * values[i]);
        worst = std::max(worst, std::abs(hpsi - energy * values[i]));
    }
    return worst / peak;
}

WavefunctionSample cat_wavefunction(const WignerCatSpec& spec, const std::vector<double>& xs,
                                    int nmax) {
    validate(spec);
    if (xs.size() < 2) throw std::invalid_argument("cat_wavefunction: grid too small");
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1]))
            throw std::invalid_argument("cat_wavefunction: grid must be strictly increasing");
    if (spec.lambda < 0.0)
        for (double x : xs)
            if (x == 0.0)
                throw std::domain_error("cat_wavefunction: x = 0 is singular for lambda < 0");

    const FockVector v = build(spec, nmax);
    WavefunctionSample out;
    out.lambda = spec.lambda;
    out.xs = xs;
    out.values.assign(xs.size(), Complex{0.0, 0.0});
    const int first = (spec.parity == Parity::even) ? 0 : 1;
    for (size_t i = 0; i < xs.size(); ++i) {
        Complex acc{0.0, 0.0};
        for (int k = first; k <= v.nmax(); k += 2) acc += v.amps[k] * psi(k, spec.lambda, xs[i]);
        out.values[i] = acc;
    }
    return out;
}

double cat_wavefunction_norm(const WignerCatSpec& spec, int nmax) {
    validate(spec);
    const FockVector v = build(spec, nmax);
    const int first = (spec.parity == Parity::even) ? 0 : 1;
    const int shift = first;
    const double alpha = spec.lambda - 0.5 + shift;
    const int terms = (v.nmax() - first) / 2 + 1;

    // In t = x^2 the squared wavefunction is t^alpha e^{-t} |g(t)|^2 with g
    // a degree terms-1 polynomial, so an order >= terms rule is exact.
    const GaussLaguerreRule rule = gauss_laguerre(terms + 4, alpha);
    double total = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        Complex g{0.0, 0.0};
        for (int k = 0; k < terms; ++k) {
            const double pk = ((k % 2 == 0) ? 1.0 : -1.0) *
                              std::exp(log_norm_prefactor(k, spec.lambda, shift)) *
                              laguerre(k, alpha, t);
            g += v.amps[first + 2 * k] * pk;
        }
        total += rule.weights[i] * std::norm(g);
    }
    return total;
}

}  // namespace wigcat
