#include "wigcat/catstate.hpp"

#include <cmath>

#include "wigcat/specfun.hpp"

namespace wigcat {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kOddWMin = 1e-8;

double reduce_phase(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

}  // namespace

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

double lambda_lower_bound(Parity p) { return p == Parity::even ? -0.5 : -1.5; }

void validate(const WignerCatSpec& spec) {
    if (!std::isfinite(spec.lambda) || !std::isfinite(spec.w_abs) || !std::isfinite(spec.phi))
        throw std::domain_error("cat state: non-finite parameter");
    if (spec.w_abs < 0.0) throw std::domain_error("cat state: |w| must be >= 0");
    const double bound = lambda_lower_bound(spec.parity);
    if (!(spec.lambda > bound))
        throw std::domain_error(std::string("cat state: ") + parity_name(spec.parity) +
                                " parity requires lambda > " +
                                (spec.parity == Parity::even ? "-1/2" : "-3/2") +
                                " (got " + std::to_string(spec.lambda) + ")");
}

int default_truncation(double w_abs) {
    int n = static_cast<int>(std::ceil(4.0 * w_abs * w_abs + 60.0));
    if (n % 2 != 0) ++n;
    return std::max(64, n);
}

FockVector build(const WignerCatSpec& spec, int nmax) {
    validate(spec);
    if (nmax < 0) nmax = default_truncation(spec.w_abs);

    FockVector v;
    v.lambda = spec.lambda;
    v.amps.assign(nmax + 1, Complex{0.0, 0.0});

    const double lam = spec.lambda;
    const double w = spec.w_abs;
    const double phi = reduce_phase(spec.phi);

    if (spec.parity == Parity::even && w == 0.0) {
        v.amps[0] = 1.0;  // only the n=0 term survives
        return v;
    }
    if (spec.parity == Parity::odd && w < kOddWMin)
        throw std::domain_error("cat state: odd parity is degenerate for |w| < 1e-8 "
                                "(the limit is the basis state |1,lambda>)");

    const double x = w * w;
    const double nu = (spec.parity == Parity::even) ? lam - 0.5 : lam + 0.5;
    // log of the squared prefactor (|w|/sqrt(2))^{2 lambda - 1} / I_nu(|w|^2)
    const double log_pref2 = (2.0 * lam - 1.0) * std::log(w / std::sqrt(2.0)) - log_bessel_i(nu, x);

    if (spec.parity == Parity::even) {
        for (int n = 0; 2 * n <= nmax; ++n) {
            const double log_mag = 0.5 * log_pref2 + 2.0 * n * std::log(w) -
                                   0.5 * (2.0 * n * std::log(2.0) + log_gamma(n + 1.0) +
                                          log_gamma(n + lam + 0.5));
            v.amps[2 * n] = std::polar(std::exp(log_mag), 2.0 * n * phi);
        }
    } else {
        for (int n = 0; 2 * n + 1 <= nmax; ++n) {
            const double log_mag = 0.5 * log_pref2 + (2.0 * n + 1.0) * std::log(w) -
                                   0.5 * ((2.0 * n + 1.0) * std::log(2.0) + log_gamma(n + 1.0) +
                                          log_gamma(n + lam + 1.5));
            v.amps[2 * n + 1] = std::polar(std::exp(log_mag), (2.0 * n + 1.0) * phi);
        }
    }
    return v;
}

double eigenvalue_residual(const WignerCatSpec& spec, const FockVector& v) {
    const Complex w = std::polar(spec.w_abs, spec.phi);
    const Complex w2 = w * w;
    FockVector lowered = apply(Op::annihilate, apply(Op::annihilate, v, kNoLeakageCheck),
                               kNoLeakageCheck);
    double s = 0.0;
    for (int n = 0; n < v.nmax() - 2; ++n) s += std::norm(lowered.amps[n] - w2 * v.amps[n]);
    return std::sqrt(s);
}

}  // namespace wigcat
