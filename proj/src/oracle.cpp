#include "wigcat/oracle.hpp"

#include <cmath>

#include "wigcat/specfun.hpp"

namespace wigcat {

namespace {

double real_expect(const FockVector& v, std::initializer_list<Op> chain, double& leakage) {
    const OracleResult r = quadratic_form(v, chain);
    leakage = std::max(leakage, r.leakage);
    return r.value.real();
}

}  // namespace

OracleResult moment(const FockVector& v, int power) {
    if (power != 1 && power != 2)
        throw std::invalid_argument("moment: power must be 1 or 2");
    double s = 0.0;
    for (int n = 0; n <= v.nmax(); ++n)
        s += (power == 1 ? double(n) : double(n) * double(n)) * std::norm(v.amps[n]);
    return {Complex{s, 0.0}, v.leakage, int(v.amps.size())};
}

OracleResult quadratic_form(const FockVector& v, std::span<const Op> chain,
                            double leakage_tol) {
    FockVector w = v;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) w = apply(*it, w, leakage_tol);
    return {inner_product(v, w), w.leakage, int(v.amps.size())};
}

OracleResult quadratic_form(const FockVector& v, std::initializer_list<Op> chain,
                            double leakage_tol) {
    return quadratic_form(v, std::span<const Op>(chain.begin(), chain.size()), leakage_tol);
}

FockVector reference_state(const WignerCatSpec& spec, int nmax) {
    validate(spec);
    if (nmax < 0) nmax = default_truncation(spec.w_abs);

    FockVector v;
    v.lambda = spec.lambda;
    v.amps.assign(nmax + 1, Complex{0.0, 0.0});

    if (spec.parity == Parity::even && spec.w_abs == 0.0) {
        v.amps[0] = 1.0;
        return v;
    }
    if (spec.parity == Parity::odd && spec.w_abs < 1e-8)
        throw std::domain_error("reference_state: odd parity is degenerate for |w| < 1e-8");

    // Unnormalized log weights ln |c_n|, shifted by their maximum before
    // exponentiation; the Bessel prefactor never enters.
    const double lam = spec.lambda;
    const double logw = std::log(spec.w_abs);
    const int first = (spec.parity == Parity::even) ? 0 : 1;
    std::vector<double> logmag;
    for (int n = first; n <= nmax; n += 2) {
        const int k = (n - first) / 2;
        const double g = (spec.parity == Parity::even) ? log_gamma(k + lam + 0.5)
                                                       : log_gamma(k + lam + 1.5);
        logmag.push_back(n * logw - 0.5 * (n * std::log(2.0) + log_gamma(k + 1.0) + g));
    }
    double peak = logmag[0];
    for (double m : logmag) peak = std::max(peak, m);
    double sum2 = 0.0;
    for (size_t i = 0; i < logmag.size(); ++i) {
        const double mag = std::exp(logmag[i] - peak);
        v.amps[first + 2 * int(i)] = std::polar(mag, (first + 2.0 * i) * spec.phi);
        sum2 += mag * mag;
    }
    const double inv = 1.0 / std::sqrt(sum2);
    for (Complex& c : v.amps) c *= inv;
    return v;
}

StatisticsReport oracle_statistics(const WignerCatSpec& spec, int nmax) {
    const FockVector v = reference_state(spec, nmax);
    StatisticsReport r;
    double leak = 0.0;

    r.mean_n = moment(v, 1).value.real();
    r.mean_n2 = moment(v, 2).value.real();
    r.mandel_q = (r.mean_n2 - r.mean_n * r.mean_n) / r.mean_n - 1.0;

    const double mx = real_expect(v, {Op::position}, leak);
    const double mp = real_expect(v, {Op::momentum}, leak);
    r.var_x = real_expect(v, {Op::position, Op::position}, leak) - mx * mx;
    r.var_p = real_expect(v, {Op::momentum, Op::momentum}, leak) - mp * mp;
    r.commutator_mean = 1.0 + 2.0 * spec.lambda * real_expect(v, {Op::parity}, leak);
    const double half_xp = 0.5 * std::abs(r.commutator_mean);
    r.s_x = (r.var_x - half_xp) / half_xp;
    r.s_p = (r.var_p - half_xp) / half_xp;

    const Complex jm = quadratic_form(v, {Op::j_minus}).value;
    const Complex jp = quadratic_form(v, {Op::j_plus}).value;
    const double mmm = real_expect(v, {Op::j_minus, Op::j_minus}, leak);
    const double mmp = real_expect(v, {Op::j_minus, Op::j_plus}, leak);
    const double mpm = real_expect(v, {Op::j_plus, Op::j_minus}, leak);
    const double mpp = real_expect(v, {Op::j_plus, Op::j_plus}, leak);
    const double x1_mean = 0.5 * (jm + jp).real();   // <(J- + J+)/2>
    const double x2_mean = 0.5 * (jm - jp).imag();   // <(J- - J+)/2i>
    r.var_x1 = 0.25 * (mmm + mmp + mpm + mpp) - x1_mean * x1_mean;
    r.var_x2 = -0.25 * (mmm - mmp - mpm + mpp) - x2_mean * x2_mean;
    r.mean_j3 = real_expect(v, {Op::j3}, leak);
    const double half_j3 = 0.5 * std::abs(r.mean_j3);
    r.s_1 = (r.var_x1 - half_j3) / half_j3;
    r.s_2 = (r.var_x2 - half_j3) / half_j3;

    r.xp_uncertainty_lhs = r.var_x * r.var_p;
    r.xp_uncertainty_rhs = 0.25 * r.commutator_mean * r.commutator_mean;
    r.su11_product_ratio = (r.var_x1 * r.var_x2) / (0.25 * r.mean_j3 * r.mean_j3);
    return r;
}

}  // namespace wigcat
