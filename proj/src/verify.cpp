#include "wigcat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "wigcat/catstate.hpp"
#include "wigcat/observables.hpp"
#include "wigcat/oracle.hpp"
#include "wigcat/position.hpp"
#include "wigcat/specfun.hpp"

namespace wigcat {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kLambdaGrid = {-1.4, -0.25, 0.0, 0.5, 1.0, 2.5};
const std::vector<double> kWNormalization = {0.1, 0.5, 1.0, 2.0, 4.0};
const std::vector<double> kWOracle = {0.25, 0.5, 1.0, 2.0, 3.5};
const std::vector<double> kPhiGrid = {0.0, kPi / 4.0, kPi / 2.0};
const std::vector<double> kLambdaPosition = {-0.25, 0.0, 0.5, 2.0};

bool sector_ok(double lambda, Parity parity) {
    return lambda > lambda_lower_bound(parity);
}

std::vector<WignerCatSpec> oracle_grid() {
    std::vector<WignerCatSpec> grid;
    for (Parity parity : {Parity::even, Parity::odd})
        for (double lambda : kLambdaGrid)
            for (double w : kWOracle)
                for (double phi : kPhiGrid)
                    if (sector_ok(lambda, parity))
                        grid.push_back({lambda, w, phi, parity});
    return grid;
}

std::string spec_tag(const WignerCatSpec& s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda=%g,w=%g,phi=%g,%s", s.lambda, s.w_abs, s.phi,
                  parity_name(s.parity));
    return buf;
}

std::vector<Check> check_algebra(const VerifyOptions& opt, double tol) {
    std::vector<Check> out;
    for (double lambda : kLambdaGrid) {
        const VerificationReport r = verify_algebra(lambda, opt.algebra_nmax, tol);
        char buf[64];
        std::snprintf(buf, sizeof buf, "algebra/lambda=%g", lambda);
        out.push_back({buf, r.max_residual(), tol, r.max_residual() <= tol});
    }
    return out;
}

std::vector<Check> check_normalization(const VerifyOptions& opt, double tol) {
    double worst = 0.0;
    std::string where = "-";
    for (Parity parity : {Parity::even, Parity::odd})
        for (double lambda : kLambdaGrid)
            for (double w : kWNormalization) {
                if (!sector_ok(lambda, parity)) continue;
                const WignerCatSpec spec{lambda, w, 0.0, parity};
                const double dev = std::abs(build(spec, opt.truncation).norm2() - 1.0);
                if (dev > worst) {
                    worst = dev;
                    where = spec_tag(spec);
                }
            }
    return {{"normalization/bessel-vs-gamma-series max |norm2-1| at " + where, worst, tol,
             worst <= tol}};
}

std::vector<Check> check_eigenvalue(const VerifyOptions& opt, double tol) {
    double worst = 0.0;
    std::string where = "-";
    for (const WignerCatSpec& spec : oracle_grid()) {
        const double res = eigenvalue_residual(spec, build(spec, opt.truncation));
        if (res > worst) {
            worst = res;
            where = spec_tag(spec);
        }
    }
    return {{"eigenvalue/|a^2 W - w^2 W| max at " + where, worst, tol, worst <= tol}};
}

struct FieldRef {
    const char* name;
    double StatisticsReport::*member;
};

constexpr FieldRef kReportFields[] = {
    {"mean_n", &StatisticsReport::mean_n},
    {"mean_n2", &StatisticsReport::mean_n2},
    {"mandel_q", &StatisticsReport::mandel_q},
    {"var_x", &StatisticsReport::var_x},
    {"var_p", &StatisticsReport::var_p},
    {"commutator_mean", &StatisticsReport::commutator_mean},
    {"s_x", &StatisticsReport::s_x},
    {"s_p", &StatisticsReport::s_p},
    {"var_x1", &StatisticsReport::var_x1},
    {"var_x2", &StatisticsReport::var_x2},
    {"mean_j3", &StatisticsReport::mean_j3},
    {"s_1", &StatisticsReport::s_1},
    {"s_2", &StatisticsReport::s_2},
    {"xp_uncertainty_lhs", &StatisticsReport::xp_uncertainty_lhs},
    {"xp_uncertainty_rhs", &StatisticsReport::xp_uncertainty_rhs},
    {"su11_product_ratio", &StatisticsReport::su11_product_ratio},
};

// Relative deviation with an absolute floor: |a-b| / max(|a|,|b|,floor),
// floor = abs_tol / rel_tol, so "<= rel_tol" is exactly the two-tolerance
// acceptance rule. Fields the closed form reports as NaN (the squeezing
// factors at their removable degeneracy) are skipped.
std::vector<Check> check_oracle(const VerifyOptions& opt, double rel_tol) {
    const double floor = opt.oracle_abs_tol / rel_tol;
    double worst = 0.0;
    std::string where = "-";
    int compared = 0;
    for (const WignerCatSpec& spec : oracle_grid()) {
        const StatisticsReport closed = statistics_report(spec);
        const StatisticsReport brute = oracle_statistics(spec, opt.truncation);
        for (const FieldRef& f : kReportFields) {
            const double a = closed.*(f.member);
            const double b = brute.*(f.member);
            if (!std::isfinite(a)) continue;
            ++compared;
            const double dev = std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
            if (dev > worst) {
                worst = dev;
                where = std::string(f.name) + " at " + spec_tag(spec);
            }
        }
    }
    return {{"oracle/closed-form-vs-brute-force max rel dev over " +
                 std::to_string(compared) + " values: " + where,
             worst, rel_tol, worst <= rel_tol}};
}

std::vector<Check> check_su11(const VerifyOptions& opt, double tol) {
    double worst_s = 0.0, worst_ratio = 0.0;
    std::string where_s = "-", where_ratio = "-";
    for (const WignerCatSpec& spec : oracle_grid()) {
        if (spec.phi != 0.0) continue;  // phi-independent quantities
        const StatisticsReport brute = oracle_statistics(spec, opt.truncation);
        const double s = std::max(std::abs(brute.s_1), std::abs(brute.s_2));
        const double ratio = std::abs(brute.su11_product_ratio - 1.0);
        if (s > worst_s) {
            worst_s = s;
            where_s = spec_tag(spec);
        }
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            where_ratio = spec_tag(spec);
        }
    }
    return {{"su11/max |S_1|,|S_2| at " + where_s, worst_s, tol, worst_s <= tol},
            {"su11/max |var_x1*var_x2/(J3^2/4) - 1| at " + where_ratio, worst_ratio, tol,
             worst_ratio <= tol}};
}

std::vector<Check> check_orthonormality(const VerifyOptions&, double tol) {
    double worst = 0.0;
    std::string where = "-";
    for (double lambda : kLambdaPosition)
        for (int n = 0; n <= 12; ++n)
            for (int m = n; m <= 12; ++m) {
                const double target = (n == m) ? 1.0 : 0.0;
                const double dev = std::abs(orthonormality(n, m, lambda) - target);
                if (dev > worst) {
                    worst = dev;
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "(n=%d,m=%d,lambda=%g)", n, m, lambda);
                    where = buf;
                }
            }
    return {{"orthonormality/max |Gram - I| at " + where, worst, tol, worst <= tol}};
}

std::vector<Check> check_hamiltonian(const VerifyOptions&, double tol) {
    double worst = 0.0;
    std::string where = "-";
    for (double lambda : kLambdaPosition)
        for (int n = 0; n <= 10; ++n) {
            const double res = hamiltonian_residual(n, lambda);
            if (res > worst) {
                worst = res;
                char buf[48];
                std::snprintf(buf, sizeof buf, "(n=%d,lambda=%g)", n, lambda);
                where = buf;
            }
        }
    return {{"hamiltonian/max finite-difference residual at " + where, worst, tol,
             worst <= tol}};
}

// lambda = 0 reduction to the ordinary even/odd Schrodinger cat states.
std::vector<Check> check_schrodinger(const VerifyOptions& opt, double amp_tol,
                                     double moment_tol) {
    double worst_amp = 0.0, worst_mom = 0.0;
    for (Parity parity : {Parity::even, Parity::odd})
        for (double w : {0.5, 1.0, 2.0, 3.0})
            for (double phi : {0.0, 0.7}) {
                const WignerCatSpec spec{0.0, w, phi, parity};
                const FockVector v = build(spec, opt.truncation);
                const double x = w * w;
                // ln cosh / ln sinh without overflow
                const double lognorm =
                    (parity == Parity::even)
                        ? x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0)
                        : x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
                const int first = (parity == Parity::even) ? 0 : 1;
                for (int n = first; n <= v.nmax(); n += 2) {
                    const double mag =
                        std::exp(n * std::log(w) - 0.5 * log_gamma(n + 1.0) - 0.5 * lognorm);
                    const Complex expected = std::polar(mag, n * phi);
                    worst_amp = std::max(worst_amp, std::abs(v.amps[n] - expected));
                }
                const double mean_n = number_moments(0.0, w, parity).mean_n;
                const double target =
                    (parity == Parity::even) ? x * std::tanh(x) : x / std::tanh(x);
                worst_mom = std::max(worst_mom, std::abs(mean_n - target));
            }
    return {{"schrodinger/max amplitude deviation from the lambda=0 cat", worst_amp, amp_tol,
             worst_amp <= amp_tol},
            {"schrodinger/max |<N> - |w|^2 tanh/coth(|w|^2)|", worst_mom, moment_tol,
             worst_mom <= moment_tol}};
}

std::vector<double> w_sweep() {
    std::vector<double> w(200);
    for (int i = 0; i < 200; ++i) w[i] = 0.05 + (4.0 - 0.05) * i / 199.0;
    return w;
}

std::vector<Check> check_signs(const VerifyOptions&, double q_limit_tol) {
    std::vector<Check> out;
    const std::vector<double> ws = w_sweep();

    auto extremum = [&](auto fn, bool want_min) {
        double best = want_min ? 1e300 : -1e300;
        for (double w : ws) {
            const double v = fn(w);
            best = want_min ? std::min(best, v) : std::max(best, v);
        }
        return best;
    };

    for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
        const double qmin =
            extremum([&](double w) { return mandel_q(lambda, w, Parity::even); }, true);
        char buf[96];
        std::snprintf(buf, sizeof buf, "signs/Q+ > 0 everywhere (lambda=%g), min Q", lambda);
        out.push_back({buf, qmin, 0.0, qmin > 0.0});
    }
    {
        double qmin = 1e300;
        for (double w : ws)
            if (w > 1.0) qmin = std::min(qmin, mandel_q(-0.25, w, Parity::even));
        out.push_back({"signs/Q+ < 0 somewhere on |w| in (1,4] (lambda=-0.25), min Q", qmin,
                       0.0, qmin < 0.0});
    }
    for (double lambda : {-1.0, -0.25, 0.0}) {
        const double qmax =
            extremum([&](double w) { return mandel_q(lambda, w, Parity::odd); }, false);
        char buf[96];
        std::snprintf(buf, sizeof buf, "signs/Q- < 0 everywhere (lambda=%g), max Q", lambda);
        out.push_back({buf, qmax, 0.0, qmax < 0.0});
    }
    for (double lambda : {0.5, 1.0}) {
        const double qend = mandel_q(lambda, 4.0, Parity::odd);
        char buf[96];
        std::snprintf(buf, sizeof buf, "signs/Q- > 0 at |w|=4 (lambda=%g)", lambda);
        out.push_back({buf, qend, 0.0, qend > 0.0});
    }
    for (double lambda : {1.0, 2.0}) {
        const double smax = extremum(
            [&](double w) { return xp_squeezing(lambda, w, kPi / 2.0, Parity::even).s_x; },
            false);
        char buf[96];
        std::snprintf(buf, sizeof buf, "signs/S_x+ < 0 everywhere (lambda=%g, phi=pi/2), max",
                      lambda);
        out.push_back({buf, smax, 0.0, smax < 0.0});
    }
    for (double lambda : {-1.0, -0.5}) {
        const double smax = extremum(
            [&](double w) { return xp_squeezing(lambda, w, kPi / 2.0, Parity::odd).s_x; },
            false);
        char buf[96];
        std::snprintf(buf, sizeof buf, "signs/S_x- < 0 everywhere (lambda=%g, phi=pi/2), max",
                      lambda);
        out.push_back({buf, smax, 0.0, smax < 0.0});
    }
    {
        double worst = 0.0;
        for (double lambda : {-1.0, -0.25, 0.0, 0.5, 1.0})
            worst = std::max(worst, std::abs(mandel_q(lambda, 1e-2, Parity::odd) + 1.0));
        out.push_back({"signs/Q- -> -1 as |w| -> 0, max |Q+1| at |w|=0.01", worst, q_limit_tol,
                       worst <= q_limit_tol});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& verify_group_names() {
    static const std::vector<std::string> names = {
        "algebra",     "normalization", "eigenvalue",  "oracle", "su11",
        "orthonormality", "hamiltonian", "schrodinger", "signs",
    };
    return names;
}

VerificationReport run_verification(const std::string& only, const VerifyOptions& options) {
    const auto& names = verify_group_names();
    if (!only.empty() && std::find(names.begin(), names.end(), only) == names.end())
        throw std::invalid_argument("unknown verification group: " + only);

    auto want = [&](const char* group) { return only.empty() || only == group; };
    auto tol = [&](double group_tol) { return options.tol_override.value_or(group_tol); };

    VerificationReport report;
    auto append = [&](std::vector<Check> checks) {
        for (Check& c : checks) report.checks.push_back(std::move(c));
    };

    if (want("algebra")) append(check_algebra(options, tol(options.algebra_tol)));
    if (want("normalization"))
        append(check_normalization(options, tol(options.normalization_tol)));
    if (want("eigenvalue")) append(check_eigenvalue(options, tol(options.eigenvalue_tol)));
    if (want("oracle")) append(check_oracle(options, tol(options.oracle_rel_tol)));
    if (want("su11")) append(check_su11(options, tol(options.su11_tol)));
    if (want("orthonormality"))
        append(check_orthonormality(options, tol(options.orthonormality_tol)));
    if (want("hamiltonian")) append(check_hamiltonian(options, tol(options.hamiltonian_tol)));
    if (want("schrodinger"))
        append(check_schrodinger(options, tol(options.schrodinger_amp_tol),
                                 tol(options.schrodinger_moment_tol)));
    if (want("signs")) append(check_signs(options, tol(options.q_limit_tol)));
    return report;
}

}  // namespace wigcat
