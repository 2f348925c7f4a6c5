// Closed-form statistics of Wigner cat states, evaluated directly from
// (lambda, |w|, phi) through modified-Bessel ratios. No state vector is
// built here; the truncated-Fock brute force lives in oracle.hpp.
#pragma once

#include "wigcat/catstate.hpp"

namespace wigcat {

struct StatisticsReport {
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    double mandel_q = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double commutator_mean = 0.0;  // <1 + 2 lambda R> = 1 +- 2 lambda
    double s_x = 0.0;
    double s_p = 0.0;
    double var_x1 = 0.0;
    double var_x2 = 0.0;
    double mean_j3 = 0.0;
    double s_1 = 0.0;
    double s_2 = 0.0;
    double xp_uncertainty_lhs = 0.0;  // var_x * var_p
    double xp_uncertainty_rhs = 0.0;  // |<1+2 lambda R>|^2 / 4
    double su11_product_ratio = 0.0;  // var_x1 var_x2 / (mean_j3^2/4)
};

struct NumberMoments {
    double mean_n;
    double mean_n2;
};

struct XpVariances {
    double var_x;
    double var_p;
    double commutator_mean;
};

struct XpSqueezing {
    double s_x;
    double s_p;
};

struct Su11Statistics {
    double var_x1;
    double var_x2;
    double mean_j3;
    double s_1;
    double s_2;
    double product_ratio;
};

NumberMoments number_moments(double lambda, double w_abs, Parity parity);

// Q = (<N^2> - <N>^2)/<N> - 1; negative means sub-Poissonian statistics.
// Degenerate (throws std::domain_error) for the even state at w = 0.
double mandel_q(double lambda, double w_abs, Parity parity);

XpVariances xp_variances(double lambda, double w_abs, double phi, Parity parity);

// S = (var - |<1+2 lambda R>|/2) / (|<1+2 lambda R>|/2); squeezed iff S < 0.
// Degenerate when 1 +- 2 lambda = 0.
XpSqueezing xp_squeezing(double lambda, double w_abs, double phi, Parity parity);

Su11Statistics su11_statistics(double lambda, double w_abs, Parity parity);

// All of the above for one spec. At the removable squeezing degeneracy
// (odd sector, lambda = +1/2) s_x and s_p are reported as NaN; every other
// field stays defined.
StatisticsReport statistics_report(const WignerCatSpec& spec);

}  // namespace wigcat
