// Independent brute-force evaluation path: every statistic is computed
// directly from truncated-Fock amplitudes and ladder actions. The reference
// state is normalized by an explicit coefficient sum, never through Bessel
// functions, so the closed forms in observables.hpp and this module share
// no evaluation machinery beyond log_gamma.
#pragma once

#include "wigcat/catstate.hpp"
#include "wigcat/observables.hpp"

namespace wigcat {

struct OracleResult {
    Complex value{0.0, 0.0};
    double leakage = 0.0;
    int terms_used = 0;
};

// sum_n n^power |c_n|^2 for power in {1, 2}.
OracleResult moment(const FockVector& v, int power);

// <v| chain |v> with truncation-leakage accounting, last element first.
OracleResult quadratic_form(const FockVector& v, std::span<const Op> chain,
                            double leakage_tol = kDefaultLeakageTol);
OracleResult quadratic_form(const FockVector& v, std::initializer_list<Op> chain,
                            double leakage_tol = kDefaultLeakageTol);

// Gamma-series amplitudes of the cat state, normalized by their explicit
// sum of squares. nmax < 0 selects default_truncation.
FockVector reference_state(const WignerCatSpec& spec, int nmax = -1);

// The full report assembled from moments and operator chains on the
// reference state.
StatisticsReport oracle_statistics(const WignerCatSpec& spec, int nmax = -1);

}  // namespace wigcat
