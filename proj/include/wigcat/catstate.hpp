// Construction of normalized even/odd Wigner cat states as FockVectors,
// their defining a^2 eigenvalue property, and the lambda -> 0 limit in
// which they reduce to ordinary even/odd Schrodinger cat states.
#pragma once

#include "wigcat/fock.hpp"

namespace wigcat {

enum class Parity { even, odd };

const char* parity_name(Parity p);

// The triple (lambda, w = |w| e^{i phi}, parity sector) defining one state.
// Even states require lambda > -1/2, odd states lambda > -3/2.
struct WignerCatSpec {
    double lambda = 0.0;
    double w_abs = 1.0;
    double phi = 0.0;
    Parity parity = Parity::even;
};

// Throws std::domain_error naming the violated sector bound.
void validate(const WignerCatSpec& spec);

// Smallest lower bound on lambda for a sector, for diagnostics.
double lambda_lower_bound(Parity p);

// Truncation giving dropped tail mass far below 1e-16 for the supported
// |w| range: max(64, smallest even integer >= 4|w|^2 + 60).
int default_truncation(double w_abs);

// Builds the state with the analytic Bessel-function prefactor; the result
// satisfies sum |c_n|^2 = 1 to ~1e-13 without renormalization, which is
// itself a cross-check of bessel_i against the Gamma-series coefficients.
// nmax < 0 selects default_truncation. Odd states with |w| < 1e-8 are
// rejected (the defining expression degenerates to 0/0 there; the analytic
// limit is the basis state |1,lambda>).
FockVector build(const WignerCatSpec& spec, int nmax = -1);

// || a^2 v - w^2 v || restricted to indices below nmax-2.
double eigenvalue_residual(const WignerCatSpec& spec, const FockVector& v);

}  // namespace wigcat
