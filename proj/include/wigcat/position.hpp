// Position-representation layer: evaluates the weighted-Hermite basis
// psi_n^lambda(x) and cat-state wavefunctions on grids, verifies
// orthonormality by generalized Gauss-Laguerre quadrature in t = x^2, and
// checks the pseudo-harmonic-oscillator eigenvalue equation by finite
// differences.
#pragma once

#include <vector>

#include "wigcat/catstate.hpp"

namespace wigcat {

struct WavefunctionSample {
    double lambda = 0.0;
    std::vector<double> xs;
    std::vector<Complex> values;
};

// psi_n^lambda(x), normalized. Even n requires lambda > -1/2, odd n
// lambda > -3/2; x = 0 is rejected for lambda < 0 (|x|^lambda cusp).
double psi(int n, double lambda, double x);

// Nodes and weights for the weight t^alpha e^{-t} on (0, inf), alpha > -1.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLaguerreRule gauss_laguerre(int order, double alpha);

// integral of psi_n psi_m over the real line. Opposite-parity pairs return
// 0 exactly (odd integrand); same-parity pairs are reduced to a
// Gauss-Laguerre form in t = x^2 and evaluated at two orders, throwing if
// the refinement does not agree.
double orthonormality(int n, int m, double lambda);

struct FiniteDifferenceGrid {
    double x_min = 0.2;   // origin exclusion; the potential and the basis
    double x_max = 0.0;   // <= 0 selects a turning-point based default
    double step = 1e-3;
};

// max over the grid of |H psi_n - E_n psi_n| / max |psi_n| with
// E_n = n + lambda + 1/2, using a 5-point second-derivative stencil on
// H = (-d^2/dx^2 + x^2 + lambda(lambda - (-1)^n)/x^2)/2; the reflection
// operator inside (a adag + adag a)/2 makes the centrifugal coefficient
// parity-dependent.
double hamiltonian_residual(int n, double lambda, const FiniteDifferenceGrid& grid = {});

// sum_n c_n psi_n(x) over the grid. Grid must be strictly increasing and,
// for lambda < 0, exclude x = 0.
WavefunctionSample cat_wavefunction(const WignerCatSpec& spec, const std::vector<double>& xs,
                                    int nmax = -1);

// integral of |cat wavefunction|^2 by Gauss-Laguerre quadrature; equals 1
// up to truncation and quadrature error.
double cat_wavefunction_norm(const WignerCatSpec& spec, int nmax = -1);

}  // namespace wigcat
