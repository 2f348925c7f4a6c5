// Truncated deformed-Fock-space engine for the Wigner-Heisenberg algebra:
// states in the |n,lambda> basis, the ladder operators a / a^dag, parity R,
// number N, the canonical pair (x, p_lambda), the Hamiltonian and the
// su(1,1) generators, all as actions on coefficient vectors.
#pragma once

#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wigcat {

using Complex = std::complex<double>;

enum class Op {
    annihilate,
    create,
    parity,
    number,
    position,
    momentum,
    j_plus,
    j_minus,
    j3,
    hamiltonian,
};

const char* op_name(Op op);

// Coefficients c_0..c_nmax over the kets |n,lambda>. Values are immutable by
// convention: every operation returns a fresh vector. `leakage` accumulates
// the squared magnitude pushed past nmax by raising operators.
struct FockVector {
    double lambda = 0.0;
    std::vector<Complex> amps;
    double leakage = 0.0;

    int nmax() const { return static_cast<int>(amps.size()) - 1; }
    double norm2() const;
};

struct LeakageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultLeakageTol = 1e-8;
inline constexpr double kNoLeakageCheck = std::numeric_limits<double>::infinity();

FockVector basis_state(double lambda, int n, int nmax);

// Ladder coefficient linking |k-1,lambda> <-> |k,lambda>: sqrt(k) for even k
// and sqrt(k + 2 lambda) for odd k. For lambda < -1/2 the odd-k value is
// imaginary; raising and lowering share the branch so that operator products
// restricted to the valid (odd) sector stay real.
Complex ladder_coef(double lambda, int k);

FockVector apply(Op op, const FockVector& v, double leakage_tol = kDefaultLeakageTol);

Complex inner_product(const FockVector& u, const FockVector& v);

// <v| op_1 ... op_k |v>, the last chain element acting first. Chain length
// is capped at 8; `v` must be normalized.
Complex expectation(std::span<const Op> chain, const FockVector& v,
                    double leakage_tol = kDefaultLeakageTol);
Complex expectation(std::initializer_list<Op> chain, const FockVector& v,
                    double leakage_tol = kDefaultLeakageTol);

struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_pass() const;
    double max_residual() const;
};

// Checks the algebra relations on every basis vector with index <= nmax-4
// (interior, away from the truncation edge), each as a max absolute
// elementwise residual against `tol`:
//   [a,adag] = 1+2lambda R     {R,a} = {R,adag} = 0
//   adag a   = N+lambda(1-R)   [N,a] = -a
//   [J+,J-]  = -2 J3           [J3,J+-] = +- J+-
//   [x,p]    = i(1+2lambda R)
VerificationReport verify_algebra(double lambda, int nmax, double tol);

}  // namespace wigcat
