// Aggregated verification suites: the algebra relations, cat-state
// normalization, the a^2 eigenvalue property, closed-form vs brute-force
// equivalence over the standard grid, basis orthonormality, the
// finite-difference Hamiltonian check, su(1,1) minimum uncertainty, the
// lambda = 0 Schrodinger limit and the qualitative sign patterns.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wigcat/fock.hpp"

namespace wigcat {

struct VerifyOptions {
    double algebra_tol = 1e-11;
    int algebra_nmax = 64;
    double normalization_tol = 1e-12;
    double eigenvalue_tol = 1e-10;
    double oracle_rel_tol = 1e-9;
    double oracle_abs_tol = 1e-12;
    double su11_tol = 1e-10;
    double orthonormality_tol = 1e-8;
    double hamiltonian_tol = 1e-5;
    double schrodinger_amp_tol = 1e-12;
    double schrodinger_moment_tol = 1e-10;
    double q_limit_tol = 1e-6;
    std::optional<double> tol_override;  // replaces every group tolerance
    int truncation = -1;                 // cat-state truncation, -1 = auto
};

// Group names accepted by `only`; empty string runs everything.
const std::vector<std::string>& verify_group_names();

VerificationReport run_verification(const std::string& only = "",
                                    const VerifyOptions& options = {});

}  // namespace wigcat
