#include "wigcat/fock.hpp"

#include <algorithm>
#include <cmath>

namespace wigcat {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_well_formed(const FockVector& v, const char* where) {
    if (v.amps.empty())
        throw std::invalid_argument(std::string(where) + ": empty amplitude vector");
    if (!std::isfinite(v.lambda))
        throw std::invalid_argument(std::string(where) + ": non-finite lambda");
    for (const Complex& c : v.amps)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument(std::string(where) + ": non-finite amplitude");
}

FockVector zero_like(const FockVector& v) {
    FockVector out;
    out.lambda = v.lambda;
    out.amps.assign(v.amps.size(), Complex{0.0, 0.0});
    out.leakage = v.leakage;
    return out;
}

FockVector raw_annihilate(const FockVector& v) {
    FockVector out = zero_like(v);
    for (int k = 1; k <= v.nmax(); ++k)
        out.amps[k - 1] += ladder_coef(v.lambda, k) * v.amps[k];
    return out;
}

FockVector raw_create(const FockVector& v) {
    FockVector out = zero_like(v);
    const int top = v.nmax();
    for (int k = 0; k < top; ++k)
        out.amps[k + 1] += ladder_coef(v.lambda, k + 1) * v.amps[k];
    out.leakage += std::norm(ladder_coef(v.lambda, top + 1) * v.amps[top]);
    return out;
}

FockVector scaled(FockVector v, Complex s) {
    for (Complex& c : v.amps) c *= s;
    v.leakage *= std::norm(s);
    return v;
}

FockVector sum(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    for (size_t i = 0; i < out.amps.size(); ++i) out.amps[i] += b.amps[i];
    out.leakage = a.leakage + b.leakage;
    return out;
}

FockVector diagonal(const FockVector& v, auto eigenvalue) {
    FockVector out = v;
    for (int n = 0; n <= v.nmax(); ++n) out.amps[n] *= eigenvalue(n);
    return out;
}

}  // namespace

double FockVector::norm2() const {
    double s = 0.0;
    for (const Complex& c : amps) s += std::norm(c);
    return s;
}

const char* op_name(Op op) {
    switch (op) {
        case Op::annihilate: return "annihilate";
        case Op::create: return "create";
        case Op::parity: return "parity";
        case Op::number: return "number";
        case Op::position: return "position";
        case Op::momentum: return "momentum";
        case Op::j_plus: return "j_plus";
        case Op::j_minus: return "j_minus";
        case Op::j3: return "j3";
        case Op::hamiltonian: return "hamiltonian";
    }
    return "?";
}

FockVector basis_state(double lambda, int n, int nmax) {
    if (n < 0 || n > nmax) throw std::invalid_argument("basis_state: index out of range");
    FockVector v;
    v.lambda = lambda;
    v.amps.assign(nmax + 1, Complex{0.0, 0.0});
    v.amps[n] = 1.0;
    return v;
}

Complex ladder_coef(double lambda, int k) {
    const double s = (k % 2 == 0) ? double(k) : double(k) + 2.0 * lambda;
    return s >= 0.0 ? Complex{std::sqrt(s), 0.0} : Complex{0.0, std::sqrt(-s)};
}

FockVector apply(Op op, const FockVector& v, double leakage_tol) {
    check_well_formed(v, "apply");
    const double lam = v.lambda;
    FockVector out;
    switch (op) {
        case Op::annihilate:
            out = raw_annihilate(v);
            break;
        case Op::create:
            out = raw_create(v);
            break;
        case Op::parity:
            out = diagonal(v, [](int n) { return (n % 2 == 0) ? 1.0 : -1.0; });
            break;
        case Op::number:
            out = diagonal(v, [](int n) { return double(n); });
            break;
        case Op::hamiltonian:
            // Diagonal form of (a adag + adag a)/2 on |n,lambda>.
            out = diagonal(v, [lam](int n) { return n + lam + 0.5; });
            break;
        case Op::j3:
            out = diagonal(v, [lam](int n) { return 0.5 * (n + lam + 0.5); });
            break;
        case Op::position:
            out = scaled(sum(raw_annihilate(v), raw_create(v)), 1.0 / std::sqrt(2.0));
            break;
        case Op::momentum:
            out = scaled(sum(raw_annihilate(v), scaled(raw_create(v), -1.0)),
                         -kI / std::sqrt(2.0));
            break;
        case Op::j_minus:
            out = scaled(raw_annihilate(raw_annihilate(v)), 0.5);
            break;
        case Op::j_plus:
            out = scaled(raw_create(raw_create(v)), 0.5);
            break;
    }
    if (out.leakage > leakage_tol)
        throw LeakageError("apply(" + std::string(op_name(op)) +
                           "): truncation leakage " + std::to_string(out.leakage) +
                           " exceeds tolerance " + std::to_string(leakage_tol));
    return out;
}

Complex inner_product(const FockVector& u, const FockVector& v) {
    if (u.lambda != v.lambda)
        throw std::invalid_argument("inner_product: lambda mismatch");
    if (u.amps.size() != v.amps.size())
        throw std::invalid_argument("inner_product: truncation mismatch");
    Complex s{0.0, 0.0};
    for (size_t i = 0; i < u.amps.size(); ++i) s += std::conj(u.amps[i]) * v.amps[i];
    return s;
}

Complex expectation(std::span<const Op> chain, const FockVector& v, double leakage_tol) {
    if (chain.size() > 8) throw std::invalid_argument("expectation: chain longer than 8");
    check_well_formed(v, "expectation");
    if (std::abs(v.norm2() - 1.0) > 1e-6)
        throw std::invalid_argument("expectation: state is not normalized");
    FockVector w = v;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) w = apply(*it, w, leakage_tol);
    return inner_product(v, w);
}

Complex expectation(std::initializer_list<Op> chain, const FockVector& v, double leakage_tol) {
    return expectation(std::span<const Op>(chain.begin(), chain.size()), v, leakage_tol);
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const Check& c : checks) m = std::max(m, c.residual);
    return m;
}

namespace {

using Column = std::vector<Complex>;

// op1(op2(e_j)) with leakage checks disabled; columns near nmax are edge
// polluted, which is why verify_algebra only inspects j <= nmax-4.
Column apply2(Op op1, Op op2, double lambda, int j, int nmax) {
    FockVector v = basis_state(lambda, j, nmax);
    v = apply(op2, v, kNoLeakageCheck);
    v = apply(op1, v, kNoLeakageCheck);
    return v.amps;
}

Column apply1(Op op, double lambda, int j, int nmax) {
    return apply(op, basis_state(lambda, j, nmax), kNoLeakageCheck).amps;
}

double max_abs(const Column& c) {
    double m = 0.0;
    for (const Complex& z : c) m = std::max(m, std::abs(z));
    return m;
}

Column minus(Column a, const Column& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Column plus(Column a, const Column& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

VerificationReport verify_algebra(double lambda, int nmax, double tol) {
    if (nmax < 8) throw std::invalid_argument("verify_algebra: nmax must be >= 8");
    VerificationReport report;
    auto record = [&](const std::string& name, double residual) {
        report.checks.push_back({name, residual, tol, residual <= tol});
    };

    const Complex one{1.0, 0.0};
    double r_comm = 0.0, r_anti_a = 0.0, r_anti_ad = 0.0, r_ada = 0.0, r_na = 0.0;
    double r_jpm = 0.0, r_j3p = 0.0, r_j3m = 0.0, r_xp = 0.0;

    for (int j = 0; j <= nmax - 4; ++j) {
        // [a, adag] - (1 + 2 lambda R)
        {
            Column c = minus(apply2(Op::annihilate, Op::create, lambda, j, nmax),
                             apply2(Op::create, Op::annihilate, lambda, j, nmax));
            const double parity = (j % 2 == 0) ? 1.0 : -1.0;
            c[j] -= one + 2.0 * lambda * parity;
            r_comm = std::max(r_comm, max_abs(c));
        }
        // {R, a} and {R, adag}
        r_anti_a = std::max(r_anti_a,
                            max_abs(plus(apply2(Op::parity, Op::annihilate, lambda, j, nmax),
                                         apply2(Op::annihilate, Op::parity, lambda, j, nmax))));
        r_anti_ad = std::max(r_anti_ad,
                             max_abs(plus(apply2(Op::parity, Op::create, lambda, j, nmax),
                                          apply2(Op::create, Op::parity, lambda, j, nmax))));
        // adag a - (N + lambda (1 - R))
        {
            Column c = apply2(Op::create, Op::annihilate, lambda, j, nmax);
            const double parity = (j % 2 == 0) ? 1.0 : -1.0;
            c[j] -= double(j) + lambda * (1.0 - parity);
            r_ada = std::max(r_ada, max_abs(c));
        }
        // [N, a] + a
        {
            Column c = minus(apply2(Op::number, Op::annihilate, lambda, j, nmax),
                             apply2(Op::annihilate, Op::number, lambda, j, nmax));
            c = plus(c, apply1(Op::annihilate, lambda, j, nmax));
            r_na = std::max(r_na, max_abs(c));
        }
        // [J+, J-] + 2 J3
        {
            Column c = minus(apply2(Op::j_plus, Op::j_minus, lambda, j, nmax),
                             apply2(Op::j_minus, Op::j_plus, lambda, j, nmax));
            c[j] += (j + lambda + 0.5);
            r_jpm = std::max(r_jpm, max_abs(c));
        }
        // [J3, J+] - J+ and [J3, J-] + J-
        {
            Column c = minus(apply2(Op::j3, Op::j_plus, lambda, j, nmax),
                             apply2(Op::j_plus, Op::j3, lambda, j, nmax));
            c = minus(c, apply1(Op::j_plus, lambda, j, nmax));
            r_j3p = std::max(r_j3p, max_abs(c));
        }
        {
            Column c = minus(apply2(Op::j3, Op::j_minus, lambda, j, nmax),
                             apply2(Op::j_minus, Op::j3, lambda, j, nmax));
            c = plus(c, apply1(Op::j_minus, lambda, j, nmax));
            r_j3m = std::max(r_j3m, max_abs(c));
        }
        // [x, p] - i (1 + 2 lambda R)
        {
            Column c = minus(apply2(Op::position, Op::momentum, lambda, j, nmax),
                             apply2(Op::momentum, Op::position, lambda, j, nmax));
            const double parity = (j % 2 == 0) ? 1.0 : -1.0;
            c[j] -= kI * (1.0 + 2.0 * lambda * parity);
            r_xp = std::max(r_xp, max_abs(c));
        }
    }

    record("[a,adag]=1+2*lambda*R", r_comm);
    record("{R,a}=0", r_anti_a);
    record("{R,adag}=0", r_anti_ad);
    record("adag*a=N+lambda*(1-R)", r_ada);
    record("[N,a]=-a", r_na);
    record("[J+,J-]=-2*J3", r_jpm);
    record("[J3,J+]=J+", r_j3p);
    record("[J3,J-]=-J-", r_j3m);
    record("[x,p]=i*(1+2*lambda*R)", r_xp);
    return report;
}

}  // namespace wigcat
