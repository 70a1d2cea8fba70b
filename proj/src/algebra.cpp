#include "ringtime/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ringtime/eigensolve.hpp"

namespace ringtime {

namespace {

double state_norm_checked(const State& s, const char* who) {
    double n = norm(s);
    if (!(n > 0.0)) throw std::invalid_argument(std::string(who) + ": zero state");
    return n;
}

}  // namespace

CommutatorReport check_identity(const std::string& name, const Operator& lhs,
                                const Operator& rhs, const std::vector<State>& states,
                                double tol) {
    if (!(lhs.basis == rhs.basis)) throw std::invalid_argument("check_identity: basis mismatch");
    if (states.empty()) throw std::invalid_argument("check_identity: no states");
    CommutatorReport rep;
    rep.name = name;
    rep.n_states = static_cast<int>(states.size());
    rep.tolerance = tol;
    double max_diff = 0.0, scale = 0.0;
    for (const State& s : states) {
        double ns = state_norm_checked(s, "check_identity");
        State ls = apply(lhs, s);
        State rs = apply(rhs, s);
        scale = std::max(scale, std::max(norm(ls), norm(rs)) / ns);
        double d = 0.0;
        for (size_t i = 0; i < ls.a.size(); ++i) d += std::norm(ls.a[i] - rs.a[i]);
        max_diff = std::max(max_diff, std::sqrt(d) / ns);
    }
    rep.scale = scale;
    rep.residual = max_diff / std::max(scale, 1e-30);
    rep.pass = rep.residual <= tol;
    return rep;
}

Operator unitary_exp(const Operator& B, double s) {
    if (!B.hermitian) throw std::invalid_argument("unitary_exp: generator not hermitian");
    if (hermiticity_defect(B) > 1e-12)
        throw std::invalid_argument("unitary_exp: hermiticity defect too large");
    Operator U = zero_op(B.basis);
    U.hermitian = false;
    U.real_entries = false;
    double hb = B.basis.hbar;
    if (B.bandwidth == 0) {
        for (int i = 0; i < B.n; ++i)
            U.at(i, i) = std::polar(1.0, -s * B.at(i, i).real() / hb);
        U.bandwidth = 0;
        return U;
    }
    EigenSystem es = hermitian_eigen(B);
    U.bandwidth = B.n - 1;
    for (int k = 0; k < es.n; ++k) {
        cplx ph = std::polar(1.0, -s * es.values[k] / hb);
        for (int i = 0; i < B.n; ++i) {
            cplx vik = es.vec(i, k) * ph;
            for (int j = 0; j < B.n; ++j) U.at(i, j) += vik * std::conj(es.vec(j, k));
        }
    }
    return U;
}

CommutatorReport check_gwwr(const std::string& name, const Operator& A, const Operator& B,
                            const std::function<Operator(double)>& K,
                            const std::vector<double>& s_values,
                            const std::vector<State>& states, double tol) {
    if (s_values.empty()) throw std::invalid_argument("check_gwwr: no s values");
    CommutatorReport rep;
    rep.name = name;
    rep.n_states = static_cast<int>(states.size());
    rep.tolerance = tol;
    double max_diff = 0.0, scale = 0.0;
    for (double s : s_values) {
        Operator U = unitary_exp(B, s);
        Operator lhs = mul(A, U);
        Operator rhs = mul(U, add(A, K(s)));
        for (const State& st : states) {
            double ns = state_norm_checked(st, "check_gwwr");
            State ls = apply(lhs, st);
            State rs = apply(rhs, st);
            scale = std::max(scale, std::max(norm(ls), norm(rs)) / ns);
            double d = 0.0;
            for (size_t i = 0; i < ls.a.size(); ++i) d += std::norm(ls.a[i] - rs.a[i]);
            max_diff = std::max(max_diff, std::sqrt(d) / ns);
        }
    }
    rep.scale = scale;
    rep.residual = max_diff / std::max(scale, 1e-30);
    rep.pass = rep.residual <= tol;
    return rep;
}

Operator gccr_correction(const Basis& b, const FourierSymbol& sym) {
    Operator op = zero_op(b);
    op.hermitian = false;
    int bw = 0;
    for (const auto& [m, cm] : sym.c) {
        if (m == 0 || m % 2 != 0) continue;
        int n = m / 2;
        if (std::abs(n) > b.L) continue;  // pair |n><-n| outside the window
        op.el(n, -n) += cm * static_cast<double>(m) * b.hbar;
        bw = std::max(bw, std::abs(m));
        if (cm.imag() != 0.0) op.real_entries = false;
    }
    op.bandwidth = bw;
    return op;
}

GccrReport check_gccr(const Basis& b, const FourierSymbol& sym,
                      const std::vector<State>& states, double tol) {
    Operator H = hamiltonian_op(b);
    Operator T = time_op(b, sym);
    Operator lhs = commutator(H, T);
    Operator bare = scale(fourier_derivative_op(b, sym), cplx{0.0, b.hbar});

    GccrReport out;
    out.corrected = check_identity("gccr corrected", lhs, add(bare, gccr_correction(b, sym)),
                                   states, tol);
    out.restricted = check_identity("gccr restricted", lhs, bare, states, tol);

    double viol = 0.0;
    for (const State& st : states) {
        for (const auto& [m, cm] : sym.c) {
            if (m == 0 || m % 2 != 0) continue;
            int n = m / 2;
            if (std::abs(n) > b.L) continue;
            viol = std::max(viol, std::abs(cm * st.coef(-n)));
        }
    }
    out.restricted.domain_filter_violation = viol;
    out.corrected.domain_filter_violation = viol;
    return out;
}

Operator parity_op(const Basis& b) {
    Operator op = zero_op(b);
    op.bandwidth = op.n - 1;
    for (int l = -b.L; l <= b.L; ++l) op.el(-l, l) = 1.0;
    return op;
}

Operator pt_transform(const Operator& M) {
    Operator out = M;
    for (cplx& z : out.m) z = std::conj(z);
    return out;
}

double pt_symmetry_defect(const Operator& M) {
    return max_imag_entry(M) / std::max(1.0, max_abs(M));
}

double pt_antisymmetry_defect(const Operator& M) {
    return max_real_entry(M) / std::max(1.0, max_abs(M));
}

bool pt_symmetric(const Operator& M, double tol) { return pt_symmetry_defect(M) <= tol; }

bool pt_antisymmetric(const Operator& M, double tol) { return pt_antisymmetry_defect(M) <= tol; }

ParadoxReport paradox_demo(const Basis& b, int l, int theta_harmonics) {
    if (l == 0 || std::abs(l) > b.L - 1)
        throw std::invalid_argument("paradox_demo: need 0 < |l| <= L-1");
    Operator H = hamiltonian_op(b);
    Operator T = sawtooth_time_op(b, theta_harmonics);
    Operator C = commutator(H, T);
    ParadoxReport rep;
    rep.l = l;
    rep.commutator_expectation = C.el(l, l);
    rep.naive_value = cplx{0.0, b.hbar};
    return rep;
}

}  // namespace ringtime
