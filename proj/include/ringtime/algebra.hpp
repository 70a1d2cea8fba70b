// Commutator identity engine: residual reports, weak-Weyl and generalized
// commutation checks, parity / PT transforms, and the eigenstate paradox demo.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ringtime/operators.hpp"

namespace ringtime {

struct CommutatorReport {
    std::string name;
    int n_states = 0;
    double residual = 0.0;  // max over states of ||(L-R)psi|| / (||psi|| * scale)
    double scale = 1.0;     // max over states of max(||L psi||, ||R psi||) / ||psi||
    double domain_filter_violation = 0.0;
    double tolerance = 1e-12;
    bool pass = false;
};

CommutatorReport check_identity(const std::string& name, const Operator& lhs,
                                const Operator& rhs, const std::vector<State>& states,
                                double tol = 1e-12);

// A e^{-isB/hbar} psi = e^{-isB/hbar} (A + K(s)) psi over s values and states.
CommutatorReport check_gwwr(const std::string& name, const Operator& A, const Operator& B,
                            const std::function<Operator(double)>& K,
                            const std::vector<double>& s_values,
                            const std::vector<State>& states, double tol = 1e-12);

// e^{-isB/hbar} for hermitian B: diagonal fast path, Jacobi eigendecomposition otherwise.
Operator unitary_exp(const Operator& B, double s);

// Even-harmonic correction: sum over even 2n in the symbol of c_{2n} * 2n * hbar |n><-n|.
Operator gccr_correction(const Basis& b, const FourierSymbol& sym);

struct GccrReport {
    CommutatorReport corrected;   // [H,T] psi = i hbar f'|0 psi + correction psi
    CommutatorReport restricted;  // [H,T] psi = i hbar f'|0 psi, needs the domain filter
};
// The filter violation max_n |c_{2n} <-n|psi>| is evaluated on states as given.
GccrReport check_gccr(const Basis& b, const FourierSymbol& sym,
                      const std::vector<State>& states, double tol = 1e-12);

Operator parity_op(const Basis& b);  // |l> -> |-l>

// (PT) M (PT)^{-1}; with both P and T acting as l -> -l this is entrywise
// conjugation in the l-basis, so pt_symmetric(M) <=> M real in the l-basis.
Operator pt_transform(const Operator& M);
double pt_symmetry_defect(const Operator& M);      // max imag entry / max(1, max abs)
double pt_antisymmetry_defect(const Operator& M);  // max real entry / max(1, max abs)
bool pt_symmetric(const Operator& M, double tol = 1e-14);
bool pt_antisymmetric(const Operator& M, double tol = 1e-14);

struct ParadoxReport {
    int l = 0;
    cplx commutator_expectation;  // <l|[H, T_Theta]|l>, identically zero
    cplx naive_value;             // i hbar, the unrestricted canonical value
};
ParadoxReport paradox_demo(const Basis& b, int l, int theta_harmonics = 64);

}  // namespace ringtime
