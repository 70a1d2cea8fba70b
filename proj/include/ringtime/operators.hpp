// Dense operators on the truncated ring basis: momentum, kinetic Hamiltonian, the
// unitary shift family, and the time operators assembled from them.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringtime/basis.hpp"

namespace ringtime {

struct Operator {
    Basis basis;
    int n = 0;                 // matrix dimension, = basis.dim()
    std::vector<cplx> m;       // row-major
    bool hermitian = false;    // producer-asserted; checked in tests
    bool real_entries = false; // entrywise real in the l-basis
    int bandwidth = 0;         // entries vanish for |l_out - l_in| > bandwidth

    cplx& at(int row, int col) { return m[static_cast<size_t>(row) * n + col]; }
    cplx at(int row, int col) const { return m[static_cast<size_t>(row) * n + col]; }
    // Indexed by momentum quantum numbers.
    cplx& el(int l_out, int l_in) { return at(l_out + basis.L, l_in + basis.L); }
    cplx el(int l_out, int l_in) const { return at(l_out + basis.L, l_in + basis.L); }
};

Operator zero_op(const Basis& b);
Operator identity_op(const Basis& b);

Operator add(const Operator& A, const Operator& B);
Operator sub(const Operator& A, const Operator& B);
Operator scale(const Operator& A, cplx s);
Operator mul(const Operator& A, const Operator& B);
Operator adjoint(const Operator& A);
Operator commutator(const Operator& A, const Operator& B);

State apply(const Operator& A, const State& s);

double frobenius(const Operator& A);
double max_abs(const Operator& A);
double hermiticity_defect(const Operator& A);  // ||A - A^dag||_F / max(||A||_F, tiny)
double max_imag_entry(const Operator& A);
double max_real_entry(const Operator& A);

// --- basic operators -------------------------------------------------------

// Angular momentum, diagonal l hbar.
Operator momentum_op(const Basis& b);
// Kinetic Hamiltonian, diagonal l^2 hbar^2 / (2 I).
Operator hamiltonian_op(const Basis& b);
// Shift by n momentum quanta: <l+n| W^n |l> = 1. Truncation drops amplitudes that
// leave the window, so the matrix is only isometric on interior states.
Operator shift_op(const Basis& b, int n);
// Norm-squared fraction lost when applying shift_op(n): (|psi|^2 - |W^n psi|^2)/|psi|^2.
double shift_leakage(const Basis& b, int n, const State& s);

// Diagonal time-scale factor n hbar / (E_{l+n} - E_l) = 2 I / ((2l+n) hbar).
// For even n the level l = -n/2 sits at the degeneracy and is projected to zero.
// n = 0 is rejected. Bounded: |entries| <= 2 I / hbar.
Operator gap_time_op(const Basis& b, int n);

// --- Fourier symbols and multiplication operators --------------------------

// Finite set of coefficients c_n of f(theta) = sum c_n e^{i n theta}.
struct FourierSymbol {
    std::vector<std::pair<int, cplx>> c;  // sorted by n, unique

    cplx coef(int n) const;
    int n_max() const;
    bool hermitian(double tol = 0.0) const;  // c_{-n} == conj(c_n)
    // Builds a hermitian symbol from the n > 0 side (plus optional real c_0).
    static FourierSymbol from_positive_side(const std::vector<std::pair<int, cplx>>& pos,
                                            double c0 = 0.0);
};

FourierSymbol cosine_symbol();    // c_{+-1} = 1/2
FourierSymbol sine_symbol();      // c_{+-1} = -+ i/2, i.e. f = sin theta
FourierSymbol sawtooth_symbol(int n_max);  // c_n = (-1)^{n+1} / (i n), truncated

// f_op: sum c_n W^n. Hermitian symbols are required (matrix then hermitian).
Operator fourier_op(const Basis& b, const FourierSymbol& sym);
// Shift-derivative at zero: sum c_n (i n) W^n == (i/hbar) [momentum, fourier_op].
Operator fourier_derivative_op(const Basis& b, const FourierSymbol& sym);
// Symbol of f(theta + s): coefficients c_n e^{i n s}.
FourierSymbol shifted_symbol(const FourierSymbol& sym, double s);

Operator cosine_op(const Basis& b);
Operator sine_op(const Basis& b);
Operator sawtooth_op(const Basis& b, int n_max);

// --- time operators ---------------------------------------------------------

// General construction -(1/2) sum_n [ c_n W^n mu_n + conj(c_n) mu_n W^{-n} ].
// Requires a hermitian symbol with c_0 = 0; hermitian by construction.
// Operator norm bound: 2 I / hbar * sum |c_n|.
Operator time_op(const Basis& b, const FourierSymbol& sym);

// Sine-symbol time operator (mu_1 W^dag - W mu_1)/(2i): tridiagonal, zero diagonal,
// purely imaginary entries, <l+1|T|l> = i I/((2l+1) hbar).
Operator sine_time_op(const Basis& b);
// Cosine-symbol time operator plus its diagonal offset: mu_1 - (W mu_1 + mu_1 W^dag)/2.
Operator cosine_time_op(const Basis& b);
// Truncated sawtooth-symbol time operator, default depth 64.
Operator sawtooth_time_op(const Basis& b, int n_max = 64);
// Non-hermitian lower-bidiagonal (1 - W) mu_1; equals cosine_time_op + i sine_time_op.
Operator pt_time_op(const Basis& b);

// Position-representation ratio <theta|cosine_time_op|l> / <theta|l> evaluated
// analytically: (2 I / hbar) (1 - 2l + 2l cos t - i sin t) / (1 - 4 l^2).
cplx cosine_time_ratio(const Basis& b, double theta, int l);

}  // namespace ringtime
