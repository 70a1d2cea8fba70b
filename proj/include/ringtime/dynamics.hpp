// Heisenberg evolution on the ring, periodicity verification, commutation
// factor K(t), and the two-level Floquet toy model.
#pragma once

#include <string>
#include <vector>

#include "ringtime/operators.hpp"

namespace ringtime {

// A(t) entries A_{l'l} e^{i t (E_{l'} - E_l) / hbar}; H is diagonal here.
Operator heisenberg_evolve(const Operator& A, double t);

// Phases e^{-i E_l t / hbar} on the coefficients.
State evolve_state(const State& s, double t);

double ring_period(const Basis& b);  // 4 pi I / hbar

// max over a sample grid t in [0, P) of ||A(t+P) - A(t)|| / ||A|| (spectral norms).
double verify_period(const Operator& A, double P, int samples = 64);

Operator commutation_factor(const Operator& T, double t);  // T(t) - T

// || (K(h) - K(-h)) / 2h + f'|0 || for the symbol's time operator; central
// differences converge at O(h^2), so the ratio at h vs h/2 is ~4.
double derivative_residual(const Basis& b, const FourierSymbol& sym, double h);

// --- two-level Floquet toy ---------------------------------------------------

struct Mat2 {
    cplx a{}, b{}, c{}, d{};  // row-major [[a,b],[c,d]]
};
Mat2 pauli(int k);  // k = 1,2,3
Mat2 mul2(const Mat2& x, const Mat2& y);
Mat2 sub2(const Mat2& x, const Mat2& y);
Mat2 add2(const Mat2& x, const Mat2& y);
Mat2 scale2(const Mat2& x, cplx s);
Mat2 dagger2(const Mat2& x);
double norm2(const Mat2& x);  // Frobenius
Mat2 commutator2(const Mat2& x, const Mat2& y);

struct FloquetSample {
    double t = 0.0;
    Mat2 T;  // U^dag(t) sigma_2 U(t)
    Mat2 K;  // T(t) - T(0)
};

struct FloquetTrace {
    double pulse_area = 0.0;
    double period = 0.0;  // drive period P
    double g = 0.0;       // pulse amplitude, pulse_area / pi
    std::vector<FloquetSample> samples;
    double period_P_residual = 0.0;   // max_t ||T(t+P) - T(t)||
    double period_2P_residual = 0.0;  // max_t ||T(t+2P) - T(t)||
    double period_estimate = 0.0;     // smallest n*P (n <= 4) with operator return, 0 if none
};

// Drive H(t) = g sigma_1 on [0, pi), 0 on [pi, P); all snapshots commute, so
// U(t) = exp(-i g sigma_1 tau(t)) with tau the accumulated pulse time.
FloquetTrace floquet_toy(double pulse_area, int n_periods, int steps_per_period,
                         double period = 2.0 * kPi);

}  // namespace ringtime
