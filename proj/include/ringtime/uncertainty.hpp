// Uncertainty relations for hermitian and non-hermitian operator pairs:
// Robertson, the symmetrized-deviation generalization, and the two
// Cauchy-Schwarz covariance bounds, plus a seeded random-state batch.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringtime/operators.hpp"

namespace ringtime {

cplx expectation(const Operator& A, const State& psi);

// sqrt(<A^dag A> - |<A>|^2) = ||(A - <A>) psi|| for normalized psi.
double deviation(const Operator& A, const State& psi);
// Symmetrized deviation (dA + dA^dag) / 2, equal to dA for hermitian A.
double deviation_sym(const Operator& A, const State& psi);

struct UncertaintyReport {
    std::string relation;
    double lhs = 0.0;    // product of deviations
    double rhs = 0.0;    // bound
    double slack = 0.0;  // lhs - rhs
    double scale = 0.0;  // max(lhs, rhs, hbar), sets the rounding allowance
    bool holds = false;  // slack >= -1e-12 * scale
};

// dA dB >= |<[A,B]>| / 2, hermitian pairs only.
UncertaintyReport robertson(const Operator& A, const Operator& B, const State& psi);

// Symmetrized form valid for non-hermitian operators: dA0 dB0 >= |<[A,B]>| / 2.
UncertaintyReport dou_du(const Operator& A, const Operator& B, const State& psi);

// Covariance bounds: |<AB> - <A><B>| <= d(A^dag) dB and
// |<A><B> - <BA>| <= dA d(B^dag); their sum dominates |<[A,B]>|.
std::pair<UncertaintyReport, UncertaintyReport> cauchy_schwarz_bounds(const Operator& A,
                                                                      const Operator& B,
                                                                      const State& psi);

struct PresetPair {
    std::string name;
    Operator A, B;
};
// (pi, W), (H, T^PT), (H, T_S1), (pi, C) — the pairs whose bounds reduce to
// |<W>|, |<W>|, |<C>|, |<S>| respectively.
std::vector<PresetPair> preset_pairs(const Basis& b);

struct BatchResult {
    int n_states = 0;
    double min_scaled_slack = 0.0;  // min over all reports of slack / scale
    bool all_hold = false;
    bool composition_holds = false;  // mean CS bound sandwiched under dou_du lhs
    std::vector<UncertaintyReport> worst;  // per relation x preset, smallest slack
};
BatchResult uncertainty_batch(const Basis& b, int n_states, unsigned long long seed,
                              int margin = 8);

}  // namespace ringtime
