// Analytic biorthogonal eigensystem of the PT time operator, quadrature
// residual checks, triangular spectrum read-off, and a hermitian-spectrum wrapper.
#pragma once

#include <utility>
#include <vector>

#include "ringtime/basis.hpp"
#include "ringtime/eigensolve.hpp"
#include "ringtime/operators.hpp"

namespace ringtime {

struct BiorthogonalPair {
    int nu = 0;
    double tau = 0.0;    // 2I / ((2 nu + 1) hbar)
    GridFunction phi;    // right eigenfunction, unit quadrature norm
    GridFunction chi;    // left eigenfunction of the adjoint
    double phi0 = 0.0;   // normalization constants, both real positive,
    double chi0 = 0.0;   // fixed by 2 pi chi0 phi0 = 1
};

// phi_nu = phi0 (1 - e^{i theta}) e^{i theta nu} e^{-(nu+1/2) e^{i theta}},
// chi_nu = chi0 e^{i theta nu} e^{(nu+1/2) e^{-i theta}}.
BiorthogonalPair pt_eigenpair(const Basis& b, int nu, int nu_max = 10);

struct EigenResiduals {
    double right = 0.0;  // ||T phi - tau phi|| / ||phi||
    double left = 0.0;   // ||T^dag chi - tau chi|| / ||chi||
};

// Matrix-application residuals of the analytic pair; throws if either
// eigenfunction is not contained in the momentum window.
EigenResiduals eigen_residuals(const BiorthogonalPair& pair);
double eigen_residual(const BiorthogonalPair& pair);  // max of the two

// Eigenvalues of the truncated lower-bidiagonal PT time operator, read off its
// diagonal: (l, 2I/((2l+1) hbar)) for l in [-L, L].
std::vector<std::pair<int, double>> triangular_spectrum(const Basis& b);

// Sum |a_nu|^2 tau_nu for normalized weights.
double arrival_expectation(const Basis& b, const std::vector<std::pair<int, cplx>>& weights);
// Quadrature cross-check <Psi_bar| T^PT |Psi> with Psi = sum a phi, Psi_bar = sum a chi.
cplx arrival_quadrature(const Basis& b, const std::vector<std::pair<int, cplx>>& weights);

// Gram matrix G[nu, mu] = <chi_nu | phi_mu> over nu, mu in [-nu_max, nu_max],
// row-major with index offset nu_max; biorthonormality makes it the identity.
std::vector<cplx> biorth_gram(const Basis& b, int nu_max);
double biorth_offdiag_max(const Basis& b, int nu_max);

// max_nu |<chi_nu| W |phi_nu>| — the shift operator has no diagonal part in
// the biorthogonal eigenbasis.
double shift_sandwich_max(const Basis& b, int nu_max);

// Eigenvalues of a hermitian-tagged matrix, ascending (thin wrapper).
std::vector<double> hermitian_spectrum(const Operator& M);

}  // namespace ringtime
