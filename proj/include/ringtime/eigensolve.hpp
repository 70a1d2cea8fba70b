// In-repo dense eigensolvers: cyclic Jacobi for complex-hermitian matrices and a
// power-iteration spectral norm for general matrices.
#pragma once

#include <vector>

#include "ringtime/operators.hpp"

namespace ringtime {

struct EigenSystem {
    std::vector<double> values;  // ascending
    std::vector<cplx> vectors;   // column k stored at vectors[i*n + k]
    int n = 0;

    cplx vec(int i, int k) const { return vectors[static_cast<size_t>(i) * n + k]; }
};

// Cyclic Jacobi sweeps with unitary 2x2 rotations. The input must carry the
// hermitian tag; the defect is re-checked and rejected above 1e-12 relative.
EigenSystem hermitian_eigen(const Operator& A);
EigenSystem hermitian_eigen_raw(int n, const std::vector<cplx>& m);

// Largest singular value via power iteration on A^dag A (deterministic start).
double spectral_norm(const Operator& A);
double spectral_norm_raw(int n, const std::vector<cplx>& m);
// Same quantity through the Jacobi solver on A^dag A; slower, used as an oracle.
double spectral_norm_exact(const Operator& A);

// Max residual ||A v_k - lambda_k v_k|| over eigenpairs, for solver validation.
double eigen_residual(const Operator& A, const EigenSystem& es);

}  // namespace ringtime
