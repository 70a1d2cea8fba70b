// Dense complex kernels. Each hot loop has a serial reference implementation and an
// OpenMP variant; the parallel forms write every output element exactly once so the
// results are bitwise identical for any thread count.
#pragma once

#include <complex>
#include <vector>

#include "ringtime/basis.hpp"

namespace ringtime::kern {

// C = A * B, n x n row-major.
void matmul_serial(int n, const cplx* A, const cplx* B, cplx* C);
void matmul(int n, const cplx* A, const cplx* B, cplx* C);

// y = A * x.
void matvec_serial(int n, const cplx* A, const cplx* x, cplx* y);
void matvec(int n, const cplx* A, const cplx* x, cplx* y);

// Grid synthesis v_j = sum_l a_l e^{i l theta_j} / sqrt(2 pi)  (dim = 2L+1 levels).
void synthesis_serial(int L, int n_grid, const cplx* a, cplx* v);
void synthesis(int L, int n_grid, const cplx* a, cplx* v);

// Band-limited analysis a_l = sqrt(2 pi)/N sum_j v_j e^{-i l theta_j}.
void analysis_serial(int L, int n_grid, const cplx* v, cplx* a);
void analysis(int L, int n_grid, const cplx* v, cplx* a);

// In-place radix-2 FFT, size must be a power of two. inverse=true applies 1/n.
void fft(std::vector<cplx>& data, bool inverse);

}  // namespace ringtime::kern
