#include "ringtime/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ringtime::kern {

void matmul_serial(int n, const cplx* A, const cplx* B, cplx* C) {
    for (int i = 0; i < n; ++i) {
        cplx* Ci = C + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) Ci[j] = cplx{};
        for (int k = 0; k < n; ++k) {
            cplx aik = A[static_cast<size_t>(i) * n + k];
            if (aik == cplx{}) continue;
            const cplx* Bk = B + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) Ci[j] += aik * Bk[j];
        }
    }
}

void matmul(int n, const cplx* A, const cplx* B, cplx* C) {
    // Row-parallel: each C row is produced by one thread in a fixed k order, so the
    // result matches matmul_serial bitwise.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        cplx* Ci = C + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) Ci[j] = cplx{};
        for (int k = 0; k < n; ++k) {
            cplx aik = A[static_cast<size_t>(i) * n + k];
            if (aik == cplx{}) continue;
            const cplx* Bk = B + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) Ci[j] += aik * Bk[j];
        }
    }
}

void matvec_serial(int n, const cplx* A, const cplx* x, cplx* y) {
    for (int i = 0; i < n; ++i) {
        cplx acc{};
        const cplx* Ai = A + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) acc += Ai[j] * x[j];
        y[i] = acc;
    }
}

void matvec(int n, const cplx* A, const cplx* x, cplx* y) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        cplx acc{};
        const cplx* Ai = A + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) acc += Ai[j] * x[j];
        y[i] = acc;
    }
}

namespace {
const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);
}

void synthesis_serial(int L, int n_grid, const cplx* a, cplx* v) {
    for (int j = 0; j < n_grid; ++j) {
        double th = -kPi + kTwoPi * static_cast<double>(j) / n_grid;
        cplx step = std::polar(1.0, th);
        cplx ph = std::polar(1.0, -static_cast<double>(L) * th);  // e^{i l theta}, l = -L
        cplx acc{};
        for (int i = 0; i < 2 * L + 1; ++i) {
            acc += a[i] * ph;
            ph *= step;
        }
        v[j] = acc * kInvSqrtTwoPi;
    }
}

void synthesis(int L, int n_grid, const cplx* a, cplx* v) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n_grid; ++j) {
        double th = -kPi + kTwoPi * static_cast<double>(j) / n_grid;
        cplx step = std::polar(1.0, th);
        cplx ph = std::polar(1.0, -static_cast<double>(L) * th);
        cplx acc{};
        for (int i = 0; i < 2 * L + 1; ++i) {
            acc += a[i] * ph;
            ph *= step;
        }
        v[j] = acc * kInvSqrtTwoPi;
    }
}

void analysis_serial(int L, int n_grid, const cplx* v, cplx* a) {
    double w = kTwoPi / n_grid * kInvSqrtTwoPi;
    for (int i = 0; i < 2 * L + 1; ++i) {
        int l = i - L;
        cplx acc{};
        for (int j = 0; j < n_grid; ++j) {
            double th = -kPi + kTwoPi * static_cast<double>(j) / n_grid;
            acc += v[j] * std::polar(1.0, -l * th);
        }
        a[i] = acc * w;
    }
}

void analysis(int L, int n_grid, const cplx* v, cplx* a) {
    double w = kTwoPi / n_grid * kInvSqrtTwoPi;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < 2 * L + 1; ++i) {
        int l = i - L;
        cplx acc{};
        for (int j = 0; j < n_grid; ++j) {
            double th = -kPi + kTwoPi * static_cast<double>(j) / n_grid;
            acc += v[j] * std::polar(1.0, -l * th);
        }
        a[i] = acc * w;
    }
}

void fft(std::vector<cplx>& data, bool inverse) {
    size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        cplx wl = std::polar(1.0, ang);
        for (size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = data[i + k];
                cplx t = data[i + k + len / 2] * w;
                data[i + k] = u + t;
                data[i + k + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse) {
        double inv = 1.0 / static_cast<double>(n);
        for (cplx& z : data) z *= inv;
    }
}

}  // namespace ringtime::kern
