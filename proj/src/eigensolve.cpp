#include "ringtime/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ringtime/kernels.hpp"

namespace ringtime {

namespace {

double off_norm(int n, const std::vector<cplx>& a) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc += std::norm(a[static_cast<size_t>(i) * n + j]);
    return std::sqrt(acc);
}

double fro_norm(int n, const std::vector<cplx>& a) {
    double acc = 0.0;
    for (const cplx& z : a) acc += std::norm(z);
    (void)n;
    return std::sqrt(acc);
}

}  // namespace

EigenSystem hermitian_eigen_raw(int n, const std::vector<cplx>& m_in) {
    if (n <= 0 || m_in.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("hermitian_eigen: bad dimensions");
    std::vector<cplx> a(m_in);
    // Exact hermitization guards against last-bit asymmetry in the input.
    for (int i = 0; i < n; ++i) {
        a[static_cast<size_t>(i) * n + i] = a[static_cast<size_t>(i) * n + i].real();
        for (int j = i + 1; j < n; ++j) {
            cplx mean = 0.5 * (a[static_cast<size_t>(i) * n + j] +
                               std::conj(a[static_cast<size_t>(j) * n + i]));
            a[static_cast<size_t>(i) * n + j] = mean;
            a[static_cast<size_t>(j) * n + i] = std::conj(mean);
        }
    }
    std::vector<cplx> V(static_cast<size_t>(n) * n, cplx{});
    for (int k = 0; k < n; ++k) V[static_cast<size_t>(k) * n + k] = 1.0;

    const double target = 1e-13 * std::max(fro_norm(n, a), 1e-300);
    bool converged = false;
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (off_norm(n, a) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx b = a[static_cast<size_t>(p) * n + q];
                double ab = std::abs(b);
                if (ab <= 1e-300) continue;
                cplx ph = b / ab;
                double app = a[static_cast<size_t>(p) * n + p].real();
                double aqq = a[static_cast<size_t>(q) * n + q].real();
                double beta = (aqq - app) / (2.0 * ab);
                if (!std::isfinite(beta)) continue;
                double t = (beta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(beta) + std::sqrt(beta * beta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                // A <- J^dag A J with J mixing columns p and q:
                // J[p,p]=c, J[p,q]=s*ph, J[q,p]=-s*conj(ph), J[q,q]=c.
                for (int k = 0; k < n; ++k) {
                    cplx akp = a[static_cast<size_t>(k) * n + p];
                    cplx akq = a[static_cast<size_t>(k) * n + q];
                    a[static_cast<size_t>(k) * n + p] = c * akp - s * std::conj(ph) * akq;
                    a[static_cast<size_t>(k) * n + q] = s * ph * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = a[static_cast<size_t>(p) * n + k];
                    cplx aqk = a[static_cast<size_t>(q) * n + k];
                    a[static_cast<size_t>(p) * n + k] = c * apk - s * ph * aqk;
                    a[static_cast<size_t>(q) * n + k] = s * std::conj(ph) * apk + c * aqk;
                }
                a[static_cast<size_t>(p) * n + q] = 0.0;
                a[static_cast<size_t>(q) * n + p] = 0.0;
                a[static_cast<size_t>(p) * n + p] = a[static_cast<size_t>(p) * n + p].real();
                a[static_cast<size_t>(q) * n + q] = a[static_cast<size_t>(q) * n + q].real();
                for (int k = 0; k < n; ++k) {
                    cplx vkp = V[static_cast<size_t>(k) * n + p];
                    cplx vkq = V[static_cast<size_t>(k) * n + q];
                    V[static_cast<size_t>(k) * n + p] = c * vkp - s * std::conj(ph) * vkq;
                    V[static_cast<size_t>(k) * n + q] = s * ph * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && off_norm(n, a) > target)
        throw std::runtime_error("hermitian_eigen: sweep cap reached before convergence");

    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x) * n + x].real() < a[static_cast<size_t>(y) * n + y].real();
    });

    EigenSystem es;
    es.n = n;
    es.values.resize(n);
    es.vectors.assign(static_cast<size_t>(n) * n, cplx{});
    for (int k = 0; k < n; ++k) {
        int src = ord[k];
        es.values[k] = a[static_cast<size_t>(src) * n + src].real();
        // Canonical phase: largest-magnitude component made real positive.
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            double m = std::abs(V[static_cast<size_t>(i) * n + src]);
            if (m > best) { best = m; imax = i; }
        }
        cplx piv = V[static_cast<size_t>(imax) * n + src];
        cplx rot = (std::abs(piv) > 0.0) ? std::conj(piv) / std::abs(piv) : cplx{1.0, 0.0};
        for (int i = 0; i < n; ++i)
            es.vectors[static_cast<size_t>(i) * n + k] = rot * V[static_cast<size_t>(i) * n + src];
    }
    return es;
}

EigenSystem hermitian_eigen(const Operator& A) {
    if (!A.hermitian) throw std::invalid_argument("hermitian_eigen: operator not tagged hermitian");
    if (hermiticity_defect(A) > 1e-12)
        throw std::invalid_argument("hermitian_eigen: hermiticity defect too large");
    return hermitian_eigen_raw(A.n, A.m);
}

double spectral_norm_raw(int n, const std::vector<cplx>& m) {
    if (n <= 0 || m.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("spectral_norm: bad dimensions");
    std::vector<cplx> v(n), w(n);
    for (int i = 0; i < n; ++i)
        v[i] = cplx{1.0 + 0.25 * std::cos(3.0 * i + 1.0), 0.25 * std::sin(2.0 * i + 0.5)};
    double vn = 0.0;
    for (const cplx& z : v) vn += std::norm(z);
    vn = std::sqrt(vn);
    for (cplx& z : v) z /= vn;

    double sigma = 0.0;
    for (int iter = 0; iter < 2000; ++iter) {
        kern::matvec_serial(n, m.data(), v.data(), w.data());
        double mu = 0.0;
        for (const cplx& z : w) mu += std::norm(z);
        double sigma_new = std::sqrt(mu);
        if (sigma_new <= 1e-300) return 0.0;
        // v <- normalize(A^dag w)
        for (int i = 0; i < n; ++i) {
            cplx acc{};
            for (int k = 0; k < n; ++k)
                acc += std::conj(m[static_cast<size_t>(k) * n + i]) * w[k];
            v[i] = acc;
        }
        double un = 0.0;
        for (const cplx& z : v) un += std::norm(z);
        un = std::sqrt(un);
        if (un <= 1e-300) return sigma_new;
        for (cplx& z : v) z /= un;
        bool done = iter > 0 && std::abs(sigma_new - sigma) <= 1e-13 * sigma_new;
        sigma = sigma_new;
        if (done) break;
    }
    return sigma;
}

double spectral_norm(const Operator& A) { return spectral_norm_raw(A.n, A.m); }

double spectral_norm_exact(const Operator& A) {
    Operator B = mul(adjoint(A), A);
    EigenSystem es = hermitian_eigen_raw(B.n, B.m);
    double top = es.values.empty() ? 0.0 : es.values.back();
    return std::sqrt(std::max(top, 0.0));
}

double eigen_residual(const Operator& A, const EigenSystem& es) {
    if (A.n != es.n) throw std::invalid_argument("eigen_residual: dimension mismatch");
    double worst = 0.0;
    std::vector<cplx> v(A.n), w(A.n);
    for (int k = 0; k < es.n; ++k) {
        for (int i = 0; i < A.n; ++i) v[i] = es.vec(i, k);
        kern::matvec_serial(A.n, A.m.data(), v.data(), w.data());
        double acc = 0.0;
        for (int i = 0; i < A.n; ++i) acc += std::norm(w[i] - es.values[k] * v[i]);
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

}  // namespace ringtime
