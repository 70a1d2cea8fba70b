#include "ringtime/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace ringtime {

namespace {

GridFunction scaled_grid(const Basis& b, double c, const std::vector<cplx>& raw) {
    GridFunction g;
    g.basis = b;
    g.v.resize(raw.size());
    for (size_t j = 0; j < raw.size(); ++j) g.v[j] = c * raw[j];
    return g;
}

std::vector<cplx> phi_raw(const Basis& b, int nu) {
    std::vector<cplx> v(b.n_grid);
    for (int j = 0; j < b.n_grid; ++j) {
        double th = b.theta(j);
        cplx z = std::polar(1.0, th);
        v[j] = (1.0 - z) * std::polar(1.0, nu * th) * std::exp(-(nu + 0.5) * z);
    }
    return v;
}

std::vector<cplx> chi_raw(const Basis& b, int nu) {
    std::vector<cplx> v(b.n_grid);
    for (int j = 0; j < b.n_grid; ++j) {
        double th = b.theta(j);
        v[j] = std::polar(1.0, nu * th) * std::exp((nu + 0.5) * std::conj(std::polar(1.0, th)));
    }
    return v;
}

double quad_norm(const Basis& b, const std::vector<cplx>& v) {
    double acc = 0.0;
    for (const cplx& z : v) acc += std::norm(z);
    return std::sqrt(acc * kTwoPi / b.n_grid);
}

State grid_to_window(const GridFunction& g, const char* who) {
    double aliased = 0.0;
    State a = from_grid(g, &aliased);
    if (std::sqrt(std::max(aliased, 0.0)) > 1e-8)
        throw std::domain_error(std::string(who) + ": eigenfunction leaks past the momentum window");
    return a;
}

// The left family carries norms of order e^{2 nu}; its overlaps are O(1)
// answers assembled from huge cancelling grid values. Extended-precision
// accumulation keeps the defect at the conditioning floor instead of losing
// a factor sqrt(n_grid) to summation noise.
cplx grid_inner_xp(const GridFunction& x, const GridFunction& y) {
    std::complex<long double> acc{};
    for (size_t j = 0; j < x.v.size(); ++j)
        acc += std::conj(std::complex<long double>(x.v[j])) * std::complex<long double>(y.v[j]);
    acc *= static_cast<long double>(kTwoPi) / static_cast<long double>(x.basis.n_grid);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

cplx inner_xp(const State& x, const State& y) {
    std::complex<long double> acc{};
    for (size_t i = 0; i < x.a.size(); ++i)
        acc += std::conj(std::complex<long double>(x.a[i])) * std::complex<long double>(y.a[i]);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace

BiorthogonalPair pt_eigenpair(const Basis& b, int nu, int nu_max) {
    if (std::abs(nu) > nu_max)
        throw std::invalid_argument("pt_eigenpair: |nu| exceeds the accuracy cap");
    BiorthogonalPair p;
    p.nu = nu;
    p.tau = 2.0 * b.inertia() / ((2.0 * nu + 1) * b.hbar);
    std::vector<cplx> ph = phi_raw(b, nu);
    double s = quad_norm(b, ph);
    if (!(s > 0.0)) throw std::runtime_error("pt_eigenpair: degenerate norm");
    p.phi0 = 1.0 / s;
    p.chi0 = 1.0 / (kTwoPi * p.phi0);
    p.phi = scaled_grid(b, p.phi0, ph);
    p.chi = scaled_grid(b, p.chi0, chi_raw(b, nu));
    return p;
}

EigenResiduals eigen_residuals(const BiorthogonalPair& pair) {
    const Basis& b = pair.phi.basis;
    Operator T = pt_time_op(b);
    State a = grid_to_window(pair.phi, "eigen_residual");
    State Ta = apply(T, a);
    double right = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) right += std::norm(Ta.a[i] - pair.tau * a.a[i]);
    right = std::sqrt(right) / norm(a);

    State c = grid_to_window(pair.chi, "eigen_residual");
    State Tc = apply(adjoint(T), c);
    double left = 0.0;
    for (size_t i = 0; i < c.a.size(); ++i) left += std::norm(Tc.a[i] - pair.tau * c.a[i]);
    left = std::sqrt(left) / norm(c);
    return {right, left};
}

double eigen_residual(const BiorthogonalPair& pair) {
    EigenResiduals r = eigen_residuals(pair);
    return std::max(r.right, r.left);
}

std::vector<std::pair<int, double>> triangular_spectrum(const Basis& b) {
    Operator T = pt_time_op(b);
    std::vector<std::pair<int, double>> out;
    out.reserve(b.dim());
    for (int l = -b.L; l <= b.L; ++l) out.emplace_back(l, T.el(l, l).real());
    return out;
}

double arrival_expectation(const Basis& b, const std::vector<std::pair<int, cplx>>& weights) {
    double total = 0.0;
    for (const auto& [nu, a] : weights) total += std::norm(a);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("arrival_expectation: weights not normalized");
    double acc = 0.0;
    for (const auto& [nu, a] : weights)
        acc += std::norm(a) * 2.0 * b.inertia() / ((2.0 * nu + 1) * b.hbar);
    return acc;
}

cplx arrival_quadrature(const Basis& b, const std::vector<std::pair<int, cplx>>& weights) {
    GridFunction psi, psi_bar;
    psi.basis = b;
    psi_bar.basis = b;
    psi.v.assign(b.n_grid, cplx{});
    psi_bar.v.assign(b.n_grid, cplx{});
    for (const auto& [nu, a] : weights) {
        BiorthogonalPair p = pt_eigenpair(b, nu);
        for (int j = 0; j < b.n_grid; ++j) {
            psi.v[j] += a * p.phi.v[j];
            psi_bar.v[j] += a * p.chi.v[j];
        }
    }
    State ap = from_grid(psi);
    State ab = from_grid(psi_bar);
    State w = apply(pt_time_op(b), ap);
    return inner(ab, w);
}

std::vector<cplx> biorth_gram(const Basis& b, int nu_max) {
    int m = 2 * nu_max + 1;
    std::vector<BiorthogonalPair> pairs;
    pairs.reserve(m);
    for (int nu = -nu_max; nu <= nu_max; ++nu) pairs.push_back(pt_eigenpair(b, nu, nu_max));
    std::vector<cplx> g(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            g[static_cast<size_t>(i) * m + j] = grid_inner_xp(pairs[i].chi, pairs[j].phi);
    return g;
}

double biorth_offdiag_max(const Basis& b, int nu_max) {
    int m = 2 * nu_max + 1;
    std::vector<cplx> g = biorth_gram(b, nu_max);
    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{};
            worst = std::max(worst, std::abs(g[static_cast<size_t>(i) * m + j] - want));
        }
    return worst;
}

double shift_sandwich_max(const Basis& b, int nu_max) {
    Operator W = shift_op(b, 1);
    double worst = 0.0;
    for (int nu = -nu_max; nu <= nu_max; ++nu) {
        BiorthogonalPair p = pt_eigenpair(b, nu, nu_max);
        State ap = grid_to_window(p.phi, "shift_sandwich_max");
        State ac = grid_to_window(p.chi, "shift_sandwich_max");
        worst = std::max(worst, std::abs(inner_xp(ac, apply(W, ap))));
    }
    return worst;
}

std::vector<double> hermitian_spectrum(const Operator& M) {
    return hermitian_eigen(M).values;
}

}  // namespace ringtime
