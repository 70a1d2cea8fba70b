#include "ringtime/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ringtime/kernels.hpp"

namespace ringtime {

namespace {

void require_same_basis(const Operator& A, const Operator& B, const char* who) {
    if (!(A.basis == B.basis)) throw std::invalid_argument(std::string(who) + ": basis mismatch");
}

}  // namespace

Operator zero_op(const Basis& b) {
    Operator op;
    op.basis = b;
    op.n = b.dim();
    op.m.assign(static_cast<size_t>(op.n) * op.n, cplx{});
    op.hermitian = true;
    op.real_entries = true;
    op.bandwidth = 0;
    return op;
}

Operator identity_op(const Basis& b) {
    Operator op = zero_op(b);
    for (int i = 0; i < op.n; ++i) op.at(i, i) = 1.0;
    return op;
}

Operator add(const Operator& A, const Operator& B) {
    require_same_basis(A, B, "add");
    Operator C = A;
    for (size_t i = 0; i < C.m.size(); ++i) C.m[i] += B.m[i];
    C.hermitian = A.hermitian && B.hermitian;
    C.real_entries = A.real_entries && B.real_entries;
    C.bandwidth = std::max(A.bandwidth, B.bandwidth);
    return C;
}

Operator sub(const Operator& A, const Operator& B) {
    require_same_basis(A, B, "sub");
    Operator C = A;
    for (size_t i = 0; i < C.m.size(); ++i) C.m[i] -= B.m[i];
    C.hermitian = A.hermitian && B.hermitian;
    C.real_entries = A.real_entries && B.real_entries;
    C.bandwidth = std::max(A.bandwidth, B.bandwidth);
    return C;
}

Operator scale(const Operator& A, cplx s) {
    Operator C = A;
    for (cplx& z : C.m) z *= s;
    C.hermitian = A.hermitian && s.imag() == 0.0;
    C.real_entries = A.real_entries && s.imag() == 0.0;
    return C;
}

Operator mul(const Operator& A, const Operator& B) {
    require_same_basis(A, B, "mul");
    Operator C = zero_op(A.basis);
    kern::matmul(A.n, A.m.data(), B.m.data(), C.m.data());
    C.hermitian = false;
    C.real_entries = A.real_entries && B.real_entries;
    C.bandwidth = std::min(A.bandwidth + B.bandwidth, A.n - 1);
    return C;
}

Operator adjoint(const Operator& A) {
    Operator C = zero_op(A.basis);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) C.at(j, i) = std::conj(A.at(i, j));
    C.hermitian = A.hermitian;
    C.real_entries = A.real_entries;
    C.bandwidth = A.bandwidth;
    return C;
}

Operator commutator(const Operator& A, const Operator& B) {
    Operator C = sub(mul(A, B), mul(B, A));
    C.hermitian = false;
    C.bandwidth = std::min(A.bandwidth + B.bandwidth, A.n - 1);
    return C;
}

State apply(const Operator& A, const State& s) {
    if (!(A.basis == s.basis)) throw std::invalid_argument("apply: basis mismatch");
    State out = zero_state(A.basis);
    kern::matvec_serial(A.n, A.m.data(), s.a.data(), out.a.data());
    return out;
}

double frobenius(const Operator& A) {
    double acc = 0.0;
    for (const cplx& z : A.m) acc += std::norm(z);
    return std::sqrt(acc);
}

double max_abs(const Operator& A) {
    double mx = 0.0;
    for (const cplx& z : A.m) mx = std::max(mx, std::abs(z));
    return mx;
}

double hermiticity_defect(const Operator& A) {
    double acc = 0.0;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) acc += std::norm(A.at(i, j) - std::conj(A.at(j, i)));
    double base = std::max(frobenius(A), 1e-300);
    return std::sqrt(acc) / base;
}

double max_imag_entry(const Operator& A) {
    double mx = 0.0;
    for (const cplx& z : A.m) mx = std::max(mx, std::abs(z.imag()));
    return mx;
}

double max_real_entry(const Operator& A) {
    double mx = 0.0;
    for (const cplx& z : A.m) mx = std::max(mx, std::abs(z.real()));
    return mx;
}

// --- basic operators -------------------------------------------------------

Operator momentum_op(const Basis& b) {
    Operator op = zero_op(b);
    for (int l = -b.L; l <= b.L; ++l) op.el(l, l) = l * b.hbar;
    return op;
}

Operator hamiltonian_op(const Basis& b) {
    Operator op = zero_op(b);
    for (int l = -b.L; l <= b.L; ++l) op.el(l, l) = b.energy(l);
    return op;
}

Operator shift_op(const Basis& b, int n) {
    if (std::abs(n) > 2 * b.L) throw std::invalid_argument("shift_op: |n| exceeds window span");
    Operator op = zero_op(b);
    op.hermitian = (n == 0);
    op.bandwidth = std::abs(n);
    for (int l = -b.L; l <= b.L; ++l) {
        int lo = l + n;
        if (lo >= -b.L && lo <= b.L) op.el(lo, l) = 1.0;
    }
    return op;
}

double shift_leakage(const Basis& b, int n, const State& s) {
    double n2 = norm(s);
    if (!(n2 > 0.0)) throw std::domain_error("shift_leakage: zero state");
    State shifted = apply(shift_op(b, n), s);
    double m2 = norm(shifted);
    return (n2 * n2 - m2 * m2) / (n2 * n2);
}

Operator gap_time_op(const Basis& b, int n) {
    if (n == 0) throw std::invalid_argument("gap_time_op: n must be nonzero");
    Operator op = zero_op(b);
    for (int l = -b.L; l <= b.L; ++l) {
        if (2 * l + n == 0) continue;  // even-n degeneracy, projected out
        op.el(l, l) = 2.0 * b.inertia() / ((2.0 * l + n) * b.hbar);
    }
    return op;
}

// --- Fourier symbols --------------------------------------------------------

cplx FourierSymbol::coef(int n) const {
    for (const auto& [k, v] : c)
        if (k == n) return v;
    return cplx{};
}

int FourierSymbol::n_max() const {
    int mx = 0;
    for (const auto& [k, v] : c) mx = std::max(mx, std::abs(k));
    return mx;
}

bool FourierSymbol::hermitian(double tol) const {
    for (const auto& [k, v] : c)
        if (std::abs(v - std::conj(coef(-k))) > tol) return false;
    return true;
}

FourierSymbol FourierSymbol::from_positive_side(const std::vector<std::pair<int, cplx>>& pos,
                                                double c0) {
    FourierSymbol sym;
    if (c0 != 0.0) sym.c.emplace_back(0, c0);
    for (const auto& [n, v] : pos) {
        if (n <= 0) throw std::invalid_argument("FourierSymbol: positive-side n must be > 0");
        sym.c.emplace_back(n, v);
        sym.c.emplace_back(-n, std::conj(v));
    }
    std::sort(sym.c.begin(), sym.c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return sym;
}

FourierSymbol cosine_symbol() {
    return FourierSymbol::from_positive_side({{1, cplx{0.5, 0.0}}});
}

FourierSymbol sine_symbol() {
    // sin theta = (e^{i theta} - e^{-i theta}) / (2i): c_1 = -i/2.
    return FourierSymbol::from_positive_side({{1, cplx{0.0, -0.5}}});
}

FourierSymbol sawtooth_symbol(int n_max) {
    if (n_max < 1) throw std::invalid_argument("sawtooth_symbol: n_max must be >= 1");
    std::vector<std::pair<int, cplx>> pos;
    for (int n = 1; n <= n_max; ++n) {
        double sign = (n % 2 == 1) ? 1.0 : -1.0;
        pos.emplace_back(n, cplx{0.0, -sign / n});  // (-1)^{n+1} / (i n)
    }
    return FourierSymbol::from_positive_side(pos);
}

Operator fourier_op(const Basis& b, const FourierSymbol& sym) {
    if (!sym.hermitian()) throw std::invalid_argument("fourier_op: symbol must be hermitian");
    Operator op = zero_op(b);
    op.bandwidth = sym.n_max();
    bool real = true;
    for (const auto& [n, cn] : sym.c) {
        if (cn.imag() != 0.0) real = false;
        for (int l = -b.L; l <= b.L; ++l) {
            int lo = l + n;
            if (lo >= -b.L && lo <= b.L) op.el(lo, l) += cn;
        }
    }
    op.real_entries = real;
    return op;
}

Operator fourier_derivative_op(const Basis& b, const FourierSymbol& sym) {
    if (!sym.hermitian())
        throw std::invalid_argument("fourier_derivative_op: symbol must be hermitian");
    Operator op = zero_op(b);
    op.bandwidth = sym.n_max();
    op.real_entries = false;
    for (const auto& [n, cn] : sym.c) {
        cplx w = cn * cplx{0.0, static_cast<double>(n)};
        for (int l = -b.L; l <= b.L; ++l) {
            int lo = l + n;
            if (lo >= -b.L && lo <= b.L) op.el(lo, l) += w;
        }
    }
    return op;
}

FourierSymbol shifted_symbol(const FourierSymbol& sym, double s) {
    FourierSymbol out = sym;
    for (auto& [n, cn] : out.c) cn *= std::polar(1.0, n * s);
    return out;
}

Operator cosine_op(const Basis& b) { return fourier_op(b, cosine_symbol()); }
Operator sine_op(const Basis& b) { return fourier_op(b, sine_symbol()); }
Operator sawtooth_op(const Basis& b, int n_max) { return fourier_op(b, sawtooth_symbol(n_max)); }

// --- time operators ---------------------------------------------------------

Operator time_op(const Basis& b, const FourierSymbol& sym) {
    if (!sym.hermitian()) throw std::invalid_argument("time_op: symbol must be hermitian");
    if (sym.coef(0) != cplx{}) throw std::invalid_argument("time_op: c_0 must vanish");
    Operator op = zero_op(b);
    op.hermitian = true;
    op.bandwidth = sym.n_max();
    for (const auto& [n, cn] : sym.c) {
        // -(1/2) [ c_n W^n mu_n + conj(c_n) mu_n W^{-n} ]; both terms are banded, so
        // the entries are written directly instead of through dense products.
        for (int l = -b.L; l <= b.L; ++l) {
            if (2 * l + n == 0) continue;
            double mu = 2.0 * b.inertia() / ((2.0 * l + n) * b.hbar);
            int up = l + n;  // W^n mu_n: |l> -> mu_n(l) |l+n>
            if (up >= -b.L && up <= b.L) {
                op.el(up, l) -= 0.5 * cn * mu;
                // mu_n W^{-n}: |l+n> -> mu_n(l) |l>, the conjugate-transpose entry
                op.el(l, up) -= 0.5 * std::conj(cn) * mu;
            }
        }
    }
    bool real = true;
    for (const cplx& z : op.m)
        if (z.imag() != 0.0) { real = false; break; }
    op.real_entries = real;
    return op;
}

Operator sine_time_op(const Basis& b) {
    // (mu_1 W^dag - W mu_1) / (2i): superdiagonal +i I/((2l+1) hbar), zero diagonal.
    Operator op = zero_op(b);
    op.hermitian = true;
    op.real_entries = false;
    op.bandwidth = 1;
    for (int l = -b.L; l < b.L; ++l) {
        double mu = 2.0 * b.inertia() / ((2.0 * l + 1) * b.hbar);
        op.el(l + 1, l) = cplx{0.0, 0.5 * mu};   // -mu_1(l)/(2i)
        op.el(l, l + 1) = cplx{0.0, -0.5 * mu};  // +mu_1(l)/(2i)
    }
    return op;
}

Operator cosine_time_op(const Basis& b) {
    Operator op = add(gap_time_op(b, 1), time_op(b, cosine_symbol()));
    op.hermitian = true;
    op.real_entries = true;
    op.bandwidth = 1;
    return op;
}

Operator sawtooth_time_op(const Basis& b, int n_max) {
    return time_op(b, sawtooth_symbol(n_max));
}

Operator pt_time_op(const Basis& b) {
    // (1 - W) mu_1: diagonal mu_1(l), subdiagonal -mu_1(l); real and non-hermitian.
    Operator op = zero_op(b);
    op.hermitian = false;
    op.real_entries = true;
    op.bandwidth = 1;
    for (int l = -b.L; l <= b.L; ++l) {
        double mu = 2.0 * b.inertia() / ((2.0 * l + 1) * b.hbar);
        op.el(l, l) = mu;
        if (l + 1 <= b.L) op.el(l + 1, l) = -mu;
    }
    return op;
}

cplx cosine_time_ratio(const Basis& b, double theta, int l) {
    double denom = 1.0 - 4.0 * static_cast<double>(l) * l;
    cplx num{1.0 - 2.0 * l + 2.0 * l * std::cos(theta), -std::sin(theta)};
    return (2.0 * b.inertia() / b.hbar) * num / denom;
}

}  // namespace ringtime
