#include "ringtime/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ringtime/eigensolve.hpp"

namespace ringtime {

namespace {

// Level phase t E_l / hbar = 2 pi l^2 (t / P) with P = 4 pi I / hbar. Reducing
// the fraction l^2 (t/P) mod 1 before multiplying by 2 pi keeps the recurrence
// A(t + P) = A(t) at roundoff even though raw arguments reach ~1e4 radians.
double level_phase_fraction(int l, double s) {
    double ll = static_cast<double>(l) * l;
    return std::remainder(ll * s, 1.0);
}

Operator conjugate_by_phases(const Operator& A, const std::vector<cplx>& ph, bool identity_time) {
    Operator B = A;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) B.at(i, j) = A.at(i, j) * ph[i] * std::conj(ph[j]);
    B.real_entries = A.real_entries && identity_time;
    return B;
}

}  // namespace

Operator heisenberg_evolve(const Operator& A, double t) {
    const Basis& b = A.basis;
    double s = t / ring_period(b);
    std::vector<cplx> ph(A.n);
    for (int i = 0; i < A.n; ++i)
        ph[i] = std::polar(1.0, kTwoPi * level_phase_fraction(b.level(i), s));
    return conjugate_by_phases(A, ph, t == 0.0);
}

State evolve_state(const State& s, double t) {
    double frac = t / ring_period(s.basis);
    State out = s;
    for (int l = -s.basis.L; l <= s.basis.L; ++l)
        out.a[s.basis.idx(l)] *=
            std::polar(1.0, -kTwoPi * level_phase_fraction(l, frac));
    return out;
}

double ring_period(const Basis& b) { return 4.0 * kPi * b.inertia() / b.hbar; }

namespace {

// Phases e^{i 2 pi l^2 num / den} with the fraction reduced in integer
// arithmetic, so translating num by den (one full recurrence) is bitwise exact.
Operator evolve_rational(const Operator& A, long long num, long long den) {
    std::vector<cplx> ph(A.n);
    for (int i = 0; i < A.n; ++i) {
        long long l = A.basis.level(i);
        long long ll = l * l;
        long long r = static_cast<long long>(
            static_cast<unsigned __int128>(ll % den) * static_cast<unsigned __int128>(num % den) %
            static_cast<unsigned __int128>(den));
        ph[i] = std::polar(1.0, kTwoPi * (static_cast<double>(r) / static_cast<double>(den)));
    }
    return conjugate_by_phases(A, ph, num == 0);
}

}  // namespace

double verify_period(const Operator& A, double P, int samples) {
    if (!(P > 0.0)) throw std::invalid_argument("verify_period: period must be positive");
    if (samples < 1) throw std::invalid_argument("verify_period: need at least one sample");
    double nrm = std::max(spectral_norm(A), 1e-300);

    // When P is a dyadic fraction p / 2^m of the recurrence the sample phases
    // are exact rationals; reduce them in integers so the comparison measures
    // the algebraic period rather than accumulated argument roundoff.
    double ratio = P / ring_period(A.basis);
    long long p = 0;
    int m = -1;
    for (int e = 0; e <= 40 && m < 0; ++e) {
        double v = std::ldexp(ratio, e);
        if (v == std::floor(v) && v < 9e15) {
            p = static_cast<long long>(v);
            m = e;
        }
    }
    bool exact = m >= 0 && p > 0 &&
                 p <= (1LL << 50) / (2LL * samples) &&
                 (1LL << m) <= (1LL << 50) / samples;

    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        Operator d = [&] {
            if (exact) {
                long long den = (1LL << m) * samples;
                return sub(evolve_rational(A, p * (k + samples), den),
                           evolve_rational(A, p * k, den));
            }
            double t = P * k / samples;
            return sub(heisenberg_evolve(A, t + P), heisenberg_evolve(A, t));
        }();
        worst = std::max(worst, spectral_norm(d) / nrm);
    }
    return worst;
}

Operator commutation_factor(const Operator& T, double t) {
    return sub(heisenberg_evolve(T, t), T);
}

double derivative_residual(const Basis& b, const FourierSymbol& sym, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("derivative_residual: step must be positive");
    Operator T = time_op(b, sym);
    Operator D = scale(sub(commutation_factor(T, h), commutation_factor(T, -h)),
                       cplx{1.0 / (2.0 * h), 0.0});
    Operator fp = fourier_derivative_op(b, sym);
    return frobenius(add(D, fp)) / std::max(frobenius(fp), 1e-300);
}

// --- two-level Floquet toy ---------------------------------------------------

Mat2 pauli(int k) {
    switch (k) {
        case 1: return {cplx{}, cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{}};
        case 2: return {cplx{}, cplx{0.0, -1.0}, cplx{0.0, 1.0}, cplx{}};
        case 3: return {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{-1.0, 0.0}};
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

Mat2 mul2(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 sub2(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 add2(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 scale2(const Mat2& x, cplx s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }

Mat2 dagger2(const Mat2& x) {
    return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d)};
}

double norm2(const Mat2& x) {
    return std::sqrt(std::norm(x.a) + std::norm(x.b) + std::norm(x.c) + std::norm(x.d));
}

Mat2 commutator2(const Mat2& x, const Mat2& y) { return sub2(mul2(x, y), mul2(y, x)); }

namespace {

// Accumulated pulse time: the drive acts only on the first pi of each period.
double pulse_time(double t, double P) {
    double full = std::floor(t / P);
    double rem = t - full * P;
    return kPi * full + std::min(rem, kPi);
}

Mat2 floquet_T(double g, double P, double t) {
    double tau = pulse_time(t, P);
    cplx c{std::cos(g * tau), 0.0};
    cplx s{0.0, -std::sin(g * tau)};
    Mat2 U = add2(scale2(Mat2{cplx{1, 0}, cplx{}, cplx{}, cplx{1, 0}}, c), scale2(pauli(1), s));
    return mul2(dagger2(U), mul2(pauli(2), U));
}

}  // namespace

FloquetTrace floquet_toy(double pulse_area, int n_periods, int steps_per_period, double period) {
    if (!(pulse_area > 0.0)) throw std::invalid_argument("floquet_toy: pulse_area must be > 0");
    if (period < kPi) throw std::invalid_argument("floquet_toy: period must be >= pi");
    if (n_periods < 2) throw std::invalid_argument("floquet_toy: need at least two periods");
    if (steps_per_period < 2) throw std::invalid_argument("floquet_toy: need at least two steps");

    FloquetTrace tr;
    tr.pulse_area = pulse_area;
    tr.period = period;
    tr.g = pulse_area / kPi;

    Mat2 T0 = floquet_T(tr.g, period, 0.0);
    int total = n_periods * steps_per_period;
    tr.samples.reserve(total + 1);
    for (int k = 0; k <= total; ++k) {
        double t = period * k / steps_per_period;
        FloquetSample smp;
        smp.t = t;
        smp.T = floquet_T(tr.g, period, t);
        smp.K = sub2(smp.T, T0);
        tr.samples.push_back(smp);
    }

    auto lag_residual = [&](int lag_steps) {
        double worst = 0.0;
        for (int k = 0; k + lag_steps <= total; ++k)
            worst = std::max(worst,
                             norm2(sub2(tr.samples[k + lag_steps].T, tr.samples[k].T)));
        return worst;
    };
    tr.period_P_residual = lag_residual(steps_per_period);
    tr.period_2P_residual = lag_residual(2 * steps_per_period);

    tr.period_estimate = 0.0;
    for (int n = 1; n <= 4; ++n) {
        if (norm2(sub2(floquet_T(tr.g, period, n * period), T0)) <= 1e-12) {
            tr.period_estimate = n * period;
            break;
        }
    }
    return tr;
}

}  // namespace ringtime
