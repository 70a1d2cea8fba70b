// Reference free particle on the line in momentum representation, the
// infinite-radius convergence ladder, and the matter-wave asymptote check.
#pragma once

#include <vector>

#include "ringtime/basis.hpp"
#include "ringtime/operators.hpp"

namespace ringtime {

// Uniform symmetric momentum grid k_j = -k_max + j dk (j = 0..n-1, endpoint
// excluded, dk = 2 k_max / n); amplitudes inside |k| < k_min must vanish.
struct LineGrid {
    int n = 0;
    double k_max = 0.0;
    double k_min = 0.0;
    double mass = 1.0;
    double hbar = 1.0;

    double dk() const { return 2.0 * k_max / n; }
    double k(int j) const { return -k_max + dk() * j; }
};

struct LineState {
    LineGrid grid;
    std::vector<cplx> a;  // amplitudes at k_j, normalized under sum |a|^2 dk = 1
};

LineGrid make_line_grid(int n, double k_max, double k_min, double mass = 1.0, double hbar = 1.0);

// Gaussian envelope exp(-(k-k0)^2 sigma_x^2 / 2) * exp(-i (k-k0) x0), multiplied
// by a smooth window vanishing identically for |k| <= k_min; normalized.
LineState gaussian_line_packet(const LineGrid& g, double x0, double k0, double sigma_x);

double line_norm(const LineState& s);
cplx line_inner(const LineState& f, const LineState& g);

// x = i d/dk via FFT spectral differentiation (so [x, hbar k] = i hbar).
LineState x_apply(const LineState& s);
LineState pinv_apply(const LineState& s, int power = 1);  // divide by (hbar k)^power

// <T_R> = -(m/2) <x p^{-1} + p^{-1} x>, real by hermiticity.
double line_time_expectation(const LineState& s);

// <i T_R - (m hbar / 2) p^{-2}>: real part -(m hbar/2)<p^{-2}>, imag part <T_R>.
cplx line_nh_expectation(const LineState& s);

// Free evolution phases e^{+i E(k) t / hbar}; drifts <T_R> by exactly +t.
LineState line_evolve(const LineState& s, double t);

// |<phi|[H, T^NH]|psi> - i hbar <phi|psi>| for the weak canonical relation.
double line_weak_canonical_residual(const LineState& phi, const LineState& psi);

// --- radius ladder ------------------------------------------------------------

enum class WidthRule {
    sqrt_radius,       // sigma_theta = sigma0 / sqrt(R) (minimum-uncertainty family)
    fixed_line_width,  // sigma_theta = sigma0 / R (fixed physical x-width)
};

struct SweepPacket {
    double x0 = -0.25;  // line-position offset; theta0 = x0 / R on the ring
    int p = 9;          // mean momentum; l0 = p * R must stay integral
    double sigma0 = 0.578;
    WidthRule rule = WidthRule::sqrt_radius;
};

struct SweepRow {
    double R = 0.0;
    int L = 0;
    int l0 = 0;
    double ring_T = 0.0;         // <T_S1> on the wrapped packet
    double line_T = 0.0;         // <T_R> on the matched line packet
    double rel_diff = 0.0;       // |ring_T - line_T| / |line_T|
    double pt_nh_diff = 0.0;     // |<T^PT>_ring - <i T^NH>_line|
    double comm_residual = 0.0;  // ||([H, T_S1] - i hbar) psi|| / (hbar ||psi||)
    double c_expectation = 0.0;  // <C>, approaches 1 as the packet localizes
};

std::vector<SweepRow> radius_sweep(const std::vector<double>& radii, const SweepPacket& pkt);

// Least-squares slope of log(rel_diff) against log(R).
double loglog_slope(const std::vector<SweepRow>& rows);

// --- matter-wave asymptote ------------------------------------------------------

struct MatterWaveRow {
    int l = 0;
    double theta = 0.0;
    cplx exact;               // <theta|T^Re|l> / <theta|l>
    double asymptote = 0.0;   // -(1/4pi) lambda_dB / v = -2I / (4 l^2 hbar)
    double rel_deviation = 0.0;
};

std::vector<MatterWaveRow> matter_wave_check(const Basis& b, const std::vector<int>& l_values,
                                             const std::vector<double>& theta_values);

}  // namespace ringtime
