#include "ringtime/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ringtime/kernels.hpp"
#include "ringtime/uncertainty.hpp"

namespace ringtime {

namespace {

// C-infinity step: 0 at u<=0, 1 at u>=1.
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double f0 = std::exp(-1.0 / u);
    double f1 = std::exp(-1.0 / (1.0 - u));
    return f0 / (f0 + f1);
}

void require_same_grid(const LineState& f, const LineState& g, const char* who) {
    const LineGrid &a = f.grid, &b = g.grid;
    if (a.n != b.n || a.k_max != b.k_max || a.k_min != b.k_min || a.mass != b.mass ||
        a.hbar != b.hbar)
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

void validate_line_state(const LineState& s, const char* who) {
    const LineGrid& g = s.grid;
    double peak = 0.0;
    for (const cplx& z : s.a) peak = std::max(peak, std::abs(z));
    if (!(peak > 0.0)) throw std::domain_error(std::string(who) + ": zero state");
    double w = g.k_min;  // window transition width used by the packet builder
    for (int j = 0; j < g.n; ++j) {
        double k = std::abs(g.k(j));
        double a = std::abs(s.a[j]);
        if (k < g.k_min && a != 0.0)
            throw std::domain_error(std::string(who) + ": amplitude inside the excluded window");
        if (k >= g.k_min && k <= g.k_min + 0.25 * w && a > 1e-4 * peak)
            throw std::domain_error(std::string(who) + ": support at the excluded window boundary");
    }
    if (std::abs(s.a.front()) > 1e-8 * peak || std::abs(s.a.back()) > 1e-8 * peak)
        throw std::domain_error(std::string(who) + ": support at the grid boundary");
}

void require_unit_norm(const LineState& s, const char* who) {
    if (std::abs(line_norm(s) - 1.0) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": state must be normalized");
}

LineState time_apply(const LineState& s) {
    // T = -(m/2) (x p^{-1} + p^{-1} x)
    LineState t1 = x_apply(pinv_apply(s));
    LineState t2 = pinv_apply(x_apply(s));
    LineState out = s;
    double c = -0.5 * s.grid.mass;
    for (int j = 0; j < s.grid.n; ++j) out.a[j] = c * (t1.a[j] + t2.a[j]);
    return out;
}

}  // namespace

LineGrid make_line_grid(int n, double k_max, double k_min, double mass, double hbar) {
    if (n < 16 || (n & (n - 1)) != 0)
        throw std::invalid_argument("make_line_grid: n must be a power of two >= 16");
    if (!(k_max > 0.0) || !(k_min > 0.0) || !(k_min < k_max))
        throw std::invalid_argument("make_line_grid: need 0 < k_min < k_max");
    if (!(mass > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("make_line_grid: mass and hbar must be positive");
    return {n, k_max, k_min, mass, hbar};
}

LineState gaussian_line_packet(const LineGrid& g, double x0, double k0, double sigma_x) {
    if (!(sigma_x > 0.0)) throw std::invalid_argument("gaussian_line_packet: width must be > 0");
    if (!(std::abs(k0) > 2.0 * g.k_min))
        throw std::invalid_argument("gaussian_line_packet: |k0| must clear the excluded window");
    LineState s;
    s.grid = g;
    s.a.assign(g.n, cplx{});
    double w = g.k_min;  // transition to full amplitude over [k_min, 2 k_min]
    for (int j = 0; j < g.n; ++j) {
        double k = g.k(j);
        double win = smooth_step((std::abs(k) - g.k_min) / w);
        if (win == 0.0) continue;
        double env = std::exp(-0.5 * (k - k0) * (k - k0) * sigma_x * sigma_x);
        s.a[j] = win * env * std::polar(1.0, -(k - k0) * x0);
    }
    double n = line_norm(s);
    if (!(n > 0.0)) throw std::runtime_error("gaussian_line_packet: vanishing norm");
    for (cplx& z : s.a) z /= n;
    return s;
}

double line_norm(const LineState& s) {
    double acc = 0.0;
    for (const cplx& z : s.a) acc += std::norm(z);
    return std::sqrt(acc * s.grid.dk());
}

cplx line_inner(const LineState& f, const LineState& g) {
    require_same_grid(f, g, "line_inner");
    cplx acc{};
    for (int j = 0; j < f.grid.n; ++j) acc += std::conj(f.a[j]) * g.a[j];
    return acc * f.grid.dk();
}

LineState x_apply(const LineState& s) {
    const LineGrid& g = s.grid;
    std::vector<cplx> v(s.a);
    kern::fft(v, false);
    // x = i d/dk; with the e^{-i 2pi m j / n} forward convention the spectral
    // multiplier is -2 pi m~ / (n dk), Nyquist bin dropped.
    double c = -kTwoPi / (g.n * g.dk());
    for (int m = 0; m < g.n; ++m) {
        int ms = (m <= g.n / 2) ? m : m - g.n;
        if (m == g.n / 2) ms = 0;
        v[m] *= c * ms;
    }
    kern::fft(v, true);
    LineState out = s;
    out.a = std::move(v);
    return out;
}

LineState pinv_apply(const LineState& s, int power) {
    if (power < 1) throw std::invalid_argument("pinv_apply: power must be >= 1");
    LineState out = s;
    for (int j = 0; j < s.grid.n; ++j) {
        // Regularized inverse: annihilate the excluded momentum window. States
        // live in its orthogonal complement, but upstream derivative kernels can
        // leave traces inside it (including the k = 0 bin, which must never be
        // divided through).
        if (std::abs(s.grid.k(j)) <= s.grid.k_min) {
            out.a[j] = cplx{};
            continue;
        }
        double p = s.grid.hbar * s.grid.k(j);
        for (int q = 0; q < power; ++q) out.a[j] /= p;
    }
    return out;
}

double line_time_expectation(const LineState& s) {
    validate_line_state(s, "line_time_expectation");
    require_unit_norm(s, "line_time_expectation");
    return line_inner(s, time_apply(s)).real();
}

cplx line_nh_expectation(const LineState& s) {
    validate_line_state(s, "line_nh_expectation");
    require_unit_norm(s, "line_nh_expectation");
    cplx t = line_inner(s, time_apply(s));
    double q = 0.0;
    for (int j = 0; j < s.grid.n; ++j) {
        if (s.a[j] == cplx{}) continue;
        double p = s.grid.hbar * s.grid.k(j);
        q += std::norm(s.a[j]) / (p * p);
    }
    q *= s.grid.dk();
    return cplx{0.0, 1.0} * t - 0.5 * s.grid.mass * s.grid.hbar * q;
}

LineState line_evolve(const LineState& s, double t) {
    LineState out = s;
    const LineGrid& g = s.grid;
    for (int j = 0; j < g.n; ++j) {
        double p = g.hbar * g.k(j);
        out.a[j] *= std::polar(1.0, p * p * t / (2.0 * g.mass * g.hbar));
    }
    return out;
}

double line_weak_canonical_residual(const LineState& phi, const LineState& psi) {
    require_same_grid(phi, psi, "line_weak_canonical_residual");
    validate_line_state(phi, "line_weak_canonical_residual");
    validate_line_state(psi, "line_weak_canonical_residual");
    const LineGrid& g = phi.grid;

    auto nh_apply = [&](const LineState& s) {
        // T^NH = T + i (m hbar / 2) p^{-2}
        LineState t = time_apply(s);
        LineState r = pinv_apply(s, 2);
        cplx c{0.0, 0.5 * g.mass * g.hbar};
        for (int j = 0; j < g.n; ++j) t.a[j] += c * r.a[j];
        return t;
    };
    auto h_apply = [&](const LineState& s) {
        LineState out = s;
        for (int j = 0; j < g.n; ++j) {
            double p = g.hbar * g.k(j);
            out.a[j] *= p * p / (2.0 * g.mass);
        }
        return out;
    };

    LineState ht = h_apply(nh_apply(psi));
    LineState th = nh_apply(h_apply(psi));
    LineState comm = psi;
    for (int j = 0; j < g.n; ++j) comm.a[j] = ht.a[j] - th.a[j];
    cplx val = line_inner(phi, comm);
    cplx want = cplx{0.0, g.hbar} * line_inner(phi, psi);
    return std::abs(val - want);
}

// --- radius ladder ------------------------------------------------------------

std::vector<SweepRow> radius_sweep(const std::vector<double>& radii, const SweepPacket& pkt) {
    if (radii.empty()) throw std::invalid_argument("radius_sweep: no radii");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw std::invalid_argument("radius_sweep: radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("radius_sweep: radii must be increasing");
    }
    if (!(pkt.sigma0 > 0.0) || pkt.p < 1)
        throw std::invalid_argument("radius_sweep: bad packet parameters");

    std::vector<SweepRow> rows;
    rows.reserve(radii.size());
    for (double R : radii) {
        double sigma_theta = (pkt.rule == WidthRule::sqrt_radius) ? pkt.sigma0 / std::sqrt(R)
                                                                  : pkt.sigma0 / R;
        double sigma_x = sigma_theta * R;
        double theta0 = pkt.x0 / R;
        int l0 = static_cast<int>(std::lround(pkt.p * R));
        double sigma_l = 1.0 / sigma_theta;
        int L = l0 + static_cast<int>(std::ceil(6.0 * sigma_l)) + 16;
        if (L > 4096) throw std::invalid_argument("radius_sweep: cutoff grows unreasonably");
        if (l0 + 4.0 * sigma_l > L)
            throw std::invalid_argument("radius_sweep: packet approaches the cutoff");

        Basis b = make_basis(L, R, 1.0, 1.0);
        State psi = gaussian_state(b, theta0, l0, sigma_theta);

        Operator T = sine_time_op(b);
        Operator H = hamiltonian_op(b);
        SweepRow row;
        row.R = R;
        row.L = L;
        row.l0 = l0;
        row.ring_T = expectation(T, psi).real();
        row.c_expectation = expectation(cosine_op(b), psi).real();

        State u = apply(commutator(H, T), psi);
        double acc = 0.0;
        for (int i = 0; i < b.dim(); ++i) acc += std::norm(u.a[i] - cplx{0.0, b.hbar} * psi.a[i]);
        row.comm_residual = std::sqrt(acc) / b.hbar;

        double k0 = static_cast<double>(pkt.p);
        double k_max = k0 + 14.0 / sigma_x;
        LineGrid g = make_line_grid(2048, k_max, k0 / 10.0, 1.0, 1.0);
        LineState line = gaussian_line_packet(g, pkt.x0, k0, sigma_x);
        row.line_T = line_time_expectation(line);
        row.rel_diff = std::abs(row.ring_T - row.line_T) / std::max(std::abs(row.line_T), 1e-300);
        row.pt_nh_diff = std::abs(expectation(pt_time_op(b), psi) - line_nh_expectation(line));
        rows.push_back(row);
    }
    return rows;
}

double loglog_slope(const std::vector<SweepRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("loglog_slope: need at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(rows.size());
    for (const SweepRow& r : rows) {
        double x = std::log(r.R);
        double y = std::log(std::max(r.rel_diff, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --- matter-wave asymptote ------------------------------------------------------

std::vector<MatterWaveRow> matter_wave_check(const Basis& b, const std::vector<int>& l_values,
                                             const std::vector<double>& theta_values) {
    std::vector<MatterWaveRow> rows;
    rows.reserve(l_values.size() * theta_values.size());
    for (int l : l_values) {
        if (std::abs(l) < 2)
            throw std::invalid_argument("matter_wave_check: need |l| >= 2");
        for (double th : theta_values) {
            if (std::abs(th) > 1e-2)
                throw std::invalid_argument("matter_wave_check: asymptote needs |theta| <= 1e-2");
            MatterWaveRow row;
            row.l = l;
            row.theta = th;
            row.exact = cosine_time_ratio(b, th, l);
            row.asymptote = -2.0 * b.inertia() / (b.hbar * 4.0 * l * l);
            row.rel_deviation = std::abs(row.exact - row.asymptote) / std::abs(row.asymptote);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace ringtime
