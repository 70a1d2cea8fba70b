// Truncated momentum basis on the ring and states expressed in it.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ringtime {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Momentum levels l = -L..L on a ring of radius R; plane waves e^{il theta}/sqrt(2 pi).
// The angular grid theta_j = -pi + 2 pi j / n_grid supports exact quadrature for
// band-limited functions as long as n_grid >= 2 (2L+1).
struct Basis {
    int L = 0;
    double R = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
    int n_grid = 0;

    int dim() const { return 2 * L + 1; }
    double inertia() const { return mass * R * R; }
    double theta(int j) const { return -kPi + kTwoPi * static_cast<double>(j) / n_grid; }
    // Kinetic level energy l^2 hbar^2 / (2 I).
    double energy(int l) const {
        double lh = static_cast<double>(l) * hbar;
        return lh * lh / (2.0 * inertia());
    }
    // Index mapping between l in [-L, L] and storage index in [0, dim).
    int idx(int l) const { return l + L; }
    int level(int i) const { return i - L; }

    bool operator==(const Basis&) const = default;
};

// Smallest power of two >= 4 (2L+1); keeps quadrature and aliasing headroom.
int default_grid_size(int L);

// Validates parameters; n_grid == 0 selects the default grid size.
Basis make_basis(int L, double R = 1.0, double mass = 1.0, double hbar = 1.0, int n_grid = 0);

struct State {
    Basis basis;
    std::vector<cplx> a;  // coefficient of |l> at index l + L

    cplx coef(int l) const { return a[static_cast<size_t>(l + basis.L)]; }
    cplx& coef(int l) { return a[static_cast<size_t>(l + basis.L)]; }
};

struct GridFunction {
    Basis basis;
    std::vector<cplx> v;  // sample at theta_j
};

State zero_state(const Basis& b);
State basis_state(const Basis& b, int l);

double norm(const State& s);
cplx inner(const State& x, const State& y);
State normalized(const State& s);

// Quadrature inner product (2 pi / N) sum conj(f_j) g_j; exact for band-limited inputs.
cplx grid_inner(const GridFunction& f, const GridFunction& g);
double grid_norm(const GridFunction& f);

GridFunction to_grid(const State& s);
// Projects grid samples onto the truncated basis. If aliased_fraction is given it
// receives the grid-energy fraction that lives above the cutoff |l| > L.
State from_grid(const GridFunction& g, double* aliased_fraction = nullptr);

// Wrapped Gaussian e^{-(theta-theta0)^2/(2 sigma^2)} e^{i l0 theta}, sampled, projected,
// normalized. sigma must be positive and l0 within the window.
State gaussian_state(const Basis& b, double theta0, int l0, double sigma);

// Fraction of the norm carried by levels with |l| > L - margin.
double outer_norm_fraction(const State& s, int margin);
bool interior(const State& s, int margin, double tol = 1e-12);

// Deterministic complex-Gaussian coefficients on |l| <= L - margin, normalized.
// Uses a fixed Box-Muller map over std::mt19937_64 so streams are portable.
State random_interior_state(const Basis& b, int margin, std::uint64_t seed);
std::vector<State> random_interior_states(const Basis& b, int margin, int count, std::uint64_t seed);

}  // namespace ringtime
