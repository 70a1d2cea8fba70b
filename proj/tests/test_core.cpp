// Basis geometry, grid projection round-trips, deterministic random states,
// dense kernels (serial vs parallel, bitwise), the radix-2 FFT, and the
// Jacobi eigensolver with its power-iteration norm.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "ringtime/basis.hpp"
#include "ringtime/eigensolve.hpp"
#include "ringtime/kernels.hpp"
#include "ringtime/operators.hpp"

using namespace ringtime;

TEST_CASE("basis geometry and defaults") {
    Basis b = make_basis(64);
    CHECK(b.dim() == 129);
    CHECK(b.n_grid == 1024);  // smallest power of two >= 4 * 129
    CHECK(b.theta(0) == -kPi);
    CHECK(b.theta(b.n_grid / 2) == 0.0);
    CHECK(b.idx(-64) == 0);
    CHECK(b.idx(64) == 128);
    CHECK(b.level(128) == 64);
    CHECK(b.inertia() == 1.0);

    Basis c = make_basis(4, 2.0, 3.0);
    CHECK(c.inertia() == 12.0);
    CHECK(c.energy(2) == 4.0 / 24.0);
    CHECK(c.energy(-2) == c.energy(2));

    CHECK(default_grid_size(1) == 16);
    CHECK(default_grid_size(64) == 1024);

    CHECK_THROWS_AS(make_basis(0), std::invalid_argument);
    CHECK_THROWS_AS(make_basis(4, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_basis(8, 1.0, 1.0, 1.0, 8), std::invalid_argument);
}

TEST_CASE("plane-wave states are orthonormal and sample correctly") {
    Basis b = make_basis(8);
    State s3 = basis_state(b, 3);
    CHECK(norm(s3) == 1.0);
    CHECK(inner(basis_state(b, 2), s3) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(basis_state(b, 9), std::invalid_argument);

    GridFunction g = to_grid(s3);
    const double amp = 1.0 / std::sqrt(kTwoPi);
    for (int j : {0, 5, 17}) {
        cplx want = std::polar(amp, 3.0 * b.theta(j));
        CHECK(std::abs(g.v[static_cast<size_t>(j)] - want) <= 1e-14);
    }
    CHECK(std::abs(grid_norm(g) - 1.0) <= 1e-13);
    CHECK(std::abs(grid_inner(to_grid(basis_state(b, -2)), g)) <= 1e-14);
}

TEST_CASE("grid projection round-trips band-limited states") {
    Basis b = make_basis(12);
    State s = random_interior_state(b, 1, 7);
    double aliased = -1.0;
    State back = from_grid(to_grid(s), &aliased);
    CHECK(aliased >= 0.0);
    CHECK(aliased <= 1e-12);
    for (int l = -12; l <= 12; ++l) CHECK(std::abs(back.coef(l) - s.coef(l)) <= 1e-13);
}

TEST_CASE("aliasing fraction flags grid content above the cutoff") {
    Basis b = make_basis(2);
    GridFunction g{b, std::vector<cplx>(static_cast<size_t>(b.n_grid))};
    for (int j = 0; j < b.n_grid; ++j)
        g.v[static_cast<size_t>(j)] = std::polar(1.0 / std::sqrt(kTwoPi), 4.0 * b.theta(j));
    double aliased = 0.0;
    State s = from_grid(g, &aliased);
    CHECK(aliased >= 0.999);  // frequency 4 lies entirely outside |l| <= 2
    CHECK(norm(s) <= 1e-12);
}

TEST_CASE("gaussian packets are normalized, centered, and interior") {
    Basis b = make_basis(32);
    State s = gaussian_state(b, 0.5, 5, 0.4);
    CHECK(std::abs(norm(s) - 1.0) <= 1e-12);
    int l_peak = -99;
    double best = -1.0;
    for (int l = -32; l <= 32; ++l)
        if (std::abs(s.coef(l)) > best) {
            best = std::abs(s.coef(l));
            l_peak = l;
        }
    CHECK(l_peak == 5);
    CHECK(outer_norm_fraction(s, 8) <= 1e-8);
    CHECK(interior(s, 8, 1e-8));
    CHECK_FALSE(interior(s, 31, 1e-8));  // margin 31 keeps only |l| <= 1
    CHECK_THROWS_AS(gaussian_state(b, 0.0, 40, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_state(b, 0.0, 0, -1.0), std::invalid_argument);
}

TEST_CASE("random interior states are deterministic and respect the margin") {
    Basis b = make_basis(16);
    State s1 = random_interior_state(b, 4, 99);
    State s2 = random_interior_state(b, 4, 99);
    CHECK(s1.a == s2.a);  // identical seed, identical bits
    CHECK(std::abs(norm(s1) - 1.0) <= 1e-12);
    for (int l = 13; l <= 16; ++l) {
        CHECK(s1.coef(l) == cplx(0.0, 0.0));
        CHECK(s1.coef(-l) == cplx(0.0, 0.0));
    }
    CHECK(std::abs(random_interior_state(b, 4, 100).coef(0) - s1.coef(0)) > 1e-8);

    auto batch = random_interior_states(b, 4, 3, 1);
    REQUIRE(batch.size() == 3);
    CHECK(std::abs(inner(batch[0], batch[1])) < 0.999);
    CHECK_THROWS_AS(random_interior_state(b, 0, 1), std::invalid_argument);
}

TEST_CASE("parallel kernels match the serial reference bitwise") {
    const int n = 37;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> A(static_cast<size_t>(n) * n), B(static_cast<size_t>(n) * n);
    std::vector<cplx> C1(A.size()), C2(A.size()), x(n), y1(n), y2(n);
    for (auto& z : A) z = cplx(u(rng), u(rng));
    for (auto& z : B) z = cplx(u(rng), u(rng));
    for (auto& z : x) z = cplx(u(rng), u(rng));

    kern::matmul_serial(n, A.data(), B.data(), C1.data());
    kern::matmul(n, A.data(), B.data(), C2.data());
    CHECK(C1 == C2);

    kern::matvec_serial(n, A.data(), x.data(), y1.data());
    kern::matvec(n, A.data(), x.data(), y2.data());
    CHECK(y1 == y2);

    const int L = 20, ng = 128;
    std::vector<cplx> a(2 * L + 1), v1(ng), v2(ng), b1(2 * L + 1), b2(2 * L + 1);
    for (auto& z : a) z = cplx(u(rng), u(rng));
    kern::synthesis_serial(L, ng, a.data(), v1.data());
    kern::synthesis(L, ng, a.data(), v2.data());
    CHECK(v1 == v2);
    kern::analysis_serial(L, ng, v1.data(), b1.data());
    kern::analysis(L, ng, v1.data(), b2.data());
    CHECK(b1 == b2);
    for (int i = 0; i <= 2 * L; ++i)
        CHECK(std::abs(b1[static_cast<size_t>(i)] - a[static_cast<size_t>(i)]) <= 1e-12);
}

TEST_CASE("radix-2 fft round-trips and satisfies parseval") {
    std::vector<cplx> d(16, cplx(0.0, 0.0));
    d[0] = 1.0;
    kern::fft(d, false);
    for (const auto& z : d) CHECK(std::abs(z - cplx(1.0, 0.0)) <= 1e-15);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(64);
    for (auto& z : v) z = cplx(u(rng), u(rng));
    std::vector<cplx> w = v;
    kern::fft(w, false);
    double pv = 0.0, pw = 0.0;
    for (const auto& z : v) pv += std::norm(z);
    for (const auto& z : w) pw += std::norm(z);
    CHECK(std::abs(pw - 64.0 * pv) <= 1e-11 * pw);
    kern::fft(w, true);
    for (size_t i = 0; i < v.size(); ++i) CHECK(std::abs(w[i] - v[i]) <= 1e-13);
}

TEST_CASE("jacobi eigensolver reproduces a closed-form 2x2 spectrum") {
    std::vector<cplx> m{cplx(2, 0), cplx(0, 1), cplx(0, -1), cplx(2, 0)};
    EigenSystem es = hermitian_eigen_raw(2, m);
    REQUIRE(es.values.size() == 2);
    CHECK(std::abs(es.values[0] - 1.0) <= 1e-14);
    CHECK(std::abs(es.values[1] - 3.0) <= 1e-14);
    for (int k = 0; k < 2; ++k) {
        cplx big = std::abs(es.vec(0, k)) >= std::abs(es.vec(1, k)) ? es.vec(0, k) : es.vec(1, k);
        CHECK(std::abs(std::imag(big)) <= 1e-15);  // canonical phase
        CHECK(std::real(big) > 0.0);
    }
}

TEST_CASE("eigensolver handles dense random hermitian matrices") {
    Basis b = make_basis(10);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Operator A = zero_op(b);
    for (int r = 0; r < A.n; ++r)
        for (int c = 0; c <= r; ++c) {
            cplx z(u(rng), r == c ? 0.0 : u(rng));
            A.at(r, c) = z;
            A.at(c, r) = std::conj(z);
        }
    A.hermitian = true;
    EigenSystem es = hermitian_eigen(A);
    CHECK(eigen_residual(A, es) <= 1e-11);
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    double tr = 0.0, sum = 0.0;
    for (int i = 0; i < A.n; ++i) tr += std::real(A.at(i, i));
    for (double v : es.values) sum += v;
    CHECK(std::abs(sum - tr) <= 1e-11);
    CHECK_THROWS(hermitian_eigen(shift_op(b, 1)));  // missing hermitian tag
}

TEST_CASE("power-iteration norm agrees with the jacobi oracle") {
    Basis b = make_basis(9);
    CHECK(std::abs(spectral_norm(shift_op(b, 1)) - 1.0) <= 1e-10);
    Operator T = sine_time_op(b);
    double fast = spectral_norm(T);
    double exact = spectral_norm_exact(T);
    CHECK(std::abs(fast - exact) <= 1e-9 * exact);
    CHECK(spectral_norm(zero_op(b)) == 0.0);
}
