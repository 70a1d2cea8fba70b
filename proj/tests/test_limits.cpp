// The reference free particle on the line in momentum representation, its
// time-expectation oracle and drift, the radius ladder converging at 1/R,
// and the matter-wave asymptote.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ringtime/basis.hpp"
#include "ringtime/limits.hpp"

using namespace ringtime;

namespace {

LineState p_apply(const LineState& s, int power = 1) {
    LineState out = s;
    for (int j = 0; j < s.grid.n; ++j) {
        double f = std::pow(s.grid.hbar * s.grid.k(j), power);
        out.a[static_cast<size_t>(j)] = s.a[static_cast<size_t>(j)] * f;
    }
    return out;
}

double mean_inverse_k(const LineState& s) {
    double acc = 0.0;
    for (int j = 0; j < s.grid.n; ++j) {
        double k = s.grid.k(j);
        if (k != 0.0) acc += std::norm(s.a[static_cast<size_t>(j)]) / k;
    }
    return acc * s.grid.dk();
}

}  // namespace

TEST_CASE("line grid constraints") {
    CHECK_THROWS_AS(make_line_grid(100, 20.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_line_grid(8, 20.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_line_grid(64, 1.0, 2.0), std::invalid_argument);
    LineGrid g = make_line_grid(64, 16.0, 0.5);
    CHECK(g.dk() == 0.5);
    CHECK(g.k(0) == -16.0);
    CHECK(g.k(32) == 0.0);
}

TEST_CASE("window packets are normalized and vanish inside the excluded band") {
    LineGrid g = make_line_grid(1024, 24.0, 0.9);
    LineState s = gaussian_line_packet(g, -0.3, 9.0, 0.7);
    CHECK(std::abs(line_norm(s) - 1.0) <= 1e-12);
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.k(j)) <= g.k_min) CHECK(s.a[static_cast<size_t>(j)] == cplx(0.0, 0.0));
    CHECK_THROWS_AS(gaussian_line_packet(g, 0.0, 9.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_line_packet(g, 0.0, 1.0, 0.7), std::invalid_argument);
}

TEST_CASE("spectral position operator reproduces the packet center") {
    LineGrid g = make_line_grid(1024, 24.0, 0.9);
    const double x0 = -0.3;
    LineState s = gaussian_line_packet(g, x0, 9.0, 0.7);
    cplx x_mean = line_inner(s, x_apply(s));
    CHECK(std::abs(x_mean.real() - x0) <= 1e-9);
    CHECK(std::abs(x_mean.imag()) <= 1e-9);
}

TEST_CASE("canonical pair on the grid: [x, hbar k] = i hbar") {
    LineGrid g = make_line_grid(1024, 24.0, 0.9, 1.0, 0.7);
    LineState s = gaussian_line_packet(g, 0.2, 9.0, 0.6);
    LineState xp = x_apply(p_apply(s));
    LineState px = p_apply(x_apply(s));
    cplx comm = 0.0;
    for (int j = 0; j < g.n; ++j) {
        size_t u = static_cast<size_t>(j);
        comm += std::conj(s.a[u]) * (xp.a[u] - px.a[u]);
    }
    comm *= g.dk();
    CHECK(std::abs(comm - cplx(0.0, g.hbar)) <= 1e-6);
}

TEST_CASE("momentum inverse multiplies back to the identity on the support") {
    LineGrid g = make_line_grid(512, 20.0, 1.0);
    LineState s = gaussian_line_packet(g, 0.1, 8.0, 0.8);
    LineState r = p_apply(pinv_apply(s));
    for (int j = 0; j < g.n; ++j)
        CHECK(std::abs(r.a[static_cast<size_t>(j)] - s.a[static_cast<size_t>(j)]) <= 1e-14);
    LineState two_steps = pinv_apply(pinv_apply(s));
    LineState squared = pinv_apply(s, 2);
    for (int j = 0; j < g.n; ++j)
        CHECK(std::abs(two_steps.a[static_cast<size_t>(j)] - squared.a[static_cast<size_t>(j)]) <=
              1e-14);
    CHECK_THROWS_AS(pinv_apply(s, 0), std::invalid_argument);
}

TEST_CASE("time expectation matches the direct-sum oracle") {
    LineGrid g = make_line_grid(1024, 24.0, 0.9, 1.3, 0.8);  // nontrivial mass and hbar
    const double x0 = -0.35;
    LineState s = gaussian_line_packet(g, x0, 9.0, 0.7);
    double want = -g.mass * x0 * mean_inverse_k(s) / g.hbar;
    double got = line_time_expectation(s);
    CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
}

TEST_CASE("non-hermitian expectation splits into damping and arrival parts") {
    LineGrid g = make_line_grid(1024, 24.0, 0.9);
    LineState s = gaussian_line_packet(g, -0.25, 9.0, 0.7);
    cplx nh = line_nh_expectation(s);
    double p2 = 0.0;
    for (int j = 0; j < g.n; ++j) {
        double k = g.k(j);
        if (k != 0.0) p2 += std::norm(s.a[static_cast<size_t>(j)]) / (k * k);
    }
    p2 *= g.dk() / (g.hbar * g.hbar);
    CHECK(std::abs(nh.real() + 0.5 * g.mass * g.hbar * p2) <= 1e-10);
    CHECK(std::abs(nh.imag() - line_time_expectation(s)) <= 1e-10);
}

TEST_CASE("free evolution drifts the time expectation by exactly t") {
    LineGrid g = make_line_grid(2048, 26.0, 0.9);
    LineState s = gaussian_line_packet(g, -0.25, 9.0, 0.578);
    double t0 = line_time_expectation(s);
    for (double t : {0.5, 2.0}) {
        LineState moved = line_evolve(s, t);
        CHECK(std::abs(line_norm(moved) - 1.0) <= 1e-12);
        CHECK(std::abs(line_time_expectation(moved) - t0 - t) <= 1e-10 * t);
    }
    // the packet center moves backward along the classical trajectory
    double v = 0.0;
    for (int j = 0; j < g.n; ++j)
        v += std::norm(s.a[static_cast<size_t>(j)]) * g.hbar * g.k(j) / g.mass;
    v *= g.dk();
    LineState at1 = line_evolve(s, 1.0);
    cplx x1 = line_inner(at1, x_apply(at1));
    CHECK(std::abs(x1.real() - (-0.25 - v)) <= 1e-7);
}

TEST_CASE("weak canonical relation holds between window packets") {
    LineGrid g = make_line_grid(1024, 26.0, 0.9);
    LineState psi = gaussian_line_packet(g, -0.3, 10.0, 0.7);
    LineState phi = gaussian_line_packet(g, 0.2, 9.0, 0.8);
    CHECK(line_weak_canonical_residual(phi, psi) <= 1e-10);
    CHECK(line_weak_canonical_residual(psi, psi) <= 1e-10);
}

TEST_CASE("radius ladder converges to the line at first order") {
    SweepPacket pkt;  // defaults: x0 = -0.25, p = 9, sigma0 = 0.578, sqrt rule
    auto rows = radius_sweep({1.0, 2.0, 4.0, 8.0}, pkt);
    REQUIRE(rows.size() == 4);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].l0 == 9 * (1 << i));
        CHECK(rows[i].rel_diff > 0.0);
        if (i > 0) {
            CHECK(rows[i].rel_diff < rows[i - 1].rel_diff);
            double ratio = rows[i - 1].rel_diff / rows[i].rel_diff;
            CHECK(ratio >= 1.5);
            CHECK(ratio <= 3.0);
            CHECK(rows[i].c_expectation > rows[i - 1].c_expectation);
            CHECK(rows[i].comm_residual < rows[i - 1].comm_residual);
            CHECK(rows[i].pt_nh_diff < rows[i - 1].pt_nh_diff);
        }
    }
    CHECK(rows[0].c_expectation > 0.7);
    CHECK(rows[3].c_expectation > 0.95);
    CHECK(rows[0].line_T > 0.02);
    CHECK(rows[0].line_T < 0.04);  // -m x0 <1/k> at x0 = -0.25, k ~ 9

    double slope = loglog_slope(rows);
    CHECK(slope >= -1.3);
    CHECK(slope <= -0.7);

    CHECK_THROWS_AS(radius_sweep({}, pkt), std::invalid_argument);
    CHECK_THROWS_AS(radius_sweep({2.0, 1.0}, pkt), std::invalid_argument);
}

TEST_CASE("fixed line-width packets converge one order faster") {
    SweepPacket pkt;
    pkt.rule = WidthRule::fixed_line_width;
    auto rows = radius_sweep({1.0, 2.0, 4.0}, pkt);
    CHECK(loglog_slope(rows) <= -1.6);
}

TEST_CASE("log-log slope on synthetic rows") {
    std::vector<SweepRow> rows(4);
    for (int i = 0; i < 4; ++i) {
        rows[static_cast<size_t>(i)].R = std::pow(2.0, i);
        rows[static_cast<size_t>(i)].rel_diff = 0.4 / rows[static_cast<size_t>(i)].R;
    }
    CHECK(std::abs(loglog_slope(rows) + 1.0) <= 1e-12);
    rows.resize(1);
    CHECK_THROWS_AS(loglog_slope(rows), std::invalid_argument);
}

TEST_CASE("matter-wave deviation follows the inverse-square law at theta = 0") {
    Basis b = make_basis(8);  // the ratio is analytic; the window size is irrelevant
    auto rows = matter_wave_check(b, {10, 20, 40, 80}, {0.0});
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        double want = 1.0 / (4.0 * row.l * row.l - 1.0);
        CHECK(std::abs(row.rel_deviation - want) <= 1e-14);
        CHECK(row.asymptote < 0.0);
    }
    // scaled deviation dev * l^2 is flat well within a factor of two
    double lo = 1e300, hi = 0.0;
    for (const auto& row : rows) {
        double scaled = row.rel_deviation * row.l * row.l;
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    CHECK(hi / lo <= 1.01);
    CHECK(lo >= 0.249);
    CHECK(hi <= 0.2507);

    // off-center the asymptote degrades: deviation grows with l at fixed theta
    auto off = matter_wave_check(b, {10, 80}, {0.01});
    CHECK(off[1].rel_deviation > off[0].rel_deviation);

    CHECK_THROWS_AS(matter_wave_check(b, {1}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(matter_wave_check(b, {10}, {0.5}), std::invalid_argument);
}
