// Timing comparison between the serial reference kernels and the parallel
// ones, with a checksum equality check so a speedup never hides a wrong
// answer. Not part of the test suite; build and run it directly.
#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "ringtime/basis.hpp"
#include "ringtime/kernels.hpp"

using ringtime::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(u(rng), u(rng));
    return v;
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

bool same(const std::vector<cplx>& a, const std::vector<cplx>& b) { return a == b; }

void row(const char* name, double serial, double parallel, bool match) {
    std::printf("%-22s %10.3f ms %10.3f ms %7.2fx   %s\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel, match ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    for (int n : {129, 257, 513}) {
        const std::size_t nn = static_cast<std::size_t>(n) * n;
        const auto A = random_vec(nn, 1);
        const auto B = random_vec(nn, 2);
        std::vector<cplx> C1(nn), C2(nn);
        const double ts = time_best_of(
            3, [&] { ringtime::kern::matmul_serial(n, A.data(), B.data(), C1.data()); });
        const double tp =
            time_best_of(3, [&] { ringtime::kern::matmul(n, A.data(), B.data(), C2.data()); });
        char name[64];
        std::snprintf(name, sizeof(name), "matmul n=%d", n);
        row(name, ts, tp, same(C1, C2));
    }

    for (int n : {513, 1025}) {
        const auto A = random_vec(static_cast<std::size_t>(n) * n, 3);
        const auto x = random_vec(n, 4);
        std::vector<cplx> y1(n), y2(n);
        const double ts = time_best_of(
            5, [&] { ringtime::kern::matvec_serial(n, A.data(), x.data(), y1.data()); });
        const double tp =
            time_best_of(5, [&] { ringtime::kern::matvec(n, A.data(), x.data(), y2.data()); });
        char name[64];
        std::snprintf(name, sizeof(name), "matvec n=%d", n);
        row(name, ts, tp, same(y1, y2));
    }

    for (int L : {64, 128, 256}) {
        const std::size_t dim = 2 * static_cast<std::size_t>(L) + 1;
        const int n_grid = ringtime::default_grid_size(L);
        const auto a = random_vec(dim, 5);
        std::vector<cplx> v1(n_grid), v2(n_grid), b1(dim), b2(dim);
        double ts = time_best_of(
            5, [&] { ringtime::kern::synthesis_serial(L, n_grid, a.data(), v1.data()); });
        double tp =
            time_best_of(5, [&] { ringtime::kern::synthesis(L, n_grid, a.data(), v2.data()); });
        char name[64];
        std::snprintf(name, sizeof(name), "synthesis L=%d", L);
        row(name, ts, tp, same(v1, v2));

        ts = time_best_of(
            5, [&] { ringtime::kern::analysis_serial(L, n_grid, v1.data(), b1.data()); });
        tp = time_best_of(5, [&] { ringtime::kern::analysis(L, n_grid, v1.data(), b2.data()); });
        std::snprintf(name, sizeof(name), "analysis L=%d", L);
        row(name, ts, tp, same(b1, b2));
    }

    return 0;
}
