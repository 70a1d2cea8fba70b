// Commutator identities of the truncated ring operators: closed-form matrix
// equalities including the window edge, residual reports on random states, the
// weak-Weyl relation under both flows, the even-harmonic corrected relation,
// parity/PT classification, and the eigenstate expectation paradox.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ringtime/algebra.hpp"
#include "ringtime/basis.hpp"
#include "ringtime/dynamics.hpp"
#include "ringtime/operators.hpp"

using namespace ringtime;

TEST_CASE("momentum ladder commutators close exactly") {
    Basis b = make_basis(16);
    Operator pi = momentum_op(b);
    for (int n : {1, 2, 5, -3}) {
        Operator Wn = shift_op(b, n);
        CHECK(max_abs(sub(commutator(pi, Wn), scale(Wn, n * b.hbar))) == 0.0);
    }
    auto states = random_interior_states(b, 4, 8, 11);
    auto rep = check_identity("ladder", commutator(pi, shift_op(b, 1)),
                              scale(shift_op(b, 1), b.hbar), states);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-15);
    CHECK(rep.n_states == 8);
}

TEST_CASE("trig commutators with momentum, including the edge defect") {
    Basis b = make_basis(12);
    Operator pi = momentum_op(b), C = cosine_op(b), S = sine_op(b);
    const cplx ih(0.0, b.hbar);
    CHECK(max_abs(sub(commutator(pi, C), scale(S, ih))) == 0.0);
    CHECK(max_abs(sub(commutator(pi, S), scale(C, -ih))) == 0.0);

    // [C, S] does not vanish on the truncation: pure corner projectors
    Operator want = zero_op(b);
    want.el(12, 12) = cplx(0.0, 0.5);
    want.el(-12, -12) = cplx(0.0, -0.5);
    CHECK(max_abs(sub(commutator(C, S), want)) == 0.0);
}

TEST_CASE("time-operator commutators with the hamiltonian close to rounding") {
    Basis b = make_basis(16);
    Operator H = hamiltonian_op(b);
    const cplx ih(0.0, b.hbar);
    CHECK(max_abs(sub(commutator(H, sine_time_op(b)), scale(cosine_op(b), ih))) <= 1e-14);
    CHECK(max_abs(sub(commutator(H, cosine_time_op(b)), scale(sine_op(b), -ih))) <= 1e-14);
    Operator want = scale(shift_op(b, 1), -b.hbar);
    CHECK(max_abs(sub(commutator(H, pt_time_op(b)), want)) <= 1e-14);

    // boundary column: the identity holds on the edge state as well
    State edge_state = basis_state(b, 16);
    State lhs = apply(commutator(H, pt_time_op(b)), edge_state);
    State rhs = apply(want, edge_state);
    double gap = 0.0;
    for (int l = -16; l <= 16; ++l) gap = std::max(gap, std::abs(lhs.coef(l) - rhs.coef(l)));
    CHECK(gap <= 1e-15);
}

TEST_CASE("identity reports normalize the residual by the operator scale") {
    Basis b = make_basis(10);
    auto states = random_interior_states(b, 2, 6, 21);
    auto ok = check_identity("closes", commutator(momentum_op(b), cosine_op(b)),
                             scale(sine_op(b), cplx(0.0, 1.0)), states);
    CHECK(ok.pass);
    CHECK(ok.residual <= 1e-15);
    CHECK(ok.scale > 0.1);
    auto bad = check_identity("fails", commutator(momentum_op(b), cosine_op(b)),
                              scale(sine_op(b), cplx(0.0, -1.0)), states);
    CHECK_FALSE(bad.pass);
    CHECK(bad.residual > 0.1);
    CHECK_THROWS_AS(check_identity("empty", momentum_op(b), momentum_op(b), {}),
                    std::invalid_argument);
}

TEST_CASE("unitary exponential: diagonal fast path and jacobi fallback") {
    Basis b = make_basis(8);
    CHECK(max_abs(sub(unitary_exp(momentum_op(b), 0.0), identity_op(b))) == 0.0);
    Operator U = unitary_exp(momentum_op(b), 0.7);
    for (int l : {-8, 0, 3})
        CHECK(std::abs(U.el(l, l) - std::polar(1.0, -0.7 * l)) <= 1e-15);
    CHECK(std::abs(U.el(1, 0)) == 0.0);

    Operator V = unitary_exp(cosine_op(b), 1.3);  // banded generator -> eigensolver path
    CHECK(max_abs(sub(mul(V, adjoint(V)), identity_op(b))) <= 1e-12);
    CHECK_THROWS_AS(unitary_exp(pt_time_op(b), 1.0), std::invalid_argument);
}

TEST_CASE("weak-weyl relation for the sawtooth multiplication operator") {
    Basis b = make_basis(16);
    auto states = random_interior_states(b, 4, 6, 31);
    FourierSymbol saw = sawtooth_symbol(8);
    Operator f = fourier_op(b, saw);
    auto K = [&](double s) { return sub(fourier_op(b, shifted_symbol(saw, s)), f); };
    auto rep = check_gwwr("shift flow", f, momentum_op(b), K, {0.1, 1.0, kPi}, states);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-13);

    // negative control: omitting the commutation factor breaks the relation
    auto none = [&](double) { return zero_op(b); };
    auto bad = check_gwwr("shift flow, no factor", f, momentum_op(b), none, {1.0}, states);
    CHECK_FALSE(bad.pass);
    CHECK(bad.residual > 0.05);
}

TEST_CASE("weak-weyl relation for the time operator under its hamiltonian flow") {
    Basis b = make_basis(16);
    auto states = random_interior_states(b, 4, 6, 32);
    Operator T = sine_time_op(b);
    auto K = [&](double s) { return commutation_factor(T, s); };
    auto rep = check_gwwr("energy flow", T, hamiltonian_op(b), K, {0.1, 1.0, kPi}, states);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1e-13);
}

TEST_CASE("even-harmonic correction sits at the paired levels") {
    Basis b = make_basis(16);
    FourierSymbol saw = sawtooth_symbol(8);
    Operator corr = gccr_correction(b, saw);
    CHECK(corr.el(1, -1) == 2.0 * b.hbar * saw.coef(2));
    CHECK(corr.el(-1, 1) == -2.0 * b.hbar * saw.coef(-2));
    CHECK(corr.el(4, -4) == 8.0 * b.hbar * saw.coef(8));
    CHECK(corr.el(2, 1) == cplx(0.0, 0.0));
    CHECK(corr.el(2, -2) == 4.0 * b.hbar * saw.coef(4));

    // corrected identity is a matrix equality down to rounding
    Operator lhs = commutator(hamiltonian_op(b), sawtooth_time_op(b, 8));
    Operator rhs = add(scale(fourier_derivative_op(b, saw), cplx(0.0, b.hbar)), corr);
    CHECK(max_abs(sub(lhs, rhs)) <= 1e-13);
}

TEST_CASE("corrected relation passes where the bare relation needs the filter") {
    Basis b = make_basis(16);
    FourierSymbol saw = sawtooth_symbol(8);
    State psi = zero_state(b);  // populates the paired level of the 2nd harmonic
    psi.coef(-1) = 1.0;
    psi.coef(3) = 1.0;
    auto rep = check_gccr(b, saw, {psi});
    CHECK(rep.corrected.pass);
    CHECK(rep.corrected.residual <= 1e-13);
    CHECK_FALSE(rep.restricted.pass);
    CHECK(rep.restricted.residual > 0.05);
    CHECK(std::abs(rep.restricted.domain_filter_violation - 0.5) <= 1e-15);  // |c_2 <-1|psi>|

    State filt = zero_state(b);  // support avoids 0 < |l| <= 4
    filt.coef(0) = 0.5;
    filt.coef(7) = 1.0;
    filt.coef(-9) = 0.7;
    auto rep2 = check_gccr(b, saw, {filt});
    CHECK(rep2.restricted.pass);
    CHECK(rep2.restricted.domain_filter_violation <= 1e-15);
    CHECK(rep2.corrected.pass);
}

TEST_CASE("parity and pt classification") {
    Basis b = make_basis(9);
    Operator P = parity_op(b);
    CHECK(max_abs(sub(mul(P, P), identity_op(b))) == 0.0);
    CHECK(max_abs(sub(mul(P, mul(shift_op(b, 1), P)), shift_op(b, -1))) == 0.0);

    Operator T = sine_time_op(b);
    CHECK(max_abs(add(pt_transform(T), T)) == 0.0);  // imaginary entries flip
    CHECK(pt_antisymmetric(T));
    CHECK(pt_antisymmetry_defect(T) == 0.0);
    CHECK(pt_symmetry_defect(T) > 0.5);
    CHECK_FALSE(pt_symmetric(T));

    CHECK(pt_symmetric(pt_time_op(b)));
    CHECK(pt_symmetry_defect(pt_time_op(b)) == 0.0);
    CHECK(pt_symmetric(shift_op(b, 2)));
    CHECK(pt_symmetric(momentum_op(b)));
    CHECK(pt_symmetric(hamiltonian_op(b)));
    CHECK(pt_symmetric(cosine_time_op(b)));

    // (PT)^2 = 1: transforming twice restores every entry bitwise
    Operator twice = pt_transform(pt_transform(pt_time_op(b)));
    CHECK(max_abs(sub(twice, pt_time_op(b))) == 0.0);
}

TEST_CASE("eigenstate expectation paradox") {
    Basis b = make_basis(16);
    auto rep = paradox_demo(b, 3);
    CHECK(rep.l == 3);
    CHECK(rep.commutator_expectation == cplx(0.0, 0.0));
    CHECK(rep.naive_value == cplx(0.0, b.hbar));
    CHECK_THROWS_AS(paradox_demo(b, 16), std::invalid_argument);
    CHECK_THROWS_AS(paradox_demo(b, 0), std::invalid_argument);
}
