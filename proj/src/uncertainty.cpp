#include "ringtime/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringtime {

namespace {

void require_unit(const State& psi, const char* who) {
    if (std::abs(norm(psi) - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": state must be normalized");
}

UncertaintyReport make_report(std::string name, double lhs, double rhs, double hbar) {
    UncertaintyReport r;
    r.relation = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.scale = std::max({lhs, rhs, hbar});
    r.holds = r.slack >= -1e-12 * r.scale;
    return r;
}

// <psi|[A,B]|psi> = <A^dag psi, B psi> - <B^dag psi, A psi>
cplx commutator_expectation(const Operator& A, const Operator& B, const State& psi) {
    State a = apply(A, psi);
    State b = apply(B, psi);
    State ad = A.hermitian ? a : apply(adjoint(A), psi);
    State bd = B.hermitian ? b : apply(adjoint(B), psi);
    return inner(ad, b) - inner(bd, a);
}

}  // namespace

cplx expectation(const Operator& A, const State& psi) { return inner(psi, apply(A, psi)); }

double deviation(const Operator& A, const State& psi) {
    require_unit(psi, "deviation");
    State w = apply(A, psi);
    double n2 = norm(w);
    cplx e = inner(psi, w);
    double d2 = n2 * n2 - std::norm(e);
    return std::sqrt(std::max(d2, 0.0));
}

double deviation_sym(const Operator& A, const State& psi) {
    if (A.hermitian) return deviation(A, psi);
    return 0.5 * (deviation(A, psi) + deviation(adjoint(A), psi));
}

UncertaintyReport robertson(const Operator& A, const Operator& B, const State& psi) {
    if (!A.hermitian || !B.hermitian)
        throw std::invalid_argument("robertson: needs hermitian operators (use dou_du)");
    require_unit(psi, "robertson");
    double lhs = deviation(A, psi) * deviation(B, psi);
    double rhs = 0.5 * std::abs(commutator_expectation(A, B, psi));
    return make_report("robertson", lhs, rhs, psi.basis.hbar);
}

UncertaintyReport dou_du(const Operator& A, const Operator& B, const State& psi) {
    require_unit(psi, "dou_du");
    double lhs = deviation_sym(A, psi) * deviation_sym(B, psi);
    double rhs = 0.5 * std::abs(commutator_expectation(A, B, psi));
    return make_report("dou_du", lhs, rhs, psi.basis.hbar);
}

std::pair<UncertaintyReport, UncertaintyReport> cauchy_schwarz_bounds(const Operator& A,
                                                                      const Operator& B,
                                                                      const State& psi) {
    require_unit(psi, "cauchy_schwarz_bounds");
    State a = apply(A, psi);
    State b = apply(B, psi);
    State ad = A.hermitian ? a : apply(adjoint(A), psi);
    State bd = B.hermitian ? b : apply(adjoint(B), psi);
    cplx ea = inner(psi, a);
    cplx eb = inner(psi, b);
    cplx eab = inner(ad, b);  // <A B>
    cplx eba = inner(bd, a);  // <B A>

    double dA = deviation(A, psi);
    double dAd = A.hermitian ? dA : deviation(adjoint(A), psi);
    double dB = deviation(B, psi);
    double dBd = B.hermitian ? dB : deviation(adjoint(B), psi);

    UncertaintyReport fwd = make_report("cauchy_schwarz_forward", dAd * dB,
                                        std::abs(eab - ea * eb), psi.basis.hbar);
    UncertaintyReport rev = make_report("cauchy_schwarz_reverse", dA * dBd,
                                        std::abs(ea * eb - eba), psi.basis.hbar);
    return {fwd, rev};
}

std::vector<PresetPair> preset_pairs(const Basis& b) {
    std::vector<PresetPair> out;
    out.push_back({"pi-W", momentum_op(b), shift_op(b, 1)});
    out.push_back({"H-TPT", hamiltonian_op(b), pt_time_op(b)});
    out.push_back({"H-TS1", hamiltonian_op(b), sine_time_op(b)});
    out.push_back({"pi-C", momentum_op(b), cosine_op(b)});
    return out;
}

BatchResult uncertainty_batch(const Basis& b, int n_states, unsigned long long seed, int margin) {
    if (n_states < 1) throw std::invalid_argument("uncertainty_batch: need states");
    std::vector<State> states = random_interior_states(b, margin, n_states, seed);
    std::vector<PresetPair> pairs = preset_pairs(b);

    BatchResult res;
    res.n_states = n_states;
    res.all_hold = true;
    res.composition_holds = true;
    res.min_scaled_slack = 1e300;

    auto consider = [&](const UncertaintyReport& r, const std::string& pair_name,
                        std::vector<UncertaintyReport>& worst_map) {
        double scaled = r.slack / r.scale;
        res.min_scaled_slack = std::min(res.min_scaled_slack, scaled);
        res.all_hold = res.all_hold && r.holds;
        for (UncertaintyReport& w : worst_map) {
            if (w.relation == r.relation + " " + pair_name) {
                if (r.slack < w.slack) {
                    std::string keep = w.relation;
                    w = r;
                    w.relation = keep;
                }
                return;
            }
        }
        UncertaintyReport named = r;
        named.relation = r.relation + " " + pair_name;
        worst_map.push_back(named);
    };

    for (const PresetPair& pp : pairs) {
        bool both_herm = pp.A.hermitian && pp.B.hermitian;
        for (const State& psi : states) {
            UncertaintyReport dd = dou_du(pp.A, pp.B, psi);
            consider(dd, pp.name, res.worst);
            if (both_herm) consider(robertson(pp.A, pp.B, psi), pp.name, res.worst);
            auto [fwd, rev] = cauchy_schwarz_bounds(pp.A, pp.B, psi);
            consider(fwd, pp.name, res.worst);
            consider(rev, pp.name, res.worst);
            // Triangle composition (A hermitian in every preset):
            // dou_du rhs <= mean of the CS brackets <= mean of the CS products = dou_du lhs.
            double mean_rhs = 0.5 * (fwd.rhs + rev.rhs);
            double mean_lhs = 0.5 * (fwd.lhs + rev.lhs);
            double allow = 1e-12 * std::max({dd.scale, fwd.scale, rev.scale});
            if (dd.rhs > mean_rhs + allow || mean_rhs > mean_lhs + allow ||
                mean_lhs > dd.lhs + allow)
                res.composition_holds = false;
        }
    }
    return res;
}

}  // namespace ringtime
