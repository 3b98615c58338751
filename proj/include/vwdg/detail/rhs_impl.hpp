/** \file rhs_impl.hpp
 * Shared implementation of the semi-discrete right-hand sides.
 *
 * The dissipative rates are assembled in two phases: phase 1 produces the
 * conservative rates, phase 2 evaluates the shock viscosity eps_j from those
 * provisional rates and then adds interface viscosity and shock terms. A
 * manufactured source is applied last and never enters the residual
 * indicator.
 */

#pragma once

#include <vector>

#include "vwdg/scheme_common.hpp"
#include "vwdg/shock_capturing.hpp"

namespace vwdg {
namespace detail {

/** Adds interface viscosity and shock-capturing terms to the provisional
 * conservative rates held in `out`. Identical for both formulations. */
template <int NN>
void dissipative_corrections(const SchemeConfig& cfg, const State& st, const InterfaceTerms& it,
                             State& out) {
    const Mesh& mesh = st.psi.mesh;
    const NodalBasis& B = st.psi.basis;
    const double dx = mesh.dx;
    const double vs = cfg.viscosity_scale;

    // eps_j from the untouched provisional rates, all elements first.
    ResidualInputs in{&st, &out.a, &out.b, cfg.ec};
    std::vector<double> eps(mesh.N);
    for (int j = 0; j < mesh.N; ++j) eps[j] = epsilon(cfg, in, j);

    double D[NN][NN], rho[NN], el[NN], er[NN];
    for (int i = 0; i < NN; ++i) {
        rho[i] = B.weights[i];
        el[i] = B.left[i];
        er[i] = B.right[i];
        for (int k = 0; k < NN; ++k) D[i][k] = B.deriv[i][k];
    }

    for (int j = 0; j < mesh.N; ++j) {
        const double* a = &st.a.coeffs[static_cast<std::size_t>(j) * NN];
        const double* b = &st.b.coeffs[static_cast<std::size_t>(j) * NN];
        double* ra = &out.a.coeffs[static_cast<std::size_t>(j) * NN];
        double* rb = &out.b.coeffs[static_cast<std::size_t>(j) * NN];

        double Da[NN], Db[NN];
        for (int i = 0; i < NN; ++i) {
            double da = 0.0, db = 0.0;
            for (int k = 0; k < NN; ++k) {
                da += D[i][k] * a[k];
                db += D[i][k] * b[k];
            }
            Da[i] = da;
            Db[i] = db;
        }

        const int L = j, R = j + 1;
        for (int i = 0; i < NN; ++i) {
            double add_a = er[i] * (0.5 * vs * it.s[R] * it.ajump(R)) -
                           el[i] * (0.5 * vs * it.s[L] * it.ajump(L));
            double add_b = er[i] * (0.5 * vs * it.s[R] * it.bjump(R)) -
                           el[i] * (0.5 * vs * it.s[L] * it.bjump(L));
            double sa = 0.0, sb = 0.0;
            for (int al = 0; al < NN; ++al) {
                sa += rho[al] * Da[al] * D[al][i];
                sb += rho[al] * Db[al] * D[al][i];
            }
            add_a -= eps[j] * (2.0 / dx) * sa;
            add_b -= eps[j] * (2.0 / dx) * sb;
            const double minv = 2.0 / (dx * rho[i]);
            ra[i] += add_a * minv;
            rb[i] += add_b * minv;
        }
    }
}

/** Nodal source: Q is added to both evolution equations of the RS
 * formulation but only to the velocity equation of the vw formulation. */
inline void add_source(const SchemeConfig& cfg, const State& st, double t, State& out) {
    const int nn = st.psi.basis.n();
    const bool rs = st.formulation == Formulation::RS;
    for (int j = 0; j < st.psi.mesh.N; ++j)
        for (int i = 0; i < nn; ++i) {
            const double q = cfg.source(st.psi.node_x(j, i), t);
            out.a(j, i) += q;
            if (rs) out.b(j, i) += q;
        }
}

inline State rhs_any(const SchemeConfig& cfg, const State& st, double t) {
    validate(cfg);
    const InterfaceTerms it = interface_terms(cfg.ec, st);
    State out(st.formulation, st.psi.mesh, st.psi.basis);
    const int p = st.psi.basis.order;
    switch (p) {
        case 0: conservative_rates<1>(cfg, st, it, out); break;
        case 1: conservative_rates<2>(cfg, st, it, out); break;
        case 2: conservative_rates<3>(cfg, st, it, out); break;
        case 3: conservative_rates<4>(cfg, st, it, out); break;
        default: throw std::invalid_argument("rhs: unsupported order");
    }
    if (cfg.mode == Mode::dissipative && (cfg.shock_C != 0.0 || cfg.viscosity_scale != 0.0)) {
        switch (p) {
            case 0: dissipative_corrections<1>(cfg, st, it, out); break;
            case 1: dissipative_corrections<2>(cfg, st, it, out); break;
            case 2: dissipative_corrections<3>(cfg, st, it, out); break;
            case 3: dissipative_corrections<4>(cfg, st, it, out); break;
        }
    }
    if (cfg.source) add_source(cfg, st, t, out);
    return out;
}

}  // namespace detail
}  // namespace vwdg
