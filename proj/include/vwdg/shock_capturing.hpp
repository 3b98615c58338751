/** \file shock_capturing.hpp
 * Residual-based artificial viscosity for the dissipative schemes.
 *
 * The element viscosity is
 *
 *   eps_j = dx * C * Res_j / (grad_j + dx^theta)
 *
 * where Res_j is the collocation L2 norm of the energy-balance residual
 *
 *   Res = d/dt (a^2 + b^2) - d/dx g,   g = c (a^2 - b^2)  (RS)
 *                                      g = 2 c a b        (vw)
 *
 * evaluated with the *conservative* part of the rates only: the provisional
 * rates must exclude interface viscosity, shock terms and any manufactured
 * source, otherwise eps picks up an O(dx) floor that destroys the design
 * order of the smooth-solution rates.
 *
 * The raw coefficient is additionally gated by a dimensionless activation
 * threshold: eps_j is zero unless the indicator ratio Res_j/(grad_j+dx^theta)
 * exceeds shock_activation.  On smooth solutions the ratio is of truncation
 * size while near a gradient blow-up it is O(|state|), so the gate separates
 * the two regimes.  Without it the viscosity latches onto the scheme's own
 * discretization error: the elementwise diffusion term has no interface flux,
 * so even a truncation-sized eps injects endpoint-localized perturbations,
 * which enlarge the residual, which raises eps, in a loop whose gain grows
 * under mesh refinement.  The gate keeps eps identically zero on resolved
 * solutions, which is what the smooth-problem convergence orders require.
 *
 * The coefficient is finally capped at shock_cap * c_sup * dx: the element
 * diffusion is integrated explicitly, so eps beyond the upwind scale only
 * smears while violating the diffusive step restriction.
 */

#pragma once

#include <cmath>

#include "vwdg/mesh.hpp"
#include "vwdg/scheme_common.hpp"

namespace vwdg {

/** What the residual indicator needs: the state and its provisional
 * (conservative-part-only) time derivatives. */
struct ResidualInputs {
    const State* state = nullptr;
    const Field* a_rate = nullptr;
    const Field* b_rate = nullptr;
    ElasticConstants ec{0.5, 1.5};
};

/** Collocation L2 norm of the energy residual on element j. */
inline double element_residual_norm(const ResidualInputs& in, int j) {
    const State& st = *in.state;
    const NodalBasis& B = st.psi.basis;
    const int nn = B.n();
    const double dx = st.psi.mesh.dx;
    const bool rs = st.formulation == Formulation::RS;

    double g[4];
    for (int al = 0; al < nn; ++al) {
        const double c = detail::speed_of(in.ec, st.psi(j, al));
        const double a = st.a(j, al), b = st.b(j, al);
        g[al] = rs ? c * (a * a - b * b) : 2.0 * c * a * b;
    }
    double acc = 0.0;
    for (int al = 0; al < nn; ++al) {
        double dg = 0.0;
        for (int k = 0; k < nn; ++k) dg += B.deriv[al][k] * g[k];
        const double res = 2.0 * (st.a(j, al) * (*in.a_rate)(j, al) +
                                  st.b(j, al) * (*in.b_rate)(j, al)) -
                           (2.0 / dx) * dg;
        acc += B.weights[al] * res * res;
    }
    return std::sqrt(0.5 * dx * acc);
}

/** Collocation L2 norm of (a_x, b_x) on element j. */
inline double element_grad_norm(const State& st, int j) {
    const NodalBasis& B = st.psi.basis;
    const int nn = B.n();
    const double dx = st.psi.mesh.dx;
    double acc = 0.0;
    for (int al = 0; al < nn; ++al) {
        double da = 0.0, db = 0.0;
        for (int k = 0; k < nn; ++k) {
            da += B.deriv[al][k] * st.a(j, k);
            db += B.deriv[al][k] * st.b(j, k);
        }
        acc += B.weights[al] * (da * da + db * db);
    }
    return std::sqrt((2.0 / dx) * acc);
}

/** Element viscosity coefficient eps_j >= 0. */
inline double epsilon(const SchemeConfig& cfg, const ResidualInputs& in, int j) {
    if (cfg.shock_C == 0.0) return 0.0;
    const double dx = in.state->psi.mesh.dx;
    const double res = element_residual_norm(in, j);
    const double grad = element_grad_norm(*in.state, j);
    const double ratio = res / (grad + std::pow(dx, cfg.shock_theta));
    if (ratio < cfg.shock_activation) return 0.0;
    return std::min(dx * cfg.shock_C * ratio, cfg.shock_cap * wave_speed_sup(cfg.ec) * dx);
}

}  // namespace vwdg
