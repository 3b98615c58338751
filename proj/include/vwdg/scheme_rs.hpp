/** \file scheme_rs.hpp
 * Semi-discrete DG scheme for the Riemann-invariant formulation
 *
 *   R_t - c R_x = -S_t - c S_x  (split into the R and S evolution equations),
 *   psi_t = (R + S)/2,
 *
 * with R = psi_t + c psi_x and S = psi_t - c psi_x. The conservative variant
 * uses central fluxes and conserves the discrete energy
 * E = (dx/8) sum rho (R^2 + S^2) exactly in time-continuous form; the
 * dissipative variant adds upwind-style interface viscosity and
 * residual-based shock capturing.
 */

#pragma once

#include "vwdg/detail/rhs_impl.hpp"

namespace vwdg {

/** Time derivative of an RS state. Throws std::invalid_argument if the state
 * does not carry the RS formulation. */
inline State rhs_rs(const SchemeConfig& cfg, const State& st, double t) {
    if (st.formulation != Formulation::RS)
        throw std::invalid_argument("rhs_rs: state is not in RS form");
    return detail::rhs_any(cfg, st, t);
}

}  // namespace vwdg
