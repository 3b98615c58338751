/** \file scheme_vw.hpp
 * Semi-discrete DG scheme for the velocity/strain formulation
 *
 *   v_t = c w_x + c_x w,   w_t = c v_x,   psi_t = v,
 *
 * with v = psi_t and w = c(psi) psi_x. The conservative variant uses central
 * fluxes and conserves E = (dx/4) sum rho (v^2 + w^2) exactly in
 * time-continuous form; the dissipative variant adds interface viscosity and
 * residual-based shock capturing.
 */

#pragma once

#include "vwdg/detail/rhs_impl.hpp"

namespace vwdg {

/** Time derivative of a vw state. Throws std::invalid_argument if the state
 * does not carry the vw formulation. */
inline State rhs_vw(const SchemeConfig& cfg, const State& st, double t) {
    if (st.formulation != Formulation::VW)
        throw std::invalid_argument("rhs_vw: state is not in vw form");
    return detail::rhs_any(cfg, st, t);
}

/** Dispatch on the state's formulation tag. */
inline State rhs(const SchemeConfig& cfg, const State& st, double t) {
    return detail::rhs_any(cfg, st, t);
}

}  // namespace vwdg
