/** \file scheme_common.hpp
 * Scheme configuration and the assembly kernels shared by the RS and vw
 * right-hand sides.
 *
 * All integrals use GLL collocation quadrature: with the diagonal mass
 * matrix (dx/2) rho_i, the two volume operators per element are
 *
 *   V2(c,f,i) = sum_a rho_a c_a f_a D_ai   ~ integral of c f l_i'
 *   V3(c,f,i) = rho_i c_i (Df)_i           ~ integral of c f_x l_i
 *
 * which are discrete transposes of each other; the energy identities of the
 * schemes rest on exactly this pairing, so the assemblies below transcribe
 * the weak forms term-for-term instead of simplifying algebraically.
 */

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "vwdg/mesh.hpp"
#include "vwdg/wavespeed.hpp"

namespace vwdg {

/** Energy behaviour of the semi-discrete scheme. */
enum class Mode { conservative, dissipative };

/** Parameters of one semi-discrete scheme. */
struct SchemeConfig {
    /** Elastic constants defining the wave speed. */
    ElasticConstants ec{0.5, 1.5};
    /** Conservative (central flux) or dissipative (viscosity + shock capturing). */
    Mode mode = Mode::conservative;
    /** Shock-capturing constant C >= 0. */
    double shock_C = 0.1;
    /** Shock-capturing exponent theta >= 1/2. */
    double shock_theta = 1.0;
    /** Dimensionless activation threshold for the shock indicator: eps_j is
     * zero unless Res_j/(grad_j + dx^theta) >= shock_activation.  Smooth
     * solutions sit at truncation-sized ratios, gradient blow-ups at
     * O(|state|), so the default separates the regimes; 0 disables gating. */
    double shock_activation = 1.0;
    /** Stability cap on the element viscosity in units of c_sup*dx:
     * eps_j <= shock_cap * c_sup * dx.  The elementwise diffusion term is
     * integrated explicitly, so eps must respect the diffusive step
     * restriction; with dt = cfl*dx/c_sup the stage stability number is
     * 4*cfl*shock_cap*mu_p (mu_3 ~ 18.6), and 0.2 keeps it inside the
     * stability region for cfl <= 0.1. */
    double shock_cap = 0.2;
    /** Scale on the interface viscosity s[[.]]; 1 is the scheme as written,
     * 0 disables it (diagnostic knob used by the energy tests). */
    double viscosity_scale = 1.0;
    /** Optional manufactured source Q(x, t). */
    std::function<double(double, double)> source;
};

/** Validates the shock-capturing parameters. */
inline void validate(const SchemeConfig& cfg) {
    validate(cfg.ec);
    if (!(cfg.shock_C >= 0.0)) throw std::invalid_argument("shock_C must be nonnegative");
    if (!(cfg.shock_theta >= 0.5)) throw std::invalid_argument("shock_theta must be >= 1/2");
    if (!(cfg.shock_activation >= 0.0))
        throw std::invalid_argument("shock_activation must be nonnegative");
    if (!(cfg.shock_cap >= 0.0)) throw std::invalid_argument("shock_cap must be nonnegative");
}

namespace detail {

/** Wave speed evaluated from sin(psi) alone: c^2 = alpha + (beta - alpha) sin^2. */
inline double speed_of(const ElasticConstants& ec, double psi) {
    double sp = std::sin(psi);
    return std::sqrt(ec.alpha + (ec.beta - ec.alpha) * sp * sp);
}

/** Per-interface traces and speeds, indexed 0..N (periodic meshes wrap). */
struct InterfaceTerms {
    std::vector<double> cbar;  ///< Average of the two c traces.
    std::vector<double> s;     ///< Maximal local wave speed max(c-, c+).
    std::vector<double> am, ap, bm, bp;  ///< Traces of the a and b fields.

    double abar(int m) const { return 0.5 * (am[m] + ap[m]); }
    double bbar(int m) const { return 0.5 * (bm[m] + bp[m]); }
    double ajump(int m) const { return ap[m] - am[m]; }
    double bjump(int m) const { return bp[m] - bm[m]; }
};

inline InterfaceTerms interface_terms(const ElasticConstants& ec, const State& st) {
    const int N = st.psi.mesh.N;
    InterfaceTerms it;
    it.cbar.resize(N + 1);
    it.s.resize(N + 1);
    it.am.resize(N + 1);
    it.ap.resize(N + 1);
    it.bm.resize(N + 1);
    it.bp.resize(N + 1);
    for (int m = 0; m <= N; ++m) {
        auto [pm, pp] = traces(st.psi, m);
        double cm = speed_of(ec, pm), cp = speed_of(ec, pp);
        it.cbar[m] = 0.5 * (cm + cp);
        it.s[m] = std::max(cm, cp);
        std::tie(it.am[m], it.ap[m]) = traces(st.a, m);
        std::tie(it.bm[m], it.bp[m]) = traces(st.b, m);
    }
    return it;
}

/** Conservative (central flux) rates for either formulation, i.e. the phase-1
 * rates: no interface viscosity, no shock capturing, no source. NN = p+1 is a
 * compile-time constant so the small dense loops unroll. */
template <int NN>
void conservative_rates(const SchemeConfig& cfg, const State& st, const InterfaceTerms& it,
                        State& out) {
    const Mesh& mesh = st.psi.mesh;
    const NodalBasis& B = st.psi.basis;
    const double dx = mesh.dx;
    const bool rs = st.formulation == Formulation::RS;

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
        const double* ps = &st.psi.coeffs[static_cast<std::size_t>(j) * NN];
        double* ra = &out.a.coeffs[static_cast<std::size_t>(j) * NN];
        double* rb = &out.b.coeffs[static_cast<std::size_t>(j) * NN];
        double* rp = &out.psi.coeffs[static_cast<std::size_t>(j) * NN];

        double cn[NN], Da[NN], Db[NN], ua[NN], ub[NN];
        for (int al = 0; al < NN; ++al) cn[al] = speed_of(cfg.ec, ps[al]);
        for (int i = 0; i < NN; ++i) {
            double da = 0.0, db = 0.0;
            for (int k = 0; k < NN; ++k) {
                da += D[i][k] * a[k];
                db += D[i][k] * b[k];
            }
            Da[i] = da;
            Db[i] = db;
        }
        for (int al = 0; al < NN; ++al) {
            ua[al] = rho[al] * cn[al] * a[al];
            ub[al] = rho[al] * cn[al] * b[al];
        }

        const int L = j, R = j + 1;  // interface indices
        for (int i = 0; i < NN; ++i) {
            double V2a = 0.0, V2b = 0.0;
            for (int al = 0; al < NN; ++al) {
                V2a += ua[al] * D[al][i];
                V2b += ub[al] * D[al][i];
            }
            const double V3a = rho[i] * cn[i] * Da[i];
            const double V3b = rho[i] * cn[i] * Db[i];
            double acc_a, acc_b;
            if (rs) {
                // eq. R: -V2(c,R) + 1/2 (V2+V3)(c,R) - 1/2 (V2+V3)(c,S) + fluxes
                acc_a = 0.5 * (V3a - V2a) - 0.5 * (V3b + V2b);
                acc_a += er[i] * (it.cbar[R] * it.abar(R) - 0.5 * it.cbar[R] * it.am[R] +
                                  0.5 * it.cbar[R] * it.bm[R]);
                acc_a += el[i] * (-it.cbar[L] * it.abar(L) + 0.5 * it.cbar[L] * it.ap[L] -
                                  0.5 * it.cbar[L] * it.bp[L]);
                // eq. S: +V2(c,S) + 1/2 (V2+V3)(c,R) - 1/2 (V2+V3)(c,S) + fluxes
                acc_b = -0.5 * (V3b - V2b) + 0.5 * (V3a + V2a);
                acc_b += er[i] * (-it.cbar[R] * it.bbar(R) - 0.5 * it.cbar[R] * it.am[R] +
                                  0.5 * it.cbar[R] * it.bm[R]);
                acc_b += el[i] * (it.cbar[L] * it.bbar(L) + 0.5 * it.cbar[L] * it.ap[L] -
                                  0.5 * it.cbar[L] * it.bp[L]);
                rp[i] = 0.5 * (a[i] + b[i]);
            } else {
                // eq. v: -V2(c,w) + (V2+V3)(c,w) + fluxes
                acc_a = -V2b + (V2b + V3b);
                acc_a += er[i] * (it.cbar[R] * it.bbar(R) - it.cbar[R] * it.bm[R]);
                acc_a += el[i] * (-it.cbar[L] * it.bbar(L) + it.cbar[L] * it.bp[L]);
                // eq. w: -V2(c,v) + fluxes
                acc_b = -V2a;
                acc_b += er[i] * (it.cbar[R] * it.abar(R));
                acc_b += el[i] * (-it.cbar[L] * it.abar(L));
                rp[i] = a[i];
            }
            const double minv = 2.0 / (dx * rho[i]);
            ra[i] = acc_a * minv;
            rb[i] = acc_b * minv;
        }
    }
}

}  // namespace detail
}  // namespace vwdg
