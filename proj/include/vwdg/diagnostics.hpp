/** \file diagnostics.hpp
 * Discrete energy, collocation L2 errors, convergence rates and related
 * run-time measurements.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "vwdg/mesh.hpp"

namespace vwdg {

/** Energy history (t_k, E_k); the first entry is the initial energy. */
struct EnergyTrace {
    std::vector<double> times;
    std::vector<double> energies;
};

/** Discrete energy of the state:
 *  (dx/8) sum rho (R^2 + S^2) for RS, (dx/4) sum rho (v^2 + w^2) for vw. */
inline double discrete_energy(const State& st) {
    const NodalBasis& B = st.psi.basis;
    const int nn = B.n();
    double acc = 0.0;
    for (int j = 0; j < st.psi.mesh.N; ++j)
        for (int k = 0; k < nn; ++k)
            acc += B.weights[k] * (st.a(j, k) * st.a(j, k) + st.b(j, k) * st.b(j, k));
    const double dx = st.psi.mesh.dx;
    return st.formulation == Formulation::RS ? 0.125 * dx * acc : 0.25 * dx * acc;
}

/** Collocation L2 norm of exact(x, t) - f over the mesh. */
inline double l2_error(const Field& f, const std::function<double(double, double)>& exact,
                       double t) {
    const NodalBasis& B = f.basis;
    const int nn = B.n();
    double acc = 0.0;
    for (int j = 0; j < f.mesh.N; ++j)
        for (int k = 0; k < nn; ++k) {
            const double d = exact(f.node_x(j, k), t) - f(j, k);
            acc += B.weights[k] * d * d;
        }
    return std::sqrt(0.5 * f.mesh.dx * acc);
}

/** Collocation L2 distance between the psi fields of two states. The norm is
 * taken on x's mesh; when the meshes and orders coincide the comparison is
 * nodal, otherwise y is evaluated through its polynomial representation. */
inline double l2_distance_psi(const State& x, const State& y) {
    const Field& f = x.psi;
    const Field& g = y.psi;
    const NodalBasis& B = f.basis;
    const int nn = B.n();
    const bool same_layout = f.mesh.N == g.mesh.N && f.mesh.x_left == g.mesh.x_left &&
                             f.mesh.x_right == g.mesh.x_right && f.basis.order == g.basis.order;
    double acc = 0.0;
    for (int j = 0; j < f.mesh.N; ++j)
        for (int k = 0; k < nn; ++k) {
            const double gv = same_layout ? g(j, k) : g.eval(f.node_x(j, k));
            const double d = gv - f(j, k);
            acc += B.weights[k] * d * d;
        }
    return std::sqrt(0.5 * f.mesh.dx * acc);
}

/** Successive dyadic rates log2(e_{i-1}/e_i). Throws on nonpositive or
 * non-finite errors; fewer than two entries yield an empty vector. */
inline std::vector<double> convergence_rates(const std::vector<double>& errors) {
    for (double e : errors)
        if (!(e > 0.0) || !std::isfinite(e))
            throw std::domain_error("convergence_rates: errors must be positive and finite");
    std::vector<double> rates;
    for (std::size_t i = 1; i < errors.size(); ++i)
        rates.push_back(std::log2(errors[i - 1] / errors[i]));
    return rates;
}

/** Location of the first upward crossing of `level` in the nodal data,
 * scanning left to right across all elements. Returns the linearly
 * interpolated abscissa, or NaN when the data never bracket the level. */
inline double first_crossing(const Field& f, double level) {
    const int nn = f.basis.n();
    double px = 0.0, pv = 0.0;
    bool have_prev = false;
    for (int j = 0; j < f.mesh.N; ++j)
        for (int k = 0; k < nn; ++k) {
            const double x = f.node_x(j, k), v = f(j, k);
            if (have_prev && pv < level && v >= level) {
                if (v == pv || x == px) return x;
                return px + (level - pv) / (v - pv) * (x - px);
            }
            px = x;
            pv = v;
            have_prev = true;
        }
    return std::nan("");
}

/** Maximum over all collocation nodes of |f_x| computed through the
 * differentiation matrix (identically zero for p = 0). */
inline double max_nodal_gradient(const Field& f) {
    const NodalBasis& B = f.basis;
    const int nn = B.n();
    const double scale = 2.0 / f.mesh.dx;
    double best = 0.0;
    for (int j = 0; j < f.mesh.N; ++j)
        for (int i = 0; i < nn; ++i) {
            double d = 0.0;
            for (int k = 0; k < nn; ++k) d += B.deriv[i][k] * f(j, k);
            best = std::max(best, std::abs(scale * d));
        }
    return best;
}

}  // namespace vwdg
