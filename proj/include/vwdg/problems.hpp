/** \file problems.hpp
 * Benchmark problems: manufactured solution, Gaussian hump, travelling wave.
 * Each comes as a ProblemSpec bundling domain, elastic constants, initial
 * samplers and (where known) the exact solution and source term.
 */

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vwdg/mesh.hpp"
#include "vwdg/wavespeed.hpp"

namespace vwdg {

/** A benchmark problem. psi0/psi1/psix0 sample the initial angle, angular
 * velocity and slope; singular_init marks problems whose slope must be
 * sampled through the clamped travelling-wave builder instead. */
struct ProblemSpec {
    std::string name;
    double x_left = 0.0, x_right = 1.0;
    bool periodic = true;
    ElasticConstants ec{0.5, 1.5};
    std::function<double(double, double)> source;     ///< Q(x, t); empty when none.
    std::function<double(double, double)> exact_psi;  ///< psi(x, t); empty when unknown.
    std::function<double(double)> psi0, psi1, psix0;
    bool singular_init = false;
};

/** Source term that makes psi = sin(x - t) an exact solution:
 *  Q = sin(x-t) (c^2 - 1) - c c' cos^2(x-t), evaluated at psi = sin(x-t). */
inline double manufactured_source(const ElasticConstants& ec, double x, double t) {
    const double psi = std::sin(x - t);
    const double co = std::cos(x - t);
    const double c = wave_speed(ec, psi);
    const double cp = wave_speed_prime(ec, psi);
    return psi * (c * c - 1.0) + (-c * cp * co * co);
}

/** psi = sin(x - t) on [0, 2 pi], periodic, with the matching source. */
inline ProblemSpec manufactured_problem(const ElasticConstants& ec) {
    validate(ec);
    ProblemSpec pb;
    pb.name = "manufactured";
    pb.x_left = 0.0;
    pb.x_right = 6.0 * std::numbers::pi;
    pb.ec = ec;
    pb.source = [ec](double x, double t) { return manufactured_source(ec, x, t); };
    pb.exact_psi = [](double x, double t) { return std::sin(x - t); };
    pb.psi0 = [](double x) { return std::sin(x); };
    pb.psi1 = [](double x) { return -std::cos(x); };
    pb.psix0 = [](double x) { return std::cos(x); };
    return pb;
}

/** Gaussian hump psi0 = pi/4 + exp(-x^2) on [-30, 30], launched as a purely
 * right-moving disturbance: psi1 = -c(psi0) psi0_x. */
inline ProblemSpec gaussian_problem(const ElasticConstants& ec) {
    validate(ec);
    ProblemSpec pb;
    pb.name = "gaussian";
    pb.x_left = -30.0;
    pb.x_right = 30.0;
    pb.ec = ec;
    pb.psi0 = [](double x) { return 0.25 * std::numbers::pi + std::exp(-x * x); };
    pb.psix0 = [](double x) { return -2.0 * x * std::exp(-x * x); };
    pb.psi1 = [ec, p0 = pb.psi0, px = pb.psix0](double x) {
        return -wave_speed(ec, p0(x)) * px(x);
    };
    return pb;
}

/** Exact travelling-wave angle: 0 ahead of the front, pi behind, and the
 * middle branch acos(1 - 2 y), y = x - sqrt(alpha) t, in between. The
 * closure does not wrap around the periodic domain. */
inline double travelling_psi(const ElasticConstants& ec, double x, double t) {
    const double y = x - std::sqrt(ec.alpha) * t;
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return std::numbers::pi;
    return std::acos(1.0 - 2.0 * y);
}

/** Clamped nodal sampling of the travelling-wave slope
 *  psi_x = 1/sqrt(y - y^2) on 0 < y < 1, zero outside. The slope is
 *  integrable but unbounded at y = 0 and y = 1; nodes landing on a break
 *  (within 2e-12) take the value of the nearest regular node of the same
 *  element so the projected data stay finite. */
inline Field travelling_psix0(const Mesh& mesh, const NodalBasis& basis,
                              const ElasticConstants& ec, double t = 0.0) {
    constexpr double delta = 1e-12;
    constexpr double snap = 2e-12;
    const double shift = std::sqrt(ec.alpha) * t;
    Field f(mesh, basis);
    const int nn = basis.n();
    for (int j = 0; j < mesh.N; ++j) {
        bool singular[4] = {false, false, false, false};
        for (int k = 0; k < nn; ++k) {
            const double y = f.node_x(j, k) - shift;
            const double q = y - y * y;
            if (y > 0.0 && y < 1.0 && q > delta) {
                f(j, k) = 1.0 / std::sqrt(q);
            } else if (std::abs(y) <= snap || std::abs(y - 1.0) <= snap) {
                singular[k] = true;  // fixed up below
            } else {
                f(j, k) = 0.0;
            }
        }
        for (int k = 0; k < nn; ++k) {
            if (!singular[k]) continue;
            f(j, k) = 0.0;
            for (int d = 1; d < nn; ++d) {
                const int lo = k - d, hi = k + d;
                if (lo >= 0 && !singular[lo]) {
                    f(j, k) = f(j, lo);
                    break;
                }
                if (hi < nn && !singular[hi]) {
                    f(j, k) = f(j, hi);
                    break;
                }
            }
        }
    }
    return f;
}

/** Travelling wave of speed sqrt(alpha) on [-2, 4], periodic. Requires
 * alpha != beta. */
inline ProblemSpec travelling_problem(const ElasticConstants& ec) {
    validate(ec);
    if (ec.alpha == ec.beta)
        throw std::invalid_argument("travelling wave requires alpha != beta");
    ProblemSpec pb;
    pb.name = "travelling";
    pb.x_left = -2.0;
    pb.x_right = 4.0;
    pb.ec = ec;
    pb.exact_psi = [ec](double x, double t) { return travelling_psi(ec, x, t); };
    pb.psi0 = [ec](double x) { return travelling_psi(ec, x, 0.0); };
    pb.singular_init = true;  // psi1 and psix0 come from the clamped builder
    return pb;
}

/** Assembles the evolved variables from nodal psi0, psi1 = psi_t(0) and
 * psix0 = psi_x(0): RS gets (R, S) = (psi1 +- c psi_x), vw gets
 * (v, w) = (psi1, c psi_x). */
inline State to_state_nodal(Formulation form, const ElasticConstants& ec, const Field& psi0,
                            const Field& psi1, const Field& psix0) {
    State st(form, psi0.mesh, psi0.basis);
    st.psi = psi0;
    const int nn = psi0.basis.n();
    for (int j = 0; j < psi0.mesh.N; ++j)
        for (int k = 0; k < nn; ++k) {
            const double w = wave_speed(ec, psi0(j, k)) * psix0(j, k);
            if (form == Formulation::RS) {
                st.a(j, k) = psi1(j, k) + w;
                st.b(j, k) = psi1(j, k) - w;
            } else {
                st.a(j, k) = psi1(j, k);
                st.b(j, k) = w;
            }
        }
    return st;
}

/** Projected initial state of a problem in the requested formulation. */
inline State initial_state(const ProblemSpec& pb, Formulation form, const Mesh& mesh,
                           const NodalBasis& basis) {
    const Field psi0 = project_nodal(mesh, basis, pb.psi0);
    Field psi1(mesh, basis), psix(mesh, basis);
    if (pb.singular_init) {
        psix = travelling_psix0(mesh, basis, pb.ec);
        const double s = std::sqrt(pb.ec.alpha);
        for (std::size_t i = 0; i < psix.coeffs.size(); ++i) psi1.coeffs[i] = -s * psix.coeffs[i];
    } else {
        psi1 = project_nodal(mesh, basis, pb.psi1);
        psix = project_nodal(mesh, basis, pb.psix0);
    }
    return to_state_nodal(form, pb.ec, psi0, psi1, psix);
}

/** Problem factory by name; throws std::invalid_argument on unknown names. */
inline ProblemSpec make_problem(const std::string& name, const ElasticConstants& ec) {
    if (name == "manufactured") return manufactured_problem(ec);
    if (name == "gaussian") return gaussian_problem(ec);
    if (name == "travelling") return travelling_problem(ec);
    throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace vwdg
