/** \file mesh.hpp
 * Uniform 1D mesh, per-element nodal coefficient storage (Field), the
 * (a, b, psi) solution triple (State), and interface traces, jumps and
 * averages.
 *
 * Interfaces are indexed 0..N with interface m sitting between elements m-1
 * and m; on a periodic mesh interfaces 0 and N identify. Fields are plain
 * value containers so Runge--Kutta stage arithmetic is ordinary vector
 * arithmetic; RHS evaluation reads a State immutably and writes rates to a
 * distinct State.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vwdg/basis.hpp"

namespace vwdg {

/** A uniform mesh of N elements covering [x_left, x_right]. */
struct Mesh {
    /** Left domain boundary. */
    double x_left;
    /** Right domain boundary. */
    double x_right;
    /** Number of elements. */
    int N;
    /** Uniform element width (x_right - x_left) / N. */
    double dx;
    /** Whether the domain is periodic. */
    bool periodic;

    /** Center of element j (0-based). */
    double center(int j) const { return x_left + (j + 0.5) * dx; }
};

/** Builds a uniform mesh; throws std::invalid_argument on a degenerate
 * domain or N < 2 (a single element leaves no interior interface). */
inline Mesh make_mesh(double x_left, double x_right, int N, bool periodic = true) {
    if (!(x_right > x_left)) throw std::invalid_argument("mesh: x_right must exceed x_left");
    if (N < 2) throw std::invalid_argument("mesh: need at least two elements");
    return Mesh{x_left, x_right, N, (x_right - x_left) / N, periodic};
}

/** Nodal coefficients of one piecewise-polynomial scalar unknown.
 *
 * coeffs[j*(p+1) + k] holds f_j^(k), the value at node k of element j; the
 * element-local representation is f(x) = sum_k f_j^(k) l_k(eta_j(x)) with
 * eta_j(x) = 2 (x - x_j) / dx. */
struct Field {
    Mesh mesh;
    NodalBasis basis;
    std::vector<double> coeffs;

    Field() = default;
    Field(const Mesh& m, const NodalBasis& b)
        : mesh(m), basis(b), coeffs(static_cast<std::size_t>(m.N) * b.n(), 0.0) {}

    /** Coefficient f_j^(k). */
    double& operator()(int j, int k) { return coeffs[static_cast<std::size_t>(j) * basis.n() + k]; }
    double operator()(int j, int k) const {
        return coeffs[static_cast<std::size_t>(j) * basis.n() + k];
    }

    /** Physical location of node k of element j. */
    double node_x(int j, int k) const { return mesh.center(j) + 0.5 * mesh.dx * basis.nodes[k]; }

    /** Evaluates the element-j polynomial at reference coordinate xi. */
    double eval_ref(int j, double xi) const {
        double v = 0.0;
        for (int k = 0; k < basis.n(); ++k) v += (*this)(j, k) * eval_interpolant(basis, k, xi);
        return v;
    }

    /** Evaluates the field at a physical point x (clamped into the domain). */
    double eval(double x) const {
        int j = static_cast<int>(std::floor((x - mesh.x_left) / mesh.dx));
        if (j < 0) j = 0;
        if (j >= mesh.N) j = mesh.N - 1;
        double xi = 2.0 * (x - mesh.center(j)) / mesh.dx;
        return eval_ref(j, xi);
    }

    /** Value at the left edge of element j (nodal for GLL bases). */
    double edge_left(int j) const {
        double v = 0.0;
        for (int k = 0; k < basis.n(); ++k) v += (*this)(j, k) * basis.left[k];
        return v;
    }

    /** Value at the right edge of element j. */
    double edge_right(int j) const {
        double v = 0.0;
        for (int k = 0; k < basis.n(); ++k) v += (*this)(j, k) * basis.right[k];
        return v;
    }

    Field& operator+=(const Field& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    Field& operator*=(double s) {
        for (double& c : coeffs) c *= s;
        return *this;
    }
};

inline Field operator+(Field a, const Field& b) {
    a += b;
    return a;
}
inline Field operator*(double s, Field f) {
    f *= s;
    return f;
}

/** Samples a function g(x) at every mapped node (collocation projection);
 * exact for piecewise polynomials of degree <= p. Throws on non-finite
 * samples, naming the offending node. */
template <typename G>
Field project_nodal(const Mesh& mesh, const NodalBasis& basis, G&& g) {
    Field f(mesh, basis);
    for (int j = 0; j < mesh.N; ++j)
        for (int k = 0; k < basis.n(); ++k) {
            double v = g(f.node_x(j, k));
            if (!std::isfinite(v))
                throw std::invalid_argument("project_nodal: non-finite value at element " +
                                            std::to_string(j) + ", node " + std::to_string(k));
            f(j, k) = v;
        }
    return f;
}

/** Left and right traces (f^-, f^+) at interface m in 0..N.
 *
 * f^- is the limit from the element left of the interface, f^+ from the
 * right. On a periodic mesh interfaces 0 and N wrap around; on a bounded
 * mesh the ghost policy is constant extrapolation, so boundary jumps
 * vanish. */
inline std::pair<double, double> traces(const Field& f, int m) {
    const int N = f.mesh.N;
    if (m < 0 || m > N) throw std::invalid_argument("traces: interface index out of range");
    double minus, plus;
    if (m == 0)
        minus = f.mesh.periodic ? f.edge_right(N - 1) : f.edge_left(0);
    else
        minus = f.edge_right(m - 1);
    if (m == N)
        plus = f.mesh.periodic ? f.edge_left(0) : f.edge_right(N - 1);
    else
        plus = f.edge_left(m);
    return {minus, plus};
}

/** Jump [[f]] = f^+ - f^- at interface m. */
inline double jump(const Field& f, int m) {
    auto [minus, plus] = traces(f, m);
    return plus - minus;
}

/** Average (f^+ + f^-)/2 at interface m. */
inline double average(const Field& f, int m) {
    auto [minus, plus] = traces(f, m);
    return 0.5 * (plus + minus);
}

/** Tag distinguishing the two first-order reformulations. */
enum class Formulation {
    RS,  ///< Riemann invariants: a = R = psi_t + c psi_x, b = S = psi_t - c psi_x.
    VW   ///< Velocity/strain: a = v = psi_t, b = w = c psi_x.
};

/** The solution triple of one formulation on a common mesh and basis. */
struct State {
    Formulation formulation;
    Field a;    ///< R or v.
    Field b;    ///< S or w.
    Field psi;  ///< The director angle.

    State() : formulation(Formulation::RS) {}
    State(Formulation form, const Mesh& m, const NodalBasis& bas)
        : formulation(form), a(m, bas), b(m, bas), psi(m, bas) {}

    State& operator+=(const State& o) {
        a += o.a;
        b += o.b;
        psi += o.psi;
        return *this;
    }
    State& operator*=(double s) {
        a *= s;
        b *= s;
        psi *= s;
        return *this;
    }

    /** True if every coefficient of every field is finite. */
    bool finite() const {
        for (const Field* f : {&a, &b, &psi})
            for (double c : f->coeffs)
                if (!std::isfinite(c)) return false;
        return true;
    }

    /** Element index of the first non-finite coefficient, or -1. */
    int first_bad_element() const {
        for (const Field* f : {&a, &b, &psi})
            for (std::size_t i = 0; i < f->coeffs.size(); ++i)
                if (!std::isfinite(f->coeffs[i])) return static_cast<int>(i) / f->basis.n();
        return -1;
    }
};

inline State operator+(State x, const State& y) {
    x += y;
    return x;
}
inline State operator*(double s, State x) {
    x *= s;
    return x;
}

}  // namespace vwdg
