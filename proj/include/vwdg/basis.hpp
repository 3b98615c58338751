/** \file basis.hpp
 * Gauss--Lobatto--Legendre (GLL) nodal basis data for polynomial orders
 * p = 0..3: nodes, quadrature weights, Lagrangian interpolants and the
 * derivative matrix D[i][k] = l_k'(xi_i).
 *
 * The bases are hard-coded rather than computed from Legendre polynomials at
 * startup: only p <= 3 is supported, and storing the exact surd expressions
 * keeps the matrices roundoff-clean, which the discrete energy identities
 * rely on.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace vwdg {

/** Maximum supported polynomial order. */
inline constexpr int max_order = 3;

/** Nodal GLL basis for one polynomial order p in {0,1,2,3}.
 *
 * Only the first p+1 entries of each array are meaningful. The basis is
 * immutable after construction and safe for concurrent reads. */
struct NodalBasis {
    /** The polynomial order p. */
    int order;
    /** The GLL nodes xi_0 < ... < xi_p on [-1,1]. */
    std::array<double, max_order + 1> nodes;
    /** The quadrature weights rho_0, ..., rho_p (they sum to 2). */
    std::array<double, max_order + 1> weights;
    /** The derivative matrix, deriv[i][k] = l_k'(xi_i). */
    std::array<std::array<double, max_order + 1>, max_order + 1> deriv;
    /** Interpolant values at the left element edge, left[i] = l_i(-1). */
    std::array<double, max_order + 1> left;
    /** Interpolant values at the right element edge, right[i] = l_i(+1). */
    std::array<double, max_order + 1> right;

    /** The number of nodes, p+1. */
    int n() const { return order + 1; }
};

/** Builds the hard-coded GLL basis of order p.
 *
 * Throws std::invalid_argument for p outside {0,1,2,3}. */
inline NodalBasis make_basis(int p) {
    NodalBasis b{};
    b.order = p;
    switch (p) {
        case 0:
            b.nodes = {0.0};
            b.weights = {2.0};
            b.deriv[0][0] = 0.0;
            // The single interpolant is the constant 1.
            b.left = {1.0};
            b.right = {1.0};
            return b;
        case 1:
            b.nodes = {-1.0, 1.0};
            b.weights = {1.0, 1.0};
            b.deriv[0] = {-0.5, 0.5};
            b.deriv[1] = {-0.5, 0.5};
            break;
        case 2:
            b.nodes = {-1.0, 0.0, 1.0};
            b.weights = {1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0};
            b.deriv[0] = {-1.5, 2.0, -0.5};
            b.deriv[1] = {-0.5, 0.0, 0.5};
            b.deriv[2] = {0.5, -2.0, 1.5};
            break;
        case 3: {
            const double q = std::sqrt(0.2);  // sqrt(1/5)
            const double r5 = std::sqrt(5.0);
            b.nodes = {-1.0, -q, q, 1.0};
            b.weights = {1.0 / 6.0, 5.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0};
            b.deriv[0] = {-3.0, 5.0 * (r5 + 1.0) / 4.0, -5.0 * (r5 - 1.0) / 4.0, 0.5};
            b.deriv[1] = {-(r5 + 1.0) / 4.0, 0.0, r5 / 2.0, (1.0 - r5) / 4.0};
            b.deriv[2] = {(r5 - 1.0) / 4.0, -r5 / 2.0, 0.0, (r5 + 1.0) / 4.0};
            b.deriv[3] = {-0.5, 5.0 * (r5 - 1.0) / 4.0, -5.0 * (r5 + 1.0) / 4.0, 3.0};
            break;
        }
        default:
            throw std::invalid_argument("make_basis: unsupported order " + std::to_string(p));
    }
    // GLL nodes include the end points for p >= 1, so the edge values of the
    // interpolants follow from the cardinal property.
    for (int i = 0; i <= p; ++i) {
        b.left[i] = (i == 0) ? 1.0 : 0.0;
        b.right[i] = (i == p) ? 1.0 : 0.0;
    }
    return b;
}

/** Evaluates the Lagrangian interpolant l_k at a point xi.
 *
 * The product formula is exact for any xi; points outside [-1,1] evaluate
 * the polynomial extension. */
inline double eval_interpolant(const NodalBasis& b, int k, double xi) {
    double v = 1.0;
    for (int j = 0; j < b.n(); ++j) {
        if (j == k) continue;
        v *= (xi - b.nodes[j]) / (b.nodes[k] - b.nodes[j]);
    }
    return v;
}

/** GLL quadrature of nodal values over the reference element [-1,1]:
 * sum_a rho_a vals[a]. Exact for polynomials of degree <= max(2p-1, 0). */
inline double quad_ref(const NodalBasis& b, const double* vals) {
    double s = 0.0;
    for (int a = 0; a < b.n(); ++a) s += b.weights[a] * vals[a];
    return s;
}

}  // namespace vwdg
