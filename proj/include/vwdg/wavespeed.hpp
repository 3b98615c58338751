/** \file wavespeed.hpp
 * The nematic wave speed c(psi) = sqrt(alpha cos^2 psi + beta sin^2 psi),
 * its derivative and its supremum.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vwdg {

/** The Frank elastic constants entering the wave speed. */
struct ElasticConstants {
    /** Splay constant alpha > 0. */
    double alpha;
    /** Twist/bend constant beta > 0. */
    double beta;
};

/** Validates alpha, beta > 0 (so that c is bounded away from zero). */
inline void validate(const ElasticConstants& ec) {
    if (!(ec.alpha > 0.0) || !(ec.beta > 0.0))
        throw std::invalid_argument("elastic constants must be positive");
}

/** The wave speed c(psi) = sqrt(alpha cos^2 psi + beta sin^2 psi). */
inline double wave_speed(const ElasticConstants& ec, double psi) {
    double cp = std::cos(psi), sp = std::sin(psi);
    return std::sqrt(ec.alpha * cp * cp + ec.beta * sp * sp);
}

/** The derivative c'(psi) = (beta - alpha) sin(psi) cos(psi) / c(psi),
 * implemented analytically (it enters the manufactured source term, where
 * smoothness matters for the observed convergence order). */
inline double wave_speed_prime(const ElasticConstants& ec, double psi) {
    return (ec.beta - ec.alpha) * std::sin(psi) * std::cos(psi) / wave_speed(ec, psi);
}

/** The supremum of c over all director angles, max(sqrt(alpha), sqrt(beta));
 * used by the CFL time-step rule. */
inline double wave_speed_sup(const ElasticConstants& ec) {
    return std::sqrt(std::max(ec.alpha, ec.beta));
}

}  // namespace vwdg
