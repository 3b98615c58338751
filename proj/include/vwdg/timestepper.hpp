/** \file timestepper.hpp
 * Luther's six-stage fifth-order Runge-Kutta method and the time marching
 * loop: fixed CFL step, exact landings on snapshot times and t_end, energy
 * recorded after every step, blow-up detection.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vwdg/diagnostics.hpp"
#include "vwdg/mesh.hpp"
#include "vwdg/wavespeed.hpp"

namespace vwdg {

/** Thrown when the state stops being finite during a march. */
struct BlowUpError : std::runtime_error {
    double t;     ///< Time after the offending step.
    int element;  ///< First element with a non-finite coefficient.
    BlowUpError(double t_, int element_)
        : std::runtime_error("solution blew up at t = " + std::to_string(t_) + " (element " +
                             std::to_string(element_) + ")"),
          t(t_),
          element(element_) {}
};

/** One step of Luther's fifth-order method. F is f(t, u) -> du/dt; U needs
 * value semantics with u + u and scalar * u. */
template <typename F, typename U>
U rk5_step(F&& f, double t, const U& u, double dt) {
    const double rt6 = std::sqrt(6.0);
    U k1 = f(t, u);
    U k2 = f(t + 4.0 / 11.0 * dt, u + (4.0 / 11.0 * dt) * k1);
    U k3 = f(t + 2.0 / 5.0 * dt, u + (dt / 50.0) * (9.0 * k1 + 11.0 * k2));
    U k4 = f(t + dt, u + (dt / 4.0) * (-11.0 * k2 + 15.0 * k3));
    U k5 = f(t + (6.0 - rt6) / 10.0 * dt,
             u + (dt / 600.0) * ((81.0 + 9.0 * rt6) * k1 + (255.0 - 55.0 * rt6) * k3 +
                                 (24.0 - 14.0 * rt6) * k4));
    U k6 = f(t + (6.0 + rt6) / 10.0 * dt,
             u + (dt / 600.0) * ((81.0 - 9.0 * rt6) * k1 + (255.0 + 55.0 * rt6) * k3 +
                                 (24.0 + 14.0 * rt6) * k4));
    return u + (dt / 36.0) * (4.0 * k1 + (16.0 + rt6) * k5 + (16.0 - rt6) * k6);
}

/** Time horizon and output instants of a march. */
struct TimeControls {
    double t_end = 0.0;
    double cfl_factor = 0.1;
    std::vector<double> snapshot_times;  ///< Instants to record; outside [0, t_end] ignored.
};

/** Nominal step cfl * dx / sup c, fixed over the whole run. */
inline double cfl_dt(const Mesh& mesh, const ElasticConstants& ec, double cfl_factor) {
    if (!(cfl_factor > 0.0)) throw std::invalid_argument("cfl_factor must be positive");
    return cfl_factor * mesh.dx / wave_speed_sup(ec);
}

/** True when t is one of the requested snapshot instants. */
inline bool is_snapshot_time(const TimeControls& tc, double t) {
    return std::find(tc.snapshot_times.begin(), tc.snapshot_times.end(), t) !=
           tc.snapshot_times.end();
}

/** State snapshot at a requested output time. */
struct Snapshot {
    double t;
    State state;
};

struct MarchResult {
    State state;  ///< Solution at t_end.
    EnergyTrace trace;
    std::vector<Snapshot> snapshots;
    long steps = 0;
    double dt = 0.0;  ///< Nominal step actually used.
};

/** Marches u' = f(t, u) from t = 0 to t_end with nominal step dt. Steps are
 * shortened to land exactly on every snapshot time and on t_end. The energy
 * trace records t = 0 and every accepted step. Throws BlowUpError when the
 * state stops being finite. */
template <typename F>
MarchResult march(F&& f, State st, const TimeControls& tc, double dt) {
    if (!(tc.t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

    // Landing times: requested snapshots inside the horizon plus t_end.
    std::vector<double> targets;
    for (double ts : tc.snapshot_times)
        if (ts >= 0.0 && ts <= tc.t_end) targets.push_back(ts);
    targets.push_back(tc.t_end);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    MarchResult out;
    out.dt = dt;
    out.trace.times.push_back(0.0);
    out.trace.energies.push_back(discrete_energy(st));

    double t = 0.0;
    std::size_t next = 0;
    if (targets[next] == 0.0) {
        if (is_snapshot_time(tc, 0.0)) out.snapshots.push_back({0.0, st});
        ++next;
    }
    while (t < tc.t_end) {
        const double target = targets[next];
        const bool lands = target - t <= dt * (1.0 + 1e-12);
        const double h = lands ? target - t : dt;
        st = rk5_step(f, t, st, h);
        t = lands ? target : t + dt;
        ++out.steps;
        out.trace.times.push_back(t);
        out.trace.energies.push_back(discrete_energy(st));
        if (!st.finite()) throw BlowUpError(t, st.first_bad_element());
        if (lands) {
            if (is_snapshot_time(tc, target)) out.snapshots.push_back({target, st});
            ++next;
        }
    }
    out.state = std::move(st);
    return out;
}

}  // namespace vwdg
