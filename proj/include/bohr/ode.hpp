#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "bohr/units.hpp"

namespace bohr {

/// One accepted point of a scalar trajectory.
struct OdeSample {
    double t = 0.0;
    double y = 0.0;
};

struct OdeResult {
    std::vector<OdeSample> samples;  ///< includes the initial point
    int steps = 0;                   ///< attempted steps (accepted + rejected)
    bool reached = false;            ///< hit y_stop before running out of steps
};

/// Adaptive Cash-Karp 4(5) integration of an autonomous scalar ODE
/// dy/dt = f(y) with strictly negative f, advancing from y0 down to
/// y_stop. Per-step error is held below step_rel_tol * |y|; the final
/// step is shortened to land on y_stop (relative landing slack 1e-10).
template <typename Rhs>
OdeResult integrate_decreasing(Rhs&& f, double y0, double y_stop,
                               double step_rel_tol, int max_steps) {
    if (!(y0 > y_stop) || !(y_stop > 0.0))
        throw domain_error("integrate_decreasing needs y0 > y_stop > 0");
    if (!(step_rel_tol > 0.0) || max_steps < 1)
        throw domain_error("bad integrator controls");

    // Cash-Karp tableau
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 3.0 / 10, a42 = -9.0 / 10, a43 = 6.0 / 5;
    constexpr double a51 = -11.0 / 54, a52 = 5.0 / 2, a53 = -70.0 / 27,
                     a54 = 35.0 / 27;
    constexpr double a61 = 1631.0 / 55296, a62 = 175.0 / 512, a63 = 575.0 / 13824,
                     a64 = 44275.0 / 110592, a65 = 253.0 / 4096;
    constexpr double b1 = 37.0 / 378, b3 = 250.0 / 621, b4 = 125.0 / 594,
                     b6 = 512.0 / 1771;
    constexpr double d1 = b1 - 2825.0 / 27648, d3 = b3 - 18575.0 / 48384,
                     d4 = b4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                     d6 = b6 - 1.0 / 4;
    constexpr double landing_slack = 1e-10;

    OdeResult out;
    double t = 0.0, y = y0;
    out.samples.push_back({t, y});

    double dt = 1e-3 * y0 / std::fabs(f(y0));

    while (out.steps < max_steps) {
        ++out.steps;

        const double k1 = f(y);
        const double k2 = f(y + dt * a21 * k1);
        const double k3 = f(y + dt * (a31 * k1 + a32 * k2));
        const double k4 = f(y + dt * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 =
            f(y + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));

        const double y_new = y + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b6 * k6);
        const double err =
            std::fabs(dt * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6));
        const double tolerance = step_rel_tol * std::fabs(y);

        if (err > tolerance) {
            dt *= std::max(0.2, 0.9 * std::pow(tolerance / err, 0.25));
            continue;
        }
        if (y_new < y_stop * (1.0 - landing_slack)) {
            // overshot the floor: shorten toward the crossing and retry
            dt *= std::max(0.05, (y - y_stop) / (y - y_new));
            continue;
        }

        t += dt;
        y = std::max(y_new, y_stop);
        if (t == out.samples.back().t)
            out.samples.back().y = y;  // landing step below time resolution
        else
            out.samples.push_back({t, y});
        if (y <= y_stop * (1.0 + landing_slack)) {
            out.reached = true;
            return out;
        }

        dt *= std::min(5.0, 0.9 * std::pow(tolerance / std::max(err, 1e-300), 0.2));
        // never step past the floor estimate by more than ~2x
        const double to_floor = (y - y_stop) / std::fabs(f(y));
        dt = std::min(dt, 2.0 * to_floor);
    }
    return out;  // reached == false; caller decides how to report
}

}  // namespace bohr
