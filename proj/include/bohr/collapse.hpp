#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bohr/ode.hpp"
#include "bohr/orbit.hpp"

namespace bohr {

/// Radiated power of an accelerated charge: P = e^2 a^2 / (6 pi eps0 c^3).
inline Quantity larmor_power(const Quantity& a, const ConstantsSet& k) {
    detail::require_dim(a, dim::acceleration, "acceleration");
    if (a.value() < 0.0) throw domain_error("acceleration must be >= 0");
    return pow(k.e(), 2) * pow(a, 2) / (k.eps0() * pow(k.c(), 3) * (6.0 * pi));
}

/// Coulomb acceleration of the orbiting electron: a = e^2 Z / (4 pi eps0 m_e r^2).
inline Quantity coulomb_acceleration(int z, const Quantity& r, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_positive(r, dim::length, "radius");
    return pow(k.e(), 2) * double(z) / (k.eps0() * k.m_e() * pow(r, 2) * (4.0 * pi));
}

/// K in dr/dt = -K / r^2: K = e^4 Z / (12 pi^2 eps0^2 m_e^2 c^3), m^3/s.
inline Quantity inspiral_rate_constant(int z, const ConstantsSet& k) {
    detail::require_charge_number(z);
    return pow(k.e(), 4) * double(z) /
           (pow(k.eps0(), 2) * pow(k.m_e(), 2) * pow(k.c(), 3) * (12.0 * pi * pi));
}

/// Adiabatic inspiral rate of a classically radiating orbit, from
/// dE/dt = -P with E(r) of the bound orbit and Coulomb acceleration:
/// dr/dt = -e^4 Z / (12 pi^2 eps0^2 m_e^2 c^3 r^2). Strictly negative.
inline Quantity drdt(int z, const Quantity& r, const ConstantsSet& k) {
    detail::require_positive(r, dim::length, "radius");
    return -(inspiral_rate_constant(z, k) / pow(r, 2));
}

/// Inspiral setup. r_stop defaults to the v = c radius bound for z, the
/// smallest radius the non-relativistic treatment can reach; setting it
/// lower pushes orbital speeds past c and leaves the model's regime.
struct CollapseConfig {
    int z = 1;
    Quantity r0 = Quantity(1e-10, dim::length);
    std::optional<Quantity> r_stop;
    int max_steps = 100000;
    double rel_tol = 1e-6;
};

struct CollapseSample {
    double t_s = 0.0;
    double r_m = 0.0;
};

struct CollapseResult {
    Quantity collapse_time;                ///< s
    Quantity closed_form_time;             ///< s
    double residual = 0.0;                 ///< |ode - closed| / closed
    std::vector<CollapseSample> samples;   ///< strictly increasing t, decreasing r
    int steps = 0;
};

/// Integration ran out of steps; carries the partial trajectory.
struct convergence_error : error {
    convergence_error(std::string msg, CollapseResult partial_result)
        : error(std::move(msg)), partial(std::move(partial_result)) {}
    CollapseResult partial;
};

namespace detail {
inline Quantity resolve_r_stop(const CollapseConfig& cfg, const ConstantsSet& k) {
    return cfg.r_stop ? *cfg.r_stop : min_radius_bound(cfg.z, k);
}
inline void validate_collapse(const CollapseConfig& cfg, const Quantity& r_stop) {
    require_charge_number(cfg.z);
    require_positive(cfg.r0, dim::length, "r0");
    require_positive(r_stop, dim::length, "r_stop");
    if (!(cfg.rel_tol > 0.0 && cfg.rel_tol <= 1e-2))
        throw domain_error("rel_tol must lie in (0, 1e-2]");
    if (cfg.max_steps < 1) throw domain_error("max_steps must be >= 1");
}
}  // namespace detail

/// Exact integral of dr/dt = -K/r^2:
/// t = (r0^3 - r_stop^3) * 4 pi^2 eps0^2 m_e^2 c^3 / (e^4 Z) = (r0^3 - r_stop^3) / (3K).
/// The analytic oracle the ODE route is checked against.
inline Quantity closed_form_collapse_time(const CollapseConfig& cfg,
                                          const ConstantsSet& k) {
    const Quantity r_stop = detail::resolve_r_stop(cfg, k);
    detail::validate_collapse(cfg, r_stop);
    if (cfg.r0 < r_stop)
        throw domain_error("r0 must be >= r_stop");
    return (pow(cfg.r0, 3) - pow(r_stop, 3)) / (inspiral_rate_constant(cfg.z, k) * 3.0);
}

/// Adaptive integration of the inspiral from r0 down to r_stop. The
/// result carries the trajectory, the closed-form time and their
/// relative residual. Throws convergence_error when max_steps is
/// exhausted before reaching r_stop.
inline CollapseResult simulate_collapse(const CollapseConfig& cfg,
                                        const ConstantsSet& k) {
    const Quantity r_stop = detail::resolve_r_stop(cfg, k);
    detail::validate_collapse(cfg, r_stop);
    if (!(cfg.r0 > r_stop))
        throw domain_error("r0 must exceed r_stop");

    const double rate = inspiral_rate_constant(cfg.z, k).value();
    const double step_tol = cfg.rel_tol / 20.0;
    OdeResult ode = integrate_decreasing([rate](double r) { return -rate / (r * r); },
                                         cfg.r0.value(), r_stop.value(), step_tol,
                                         cfg.max_steps);

    CollapseResult result;
    result.steps = ode.steps;
    result.samples.reserve(ode.samples.size());
    for (const OdeSample& s : ode.samples)
        result.samples.push_back({s.t, s.y});
    result.collapse_time = Quantity(ode.samples.back().t, dim::time);
    result.closed_form_time = closed_form_collapse_time(cfg, k);
    result.residual = relative_error(result.collapse_time, result.closed_form_time);

    if (!ode.reached)
        throw convergence_error("collapse integration exceeded max_steps",
                                std::move(result));
    return result;
}

}  // namespace bohr
