#pragma once

#include "bohr/orbit.hpp"

namespace bohr {

// The derivation this module implements, in one paragraph: a circular
// orbit has |E| = m v^2 / 2 and v = 2 pi r f, so |E| = 2 pi^2 m r^2 f^2
// and d|E|/df at fixed r is 4 pi^2 m r^2 f = 2 pi (m v r) = 2 pi L. On
// the radiation side Planck quantization gives E = n h nu, so dE/dnu =
// n h. Identifying nu with the orbital frequency f and equating the two
// derivatives yields L = n h / (2 pi) -- angular-momentum quantization
// as a consequence of energy quantization, with no extra postulate.
//
// Note the identification is between the *derivatives* only: at the
// n-th orbit h f equals 2|E_n|, not |E_n|. The textbook route reaches
// the same rule by matching the rotator's energy against quantized
// oscillator levels; that alternative is not modeled here.

/// Signed total orbit energy from the speed alone: E = -m v^2 / 2
/// (force balance eliminates the radius). Bound orbits require
/// 0 <= v < c.
inline Quantity total_energy_from_speed(const Quantity& v, const ConstantsSet& k) {
    detail::require_dim(v, dim::speed, "speed");
    if (v.value() < 0.0) throw domain_error("speed must be >= 0");
    if (v >= k.c()) throw domain_error("speed must be below c");
    return k.m_e() * pow(v, 2) * -0.5;
}

/// Magnitude form m v^2 / 2 of the same energy; the sign-free variant
/// the frequency-form algebra below works with.
inline Quantity orbit_energy_magnitude(const Quantity& v, const ConstantsSet& k) {
    return -total_energy_from_speed(v, k);
}

/// Revolutions per second: f = v / (2 pi r), inverting v = 2 pi r f.
inline Quantity orbital_frequency(const Quantity& r, const Quantity& v) {
    detail::require_positive(r, dim::length, "radius");
    detail::require_positive(v, dim::speed, "speed");
    return v / (r * two_pi);
}

/// |E| rewritten in orbit variables: E(r, f) = 2 pi^2 m r^2 f^2.
inline Quantity energy_in_frequency_form(const Quantity& r, const Quantity& f,
                                         const ConstantsSet& k) {
    detail::require_positive(r, dim::length, "radius");
    detail::require_positive(f, dim::frequency, "frequency");
    return k.m_e() * pow(r, 2) * pow(f, 2) * (2.0 * pi * pi);
}

/// dE/df of the system side, with its factored form.
struct SystemDerivative {
    Quantity value;             ///< 4 pi^2 m r^2 f, J*s
    Quantity angular_momentum;  ///< L = m (2 pi r f) r; value == 2 pi L
    bool minimizes_energy;      ///< d2E/df2 = 4 pi^2 m r^2 > 0
};

/// Differentiate E(r, f) = 2 pi^2 m r^2 f^2 in f, holding r fixed --
/// the derivative is taken on the frequency dependence alone, not along
/// the family of force-balance orbits (co-varying r(f) would give a
/// different result). The chain 4 pi^2 m r^2 f = 2 pi m v r = 2 pi L is
/// reported alongside.
inline SystemDerivative dEdf_system(const Quantity& r, const Quantity& f,
                                    const ConstantsSet& k) {
    detail::require_positive(r, dim::length, "radius");
    detail::require_positive(f, dim::frequency, "frequency");
    const Quantity second_derivative = k.m_e() * pow(r, 2) * (4.0 * pi * pi);
    const Quantity orbit_speed = r * f * two_pi;
    const Quantity l = k.m_e() * orbit_speed * r;
    return SystemDerivative{second_derivative * f, l, second_derivative.value() > 0.0};
}

/// Second-order central difference of g at x with relative step s:
/// [g(x(1+s)) - g(x(1-s))] / (2 x s). Truncation error is O(s^2).
template <typename F>
Quantity central_difference(F&& g, const Quantity& x, double rel_step) {
    if (!(rel_step > 0.0 && rel_step < 0.1))
        throw domain_error("relative step must lie in (0, 0.1)");
    if (x.value() == 0.0) throw domain_error("central difference needs x != 0");
    const Quantity hi = g(x * (1.0 + rel_step));
    const Quantity lo = g(x * (1.0 - rel_step));
    return (hi - lo) / (x * (2.0 * rel_step));
}

/// Numerical oracle for dEdf_system: central difference of
/// energy_in_frequency_form in f at fixed r.
inline Quantity dEdf_system_numeric(const Quantity& r, const Quantity& f,
                                    double rel_step, const ConstantsSet& k) {
    detail::require_positive(r, dim::length, "radius");
    detail::require_positive(f, dim::frequency, "frequency");
    return central_difference(
        [&](const Quantity& fq) { return energy_in_frequency_form(r, fq, k); }, f,
        rel_step);
}

/// Planck side: E = n h nu.
inline Quantity planck_energy(int n, const Quantity& nu, const ConstantsSet& k) {
    detail::require_quantum_number(n);
    detail::require_dim(nu, dim::frequency, "frequency");
    if (nu.value() < 0.0) throw domain_error("frequency must be >= 0");
    return k.h() * nu * double(n);
}

/// Planck side derivative: dE/dnu = n h.
inline Quantity dEdnu_planck(int n, const ConstantsSet& k) {
    detail::require_quantum_number(n);
    return k.h() * double(n);
}

/// Equate dE/df|system = dE/dnu|planck under nu = f (correspondence
/// principle): L = n h / (2 pi), i.e. n hbar. The integer n of the
/// radiation quanta is identified with the orbital quantum number.
inline Quantity quantized_angular_momentum(int n, const ConstantsSet& k) {
    detail::require_quantum_number(n);
    return k.h() / two_pi * double(n);
}

/// One row of the numerical verification of the derivation.
struct DerivativeCheck {
    int n = 1;
    Quantity frequency;              ///< orbital f of the n-th orbit, s^-1
    Quantity dEdf_system_analytic;   ///< 2 pi L by construction, J*s
    Quantity dEdf_system_numeric;    ///< central difference, J*s
    Quantity dEdf_planck;            ///< n h, J*s
    Quantity angular_momentum;       ///< L of the orbit, J*s
    double residual_numeric = 0.0;       ///< |numeric - analytic| / analytic
    double residual_quantization = 0.0;  ///< |2 pi L - n h| / (n h)
};

/// Build the n-th Bohr orbit and verify the derivation on it: the
/// analytic and finite-difference dE/df agree, and 2 pi L equals n h.
inline DerivativeCheck run_derivation_check(int n, double rel_step,
                                            const ConstantsSet& k) {
    const OrbitState orbit = quantized_orbit(1, n, k);
    const SystemDerivative analytic = dEdf_system(orbit.radius, orbit.frequency, k);
    const Quantity numeric =
        dEdf_system_numeric(orbit.radius, orbit.frequency, rel_step, k);
    const Quantity planck = dEdnu_planck(n, k);

    DerivativeCheck row;
    row.n = n;
    row.frequency = orbit.frequency;
    row.dEdf_system_analytic = analytic.value;
    row.dEdf_system_numeric = numeric;
    row.dEdf_planck = planck;
    row.angular_momentum = orbit.angular_momentum;
    row.residual_numeric = relative_error(numeric, analytic.value);
    row.residual_quantization = relative_error(orbit.angular_momentum * two_pi, planck);
    return row;
}

}  // namespace bohr
