#pragma once

#include <optional>

#include "bohr/constants.hpp"
#include "bohr/units.hpp"

namespace bohr {

namespace detail {
inline void require_dim(const Quantity& q, Dimension d, const char* what) {
    if (q.dim() != d)
        throw dimension_error(std::string(what) + ": expected [" + d.str() +
                              "], got [" + q.dim().str() + "]");
}
inline void require_positive(const Quantity& q, Dimension d, const char* what) {
    require_dim(q, d, what);
    if (q.value() <= 0.0)
        throw domain_error(std::string(what) + " must be positive");
}
inline void require_charge_number(int z) {
    if (z < 1) throw domain_error("proton count Z must be >= 1");
}
inline void require_quantum_number(int n) {
    if (n < 1) throw domain_error("quantum number n must be >= 1");
}
}  // namespace detail

/// One circular orbit of the planetary model: quantized when n is set,
/// purely classical when it is not. Satisfies force balance
/// e^2 Z / (4 pi eps0 r^2) = m v^2 / r, the virial relations
/// E_k = -E and E_p = 2E, L = m v r, and f = v / (2 pi r).
struct OrbitState {
    int z = 1;
    std::optional<int> n;
    Quantity radius;            ///< m
    Quantity speed;             ///< m/s
    Quantity frequency;         ///< revolutions per second
    Quantity kinetic_energy;    ///< J
    Quantity potential_energy;  ///< J
    Quantity total_energy;      ///< J
    Quantity angular_momentum;  ///< J*s
    Quantity theta = Quantity(pi / 2, dim::scalar);  ///< momentum-radius angle, rad
};

/// Orbital speed from force balance: v = sqrt(e^2 Z / (4 pi eps0 m_e r)).
inline Quantity orbital_velocity(int z, const Quantity& r, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_positive(r, dim::length, "radius");
    return sqrt(pow(k.e(), 2) * double(z) / (k.eps0() * k.m_e() * r * (4.0 * pi)));
}

/// Inverse of orbital_velocity: r = e^2 Z / (4 pi eps0 m_e v^2).
inline Quantity radius_from_velocity(int z, const Quantity& v, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_positive(v, dim::speed, "speed");
    return pow(k.e(), 2) * double(z) / (k.eps0() * k.m_e() * pow(v, 2) * (4.0 * pi));
}

/// Radius of the orbit whose speed would reach c; massive particles need
/// v < c, so every real orbit lies strictly outside this radius.
inline Quantity min_radius_bound(int z, const ConstantsSet& k) {
    return radius_from_velocity(z, k.c(), k);
}

/// E_k = e^2 Z / (8 pi eps0 r), positive.
inline Quantity kinetic_energy(int z, const Quantity& r, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_positive(r, dim::length, "radius");
    return pow(k.e(), 2) * double(z) / (k.eps0() * r * (8.0 * pi));
}

/// E_p = -e^2 Z / (4 pi eps0 r); zero reference at infinite separation.
inline Quantity potential_energy(int z, const Quantity& r, const ConstantsSet& k) {
    return kinetic_energy(z, r, k) * -2.0;
}

/// E = E_k + E_p = -e^2 Z / (8 pi eps0 r), negative for a bound orbit.
inline Quantity total_energy(int z, const Quantity& r, const ConstantsSet& k) {
    return -kinetic_energy(z, r, k);
}

/// Hydrogen forms (Z = 1), as commonly quoted.
inline Quantity kinetic_energy(const Quantity& r, const ConstantsSet& k) {
    return kinetic_energy(1, r, k);
}
inline Quantity potential_energy(const Quantity& r, const ConstantsSet& k) {
    return potential_energy(1, r, k);
}
inline Quantity total_energy(const Quantity& r, const ConstantsSet& k) {
    return total_energy(1, r, k);
}

/// L = m_e v r (circular orbit, sin theta = 1).
inline Quantity angular_momentum(const Quantity& r, const Quantity& v,
                                 const ConstantsSet& k) {
    detail::require_positive(r, dim::length, "radius");
    detail::require_positive(v, dim::speed, "speed");
    return k.m_e() * v * r;
}

/// Level energy of the quantized spectrum:
/// E_n = -m_e e^4 Z^2 / (8 eps0^2 h^2 n^2).
inline Quantity level_energy(int z, int n, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_quantum_number(n);
    return -(k.rydberg_energy() * double(z) * double(z) / (double(n) * double(n)));
}

namespace detail {
inline OrbitState make_orbit(int z, std::optional<int> n, const Quantity& r,
                             const Quantity& v, const ConstantsSet& k) {
    OrbitState o;
    o.z = z;
    o.n = n;
    o.radius = r;
    o.speed = v;
    o.frequency = v / (r * two_pi);
    o.kinetic_energy = kinetic_energy(z, r, k);
    o.potential_energy = potential_energy(z, r, k);
    o.total_energy = total_energy(z, r, k);
    o.angular_momentum = angular_momentum(r, v, k);
    return o;
}
}  // namespace detail

/// The unique circular orbit with force balance and L = n hbar. Closed
/// forms: r_n = 4 pi eps0 hbar^2 n^2 / (m_e e^2 Z),
///        v_n = e^2 Z / (4 pi eps0 hbar n).
inline OrbitState quantized_orbit(int z, int n, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_quantum_number(n);
    const Quantity hbar = k.hbar();
    const Quantity r = pow(hbar, 2) * k.eps0() * (4.0 * pi) * double(n) * double(n) /
                       (k.m_e() * pow(k.e(), 2) * double(z));
    const Quantity v = pow(k.e(), 2) * double(z) / (hbar * k.eps0() * (4.0 * pi) * double(n));
    return detail::make_orbit(z, n, r, v, k);
}

/// Classical (unquantized) orbit at a given radius.
inline OrbitState classical_orbit(int z, const Quantity& r, const ConstantsSet& k) {
    return detail::make_orbit(z, std::nullopt, r, orbital_velocity(z, r, k), k);
}

}  // namespace bohr
