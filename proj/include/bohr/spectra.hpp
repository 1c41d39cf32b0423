#pragma once

#include <vector>

#include "bohr/orbit.hpp"

namespace bohr {

/// An emission line between two quantized levels. Vacuum wavelength,
/// fixed nucleus (no reduced-mass correction): H-alpha computes to
/// 656.11 nm here, not the air value 656.28 nm.
struct TransitionLine {
    int z = 1;
    int n_upper = 2;
    int n_lower = 1;
    Quantity delta_energy;      ///< E(n_upper) - E(n_lower) > 0, J
    Quantity photon_frequency;  ///< delta_energy / h, s^-1
    Quantity wavelength;        ///< c / photon_frequency, m (vacuum)
};

/// The n_upper -> n_lower emission line. Absorption is the same line
/// traversed the other way, not a separate record.
inline TransitionLine transition(int z, int n_upper, int n_lower,
                                 const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_quantum_number(n_lower);
    if (n_upper <= n_lower)
        throw domain_error("transition requires n_upper > n_lower");
    TransitionLine line;
    line.z = z;
    line.n_upper = n_upper;
    line.n_lower = n_lower;
    line.delta_energy = level_energy(z, n_upper, k) - level_energy(z, n_lower, k);
    line.photon_frequency = line.delta_energy / k.h();
    line.wavelength = k.c() / line.photon_frequency;
    return line;
}

/// Lines (n_lower+1 .. n_lower+count) -> n_lower, ordered by n_upper.
/// n_lower = 2 yields the Balmer series.
inline std::vector<TransitionLine> series(int z, int n_lower, int count,
                                          const ConstantsSet& k) {
    if (count < 1) throw domain_error("series needs count >= 1");
    std::vector<TransitionLine> lines;
    lines.reserve(size_t(count));
    for (int up = n_lower + 1; up <= n_lower + count; ++up)
        lines.push_back(transition(z, up, n_lower, k));
    return lines;
}

/// Wavelength the series converges to as n_upper -> infinity
/// (metadata; it is not a line between two finite levels).
inline Quantity series_limit_wavelength(int z, int n_lower, const ConstantsSet& k) {
    detail::require_charge_number(z);
    detail::require_quantum_number(n_lower);
    const Quantity level = -level_energy(z, n_lower, k);  // ionization energy from n_lower
    return k.h() * k.c() / level;
}

/// Photon frequency of the n -> n-1 line divided by the orbital
/// frequency of the n-th orbit. Quantifies the correspondence
/// principle: the quotient is n(2n-1)/(2(n-1)^2), which decreases
/// monotonically to 1 as 1 + 3/(2n) + O(1/n^2).
inline double correspondence_ratio(int z, int n, const ConstantsSet& k) {
    if (n < 2) throw domain_error("correspondence_ratio needs n >= 2");
    const TransitionLine line = transition(z, n, n - 1, k);
    const OrbitState orbit = quantized_orbit(z, n, k);
    return (line.photon_frequency / orbit.frequency).value();
}

}  // namespace bohr
