#include <doctest.h>

#include "bohr/collapse.hpp"
#include "bohr/quantization.hpp"
#include "bohr/spectra.hpp"

using namespace bohr;

// Every public operation, fed dimensioned inputs, must come back with the
// documented output dimension.
TEST_CASE("output dimensions across all modules") {
    const ConstantsSet& k = ConstantsSet::full();
    const Quantity r(1e-10, dim::length);
    const Quantity v(1e6, dim::speed);
    const Quantity f(1e15, dim::frequency);

    CHECK(orbital_velocity(1, r, k).dim() == dim::speed);
    CHECK(radius_from_velocity(1, v, k).dim() == dim::length);
    CHECK(min_radius_bound(1, k).dim() == dim::length);
    CHECK(kinetic_energy(r, k).dim() == dim::energy);
    CHECK(potential_energy(r, k).dim() == dim::energy);
    CHECK(total_energy(r, k).dim() == dim::energy);
    CHECK(angular_momentum(r, v, k).dim() == dim::angular_momentum);
    CHECK(level_energy(1, 2, k).dim() == dim::energy);

    const OrbitState o = quantized_orbit(1, 1, k);
    CHECK(o.radius.dim() == dim::length);
    CHECK(o.speed.dim() == dim::speed);
    CHECK(o.frequency.dim() == dim::frequency);
    CHECK(o.kinetic_energy.dim() == dim::energy);
    CHECK(o.potential_energy.dim() == dim::energy);
    CHECK(o.total_energy.dim() == dim::energy);
    CHECK(o.angular_momentum.dim() == dim::action);
    CHECK(o.theta.dim() == dim::scalar);

    CHECK(total_energy_from_speed(v, k).dim() == dim::energy);
    CHECK(orbit_energy_magnitude(v, k).dim() == dim::energy);
    CHECK(orbital_frequency(r, v).dim() == dim::frequency);
    CHECK(energy_in_frequency_form(r, f, k).dim() == dim::energy);
    CHECK(dEdf_system(r, f, k).value.dim() == dim::action);
    CHECK(dEdf_system(r, f, k).angular_momentum.dim() == dim::angular_momentum);
    CHECK(dEdf_system_numeric(r, f, 1e-5, k).dim() == dim::action);
    CHECK(planck_energy(2, f, k).dim() == dim::energy);
    CHECK(dEdnu_planck(2, k).dim() == dim::action);
    CHECK(quantized_angular_momentum(3, k).dim() == dim::angular_momentum);

    const DerivativeCheck row = run_derivation_check(2, 1e-5, k);
    CHECK(row.frequency.dim() == dim::frequency);
    CHECK(row.dEdf_system_analytic.dim() == dim::action);
    CHECK(row.dEdf_system_numeric.dim() == dim::action);
    CHECK(row.dEdf_planck.dim() == dim::action);
    CHECK(row.angular_momentum.dim() == dim::angular_momentum);

    const TransitionLine line = transition(1, 3, 2, k);
    CHECK(line.delta_energy.dim() == dim::energy);
    CHECK(line.photon_frequency.dim() == dim::frequency);
    CHECK(line.wavelength.dim() == dim::length);
    CHECK(series_limit_wavelength(1, 2, k).dim() == dim::length);
    // correspondence_ratio is a plain double by construction; the quotient
    // it takes is dimensionless
    CHECK((line.photon_frequency / o.frequency).dim() == dim::scalar);

    const Quantity a(1e20, dim::acceleration);
    CHECK(larmor_power(a, k).dim() == dim::power);
    CHECK(coulomb_acceleration(1, r, k).dim() == dim::acceleration);
    CHECK(drdt(1, r, k).dim() == dim::speed);
    CHECK(inspiral_rate_constant(1, k).dim() ==
          dim::length * dim::length * dim::length / dim::time);

    CollapseConfig cfg;
    CHECK(closed_form_collapse_time(cfg, k).dim() == dim::time);

    CHECK(k.e().dim() == dim::charge);
    CHECK(k.m_e().dim() == dim::mass);
    CHECK(k.eps0().dim() == dim::permittivity);
    CHECK(k.h().dim() == dim::action);
    CHECK(k.c().dim() == dim::speed);
    CHECK(k.hbar().dim() == dim::action);
    CHECK(k.rydberg_energy().dim() == dim::energy);
}
