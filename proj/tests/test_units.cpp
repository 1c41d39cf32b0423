#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bohr/constants.hpp"
#include "bohr/units.hpp"
#include "test_helpers.hpp"

using namespace bohr;
using testutil::rel;

TEST_CASE("quantity construction") {
    const Quantity zero(0.0, dim::energy);
    CHECK(zero.value() == 0.0);
    CHECK(zero.dim() == dim::energy);

    const Quantity charge(1.602e-19, dim::charge);
    CHECK(charge == ConstantsSet::paper().e());

    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::quiet_NaN(), dim::length),
                    non_finite_error);
    CHECK_THROWS_AS(Quantity(std::numeric_limits<double>::infinity(), dim::scalar),
                    non_finite_error);
}

TEST_CASE("electronvolt input converts through the paper-set charge") {
    const Quantity e_level = from_unit(-13.6, ConstantsSet::paper().electronvolt());
    CHECK(e_level.dim() == dim::energy);
    CHECK(rel(e_level.value(), -13.6 * 1.602e-19) <= 1e-15);
    CHECK(rel(e_level.value(), -2.18e-18) <= 1e-3);
}

TEST_CASE("arithmetic combines values and dimensions") {
    const Quantity a(2.0, dim::length), b(3.0, dim::length);
    CHECK((a * b).value() == 6.0);
    CHECK((a * b).dim() == dim::length * dim::length);

    const Quantity energy(6.0, dim::energy), t(2.0, dim::time);
    CHECK((energy / t).value() == 3.0);
    CHECK((energy / t).dim() == dim::power);

    CHECK_THROWS_AS(Quantity(1.0, dim::energy) + Quantity(1.0, dim::length),
                    dimension_error);
    CHECK_THROWS_AS(Quantity(1.0, dim::energy) - Quantity(1.0, dim::time),
                    dimension_error);
    CHECK_THROWS_AS((void)(Quantity(1.0, dim::energy) < Quantity(1.0, dim::length)),
                    dimension_error);

    CHECK(pow(a, 3).value() == 8.0);
    CHECK(pow(a, 3).dim() == Dimension{3, 0, 0, 0});
    CHECK(pow(a, -1).dim() == Dimension{-1, 0, 0, 0});

    // division by zero must not leak an infinity
    CHECK_THROWS_AS(Quantity(1.0, dim::energy) / Quantity(0.0, dim::time),
                    non_finite_error);
}

TEST_CASE("sqrt halves even exponents and rejects odd ones") {
    const Quantity area(4.0, dim::length * dim::length);
    CHECK(sqrt(area).value() == 2.0);
    CHECK(sqrt(area).dim() == dim::length);
    CHECK_THROWS_AS(sqrt(Quantity(1.0, dim::length)), dimension_error);
    CHECK_THROWS_AS(sqrt(Quantity(-1.0, area.dim())), domain_error);
}

TEST_CASE("conversions at the unit boundary") {
    const ConstantsSet& paper = ConstantsSet::paper();
    // independent route: plain double division by the set's charge
    CHECK(rel(convert(Quantity(2.18e-18, dim::energy), paper.electronvolt()),
              2.18e-18 / 1.602e-19) <= 1e-15);
    CHECK(rel(convert(Quantity(2.18e-18, dim::energy), paper.electronvolt()), 13.6) <=
          1e-3);

    CHECK(rel(convert(Quantity(6.561e-7, dim::length), units::nanometer), 656.1) <=
          1e-15);

    CHECK_THROWS_AS(convert(Quantity(1.0, dim::energy), units::meter),
                    dimension_error);
}

TEST_CASE("dimension algebra is a group under multiplication") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> exp_dist(-4, 4);
    std::uniform_real_distribution<double> val_dist(0.5, 2.0);
    for (int i = 0; i < 200; ++i) {
        const Dimension da{exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        const Dimension db{exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        CHECK(da * (db / da) == db);
        const Quantity qa(val_dist(rng), da), qb(val_dist(rng), db);
        CHECK((qa * (qb / qa)).dim() == db);
    }
}

TEST_CASE("unit round-trips stay within 1e-15") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> val_dist(-1e3, 1e3);
    const Unit units_to_try[] = {units::meter, units::nanometer, units::hertz,
                                 units::joule, ConstantsSet::full().electronvolt()};
    for (const Unit& u : units_to_try)
        for (int i = 0; i < 100; ++i) {
            const double v = val_dist(rng);
            const Quantity q = from_unit(v, u);
            CHECK(rel(convert(q, u), v) <= 1e-15);
        }
}

TEST_CASE("constants sets hold their published values") {
    const ConstantsSet& paper = ConstantsSet::paper();
    CHECK(paper.e().value() == 1.602e-19);
    CHECK(paper.m_e().value() == 9.109e-31);
    CHECK(paper.eps0().value() == 8.854e-12);
    CHECK(paper.h().value() == 6.626e-34);
    CHECK(paper.c().value() == 3e8);
    CHECK(to_string(paper.provenance()) == "paper");

    const ConstantsSet& full = ConstantsSet::full();
    CHECK(full.e().value() == 1.602176634e-19);
    CHECK(full.m_e().value() == 9.1093837015e-31);
    CHECK(full.eps0().value() == 8.8541878128e-12);
    CHECK(full.h().value() == 6.62607015e-34);
    CHECK(full.c().value() == 2.99792458e8);
    CHECK(to_string(full.provenance()) == "full");
}

TEST_CASE("derived constants") {
    const ConstantsSet& full = ConstantsSet::full();
    CHECK(rel(full.hbar().value(), full.h().value() / (2.0 * pi)) <= 1e-16);
    CHECK(full.hbar().dim() == dim::action);
    // frozen from the independent evaluation of m e^4/(8 eps0^2 h^2)
    CHECK(rel(full.rydberg_energy().value(), 2.179872361086e-18) <= 1e-12);
    CHECK(rel(convert(full.rydberg_energy(), full.electronvolt()), 13.6056931229) <=
          1e-11);
    CHECK(full.rydberg_energy().dim() == dim::energy);
}

TEST_CASE("constants must be strictly positive") {
    CHECK_THROWS_AS(ConstantsSet(Provenance::full, 0.0, 9e-31, 8.8e-12, 6.6e-34, 3e8),
                    domain_error);
    CHECK_THROWS_AS(ConstantsSet(Provenance::full, 1.6e-19, -9e-31, 8.8e-12, 6.6e-34, 3e8),
                    domain_error);
}

TEST_CASE("unit lookup by name") {
    const ConstantsSet& paper = ConstantsSet::paper();
    auto ev = find_unit("eV", paper);
    REQUIRE(ev.has_value());
    CHECK(ev->scale == 1.602e-19);
    CHECK(find_unit("nm", paper).has_value());
    CHECK(find_unit("Hz", paper).has_value());
    CHECK_FALSE(find_unit("furlong", paper).has_value());
}
