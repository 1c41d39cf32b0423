#pragma once

#include <optional>
#include <string_view>

#include "bohr/units.hpp"

namespace bohr {

/// Which fundamental-constant values a computation runs on.
///   paper -- the 4-significant-digit values the model was originally
///            stated with (c rounded to 3e8 m/s).
///   full  -- CODATA 2018 / SI-exact values.
enum class Provenance { paper, full };

inline std::string_view to_string(Provenance p) {
    return p == Provenance::paper ? "paper" : "full";
}

inline std::optional<Provenance> provenance_from_string(std::string_view s) {
    if (s == "paper") return Provenance::paper;
    if (s == "full") return Provenance::full;
    return std::nullopt;
}

/// The five fundamental constants every formula here needs, plus derived
/// accessors. All values are strictly positive SI quantities.
class ConstantsSet {
public:
    ConstantsSet(Provenance provenance, double e_coulomb, double m_e_kg,
                 double eps0_farad_per_m, double h_joule_s, double c_m_per_s)
        : provenance_(provenance),
          e_(e_coulomb, dim::charge),
          m_e_(m_e_kg, dim::mass),
          eps0_(eps0_farad_per_m, dim::permittivity),
          h_(h_joule_s, dim::action),
          c_(c_m_per_s, dim::speed) {
        for (const Quantity* q : {&e_, &m_e_, &eps0_, &h_, &c_})
            if (q->value() <= 0.0)
                throw domain_error("constants must be strictly positive");
    }

    /// 4-digit historical values. The charge is in coulombs (the source
    /// text prints its unit as m/s, an evident typo).
    static const ConstantsSet& paper() {
        static const ConstantsSet k(Provenance::paper, 1.602e-19, 9.109e-31,
                                    8.854e-12, 6.626e-34, 3e8);
        return k;
    }

    /// CODATA 2018 values; e, h and c are exact by SI definition.
    static const ConstantsSet& full() {
        static const ConstantsSet k(Provenance::full, 1.602176634e-19,
                                    9.1093837015e-31, 8.8541878128e-12,
                                    6.62607015e-34, 2.99792458e8);
        return k;
    }

    static const ConstantsSet& get(Provenance p) {
        return p == Provenance::paper ? paper() : full();
    }

    Provenance provenance() const { return provenance_; }

    Quantity e() const { return e_; }        ///< elementary charge, C
    Quantity m_e() const { return m_e_; }    ///< electron mass, kg
    Quantity eps0() const { return eps0_; }  ///< vacuum permittivity, F/m
    Quantity h() const { return h_; }        ///< Planck constant, J*s
    Quantity c() const { return c_; }        ///< speed of light, m/s

    /// h / 2pi
    Quantity hbar() const { return h_ / two_pi; }

    /// m_e e^4 / (8 eps0^2 h^2), the hydrogen ionization energy scale.
    Quantity rydberg_energy() const {
        return m_e_ * pow(e_, 4) / (pow(eps0_, 2) * pow(h_, 2) * 8.0);
    }

    /// Electronvolt defined through this set's elementary charge.
    Unit electronvolt() const { return Unit{"eV", dim::energy, e_.value()}; }

private:
    Provenance provenance_;
    Quantity e_, m_e_, eps0_, h_, c_;
};

/// Look up a unit by CLI-facing name. eV resolves through the given
/// constants set; returns nullopt for unknown names.
inline std::optional<Unit> find_unit(std::string_view name, const ConstantsSet& k) {
    using namespace units;
    for (const Unit& u : {meter, nanometer, second, hertz, joule, watt,
                          meter_per_second, joule_second, coulomb, kilogram,
                          farad_per_meter})
        if (name == u.name) return u;
    if (name == "eV") return k.electronvolt();
    return std::nullopt;
}

}  // namespace bohr
