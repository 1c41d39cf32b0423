#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bohr {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Base class for every failure this library reports. Errors are always
/// typed exceptions; no operation returns NaN or infinity.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value entered or left a computation as NaN/inf.
struct non_finite_error : error {
    using error::error;
};

/// Dimension mismatch in add/sub/compare/convert.
struct dimension_error : error {
    using error::error;
};

/// Precondition violation (nonpositive radius, out-of-range step, ...).
struct domain_error : error {
    using error::error;
};

/// SI dimension as integer exponents over (length, mass, time, current).
/// Multiplying quantities adds exponents, dividing subtracts them.
struct Dimension {
    int length = 0;
    int mass = 0;
    int time = 0;
    int current = 0;

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    constexpr Dimension operator*(const Dimension& o) const {
        return {length + o.length, mass + o.mass, time + o.time, current + o.current};
    }
    constexpr Dimension operator/(const Dimension& o) const {
        return {length - o.length, mass - o.mass, time - o.time, current - o.current};
    }
    constexpr Dimension pow(int k) const {
        return {length * k, mass * k, time * k, current * k};
    }
    constexpr bool dimensionless() const {
        return length == 0 && mass == 0 && time == 0 && current == 0;
    }

    /// Compact human-readable form, e.g. "m^2 kg s^-2".
    std::string str() const {
        auto append = [](std::string& s, const char* sym, int exp) {
            if (exp == 0) return;
            if (!s.empty()) s += ' ';
            s += sym;
            if (exp != 1) s += '^' + std::to_string(exp);
        };
        std::string s;
        append(s, "m", length);
        append(s, "kg", mass);
        append(s, "s", time);
        append(s, "A", current);
        return s.empty() ? "1" : s;
    }
};

namespace dim {
inline constexpr Dimension scalar{};
inline constexpr Dimension length{1, 0, 0, 0};
inline constexpr Dimension mass{0, 1, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0};
inline constexpr Dimension current{0, 0, 0, 1};
inline constexpr Dimension frequency = scalar / time;
inline constexpr Dimension speed = length / time;
inline constexpr Dimension acceleration = speed / time;
inline constexpr Dimension charge = current * time;
inline constexpr Dimension force = mass * acceleration;
inline constexpr Dimension energy = force * length;
inline constexpr Dimension power = energy / time;
inline constexpr Dimension action = energy * time;
inline constexpr Dimension angular_momentum = action;
inline constexpr Dimension permittivity = charge * charge / (energy * length);
}  // namespace dim

/// A finite real value tagged with an SI dimension. Immutable; all
/// arithmetic checks dimensions and rejects non-finite results.
class Quantity {
public:
    constexpr Quantity() = default;

    Quantity(double value, Dimension dimension) : value_(value), dim_(dimension) {
        if (!std::isfinite(value))
            throw non_finite_error("quantity: non-finite value (" + dim_.str() + ")");
    }

    double value() const { return value_; }
    Dimension dim() const { return dim_; }

    Quantity operator-() const { return Quantity(-value_, dim_); }

    Quantity operator+(const Quantity& o) const {
        require_same_dim(o, "add");
        return Quantity(value_ + o.value_, dim_);
    }
    Quantity operator-(const Quantity& o) const {
        require_same_dim(o, "subtract");
        return Quantity(value_ - o.value_, dim_);
    }
    Quantity operator*(const Quantity& o) const {
        return Quantity(value_ * o.value_, dim_ * o.dim_);
    }
    Quantity operator/(const Quantity& o) const {
        return Quantity(value_ / o.value_, dim_ / o.dim_);
    }
    Quantity operator*(double s) const { return Quantity(value_ * s, dim_); }
    Quantity operator/(double s) const { return Quantity(value_ / s, dim_); }
    friend Quantity operator*(double s, const Quantity& q) { return q * s; }
    friend Quantity operator/(double s, const Quantity& q) {
        return Quantity(s / q.value_, dim::scalar / q.dim_);
    }

    bool operator==(const Quantity& o) const {
        require_same_dim(o, "compare");
        return value_ == o.value_;
    }
    bool operator<(const Quantity& o) const {
        require_same_dim(o, "compare");
        return value_ < o.value_;
    }
    bool operator>(const Quantity& o) const { return o < *this; }
    bool operator<=(const Quantity& o) const { return !(o < *this); }
    bool operator>=(const Quantity& o) const { return !(*this < o); }

private:
    void require_same_dim(const Quantity& o, const char* op) const {
        if (dim_ != o.dim_)
            throw dimension_error(std::string("cannot ") + op + " [" + dim_.str() +
                                  "] and [" + o.dim_.str() + "]");
    }

    double value_ = 0.0;
    Dimension dim_{};
};

/// Shorthand for a bare number.
inline Quantity scalar(double v) { return Quantity(v, dim::scalar); }

/// q^k with integer exponent; the dimension exponents scale by k.
inline Quantity pow(const Quantity& q, int k) {
    return Quantity(std::pow(q.value(), k), q.dim().pow(k));
}

/// Square root; requires all dimension exponents even and value >= 0.
inline Quantity sqrt(const Quantity& q) {
    const Dimension d = q.dim();
    if (d.length % 2 || d.mass % 2 || d.time % 2 || d.current % 2)
        throw dimension_error("sqrt of odd dimension [" + d.str() + "]");
    if (q.value() < 0)
        throw domain_error("sqrt of negative quantity");
    return Quantity(std::sqrt(q.value()),
                    {d.length / 2, d.mass / 2, d.time / 2, d.current / 2});
}

inline Quantity abs(const Quantity& q) {
    return Quantity(std::fabs(q.value()), q.dim());
}

/// Relative difference |a-b|/|b|, both quantities of the same dimension.
inline double relative_error(const Quantity& a, const Quantity& b) {
    if (a.dim() != b.dim())
        throw dimension_error("relative_error across dimensions");
    if (b.value() == 0.0) throw domain_error("relative_error against zero");
    return std::fabs(a.value() - b.value()) / std::fabs(b.value());
}

/// A named unit: one unit equals `scale` in SI base units.
struct Unit {
    std::string name;
    Dimension dim;
    double scale;
};

namespace units {
inline const Unit meter{"m", dim::length, 1.0};
inline const Unit nanometer{"nm", dim::length, 1e-9};
inline const Unit second{"s", dim::time, 1.0};
inline const Unit hertz{"Hz", dim::frequency, 1.0};
inline const Unit joule{"J", dim::energy, 1.0};
inline const Unit watt{"W", dim::power, 1.0};
inline const Unit meter_per_second{"m/s", dim::speed, 1.0};
inline const Unit joule_second{"J*s", dim::action, 1.0};
inline const Unit coulomb{"C", dim::charge, 1.0};
inline const Unit kilogram{"kg", dim::mass, 1.0};
inline const Unit farad_per_meter{"F/m", dim::permittivity, 1.0};
}  // namespace units

/// Express q in the named unit. Dimension must match.
inline double convert(const Quantity& q, const Unit& u) {
    if (q.dim() != u.dim)
        throw dimension_error("cannot express [" + q.dim().str() + "] in " + u.name);
    return q.value() / u.scale;
}

/// Build a quantity from a value given in the named unit.
inline Quantity from_unit(double value, const Unit& u) {
    return Quantity(value * u.scale, u.dim);
}

}  // namespace bohr
