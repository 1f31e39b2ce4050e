#ifndef ABSPEC_UNITS_HPP
#define ABSPEC_UNITS_HPP

#include <compare>

namespace abspec {

// Thin tagged wrapper so that energies, lengths, potentials and currents
// cannot be mixed up at API boundaries. Arithmetic is closed within one
// quantity; anything cross-dimensional goes through .value().
template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value_(v) {}

  [[nodiscard]] constexpr double value() const { return value_; }

  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity operator+(Quantity o) const { return Quantity(value_ + o.value_); }
  constexpr Quantity operator-(Quantity o) const { return Quantity(value_ - o.value_); }
  constexpr Quantity operator*(double s) const { return Quantity(value_ * s); }
  constexpr Quantity operator/(double s) const { return Quantity(value_ / s); }
  constexpr double operator/(Quantity o) const { return value_ / o.value_; }
  friend constexpr Quantity operator*(double s, Quantity q) { return q * s; }

  constexpr auto operator<=>(const Quantity&) const = default;

 private:
  double value_ = 0.0;
};

namespace unit_tag {
struct ElectronVolt;
struct Joule;
struct Meter;
struct TeslaMeter;
struct Ampere;
struct AtomicMass;
}  // namespace unit_tag

using ElectronVolts = Quantity<unit_tag::ElectronVolt>;
using Joules = Quantity<unit_tag::Joule>;
using Meters = Quantity<unit_tag::Meter>;
/// Magnetic vector potential, T·m.
using TeslaMeters = Quantity<unit_tag::TeslaMeter>;
using Amperes = Quantity<unit_tag::Ampere>;
/// Unified atomic mass units (Da).
using AtomicMass = Quantity<unit_tag::AtomicMass>;

}  // namespace abspec

#endif  // ABSPEC_UNITS_HPP
