#include "abspec/coil.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "abspec/error.hpp"
#include "abspec/oscillator.hpp"

namespace abspec {

ToroidSpec::ToroidSpec(Meters inner_radius, Meters revolution_radius,
                       std::size_t n_loops, Amperes current)
    : inner_radius_(inner_radius),
      revolution_radius_(revolution_radius),
      n_loops_(n_loops),
      current_(current) {
  const double a = inner_radius.value();
  const double b = revolution_radius.value();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0) || !(a < b)) {
    throw InvalidArgument("toroid radii must satisfy 0 < a < b");
  }
  if (n_loops == 0) throw InvalidArgument("toroid needs at least one loop");
  if (!std::isfinite(current.value())) {
    throw InvalidArgument("toroid current must be finite");
  }
}

double ToroidSpec::ampere_turns() const {
  return static_cast<double>(n_loops_) * current_.value();
}

ToroidSpec ToroidSpec::with_current(Amperes current) const {
  return ToroidSpec(inner_radius_, revolution_radius_, n_loops_, current);
}

std::optional<std::string> thin_torus_warning(const ToroidSpec& t) {
  const double ratio = t.inner_radius() / t.revolution_radius();
  if (ratio <= 0.5) return std::nullopt;
  std::ostringstream os;
  os << "a/b = " << ratio
     << " exceeds 0.5; the on-axis formula assumes a << b";
  return os.str();
}

TeslaMeters a_z_on_axis(const ToroidSpec& t, Meters z,
                        const PhysicalConstants& k) {
  const double a = t.inner_radius().value();
  const double b = t.revolution_radius().value();
  const double s = b * b + z.value() * z.value();
  return TeslaMeters(k.vacuum_permeability / (4.0 * std::numbers::pi) *
                     std::numbers::pi * a * a * b * t.ampere_turns() /
                     (s * std::sqrt(s)));
}

TeslaMeters a0_gauge_independent(const ToroidSpec& t,
                                 const PhysicalConstants& k) {
  const double a = t.inner_radius().value();
  const double b = t.revolution_radius().value();
  const double area = std::numbers::pi * a * a;
  const double perimeter = 2.0 * std::numbers::pi * b;
  const double field = k.vacuum_permeability * t.ampere_turns() / perimeter;
  return TeslaMeters(area * field / perimeter);
}

Amperes required_current(const ToroidSpec& t, const MoleculeSpec& mol,
                         double target_ratio, const PhysicalConstants& k) {
  if (!(target_ratio > 0.0) || !std::isfinite(target_ratio)) {
    throw InvalidArgument("target coupling ratio must be positive and finite");
  }
  const double a0_per_ampere =
      a_z_on_axis(t.with_current(Amperes(1.0)), Meters(0.0), k).value();
  const double ratio_per_ampere = a0_per_ampere * ratio_per_tesla_meter(mol, k);
  return Amperes(target_ratio / ratio_per_ampere);
}

}  // namespace abspec
