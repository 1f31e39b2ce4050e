#include "abspec/molecule.hpp"

#include <cmath>
#include <string>

#include "abspec/error.hpp"

namespace abspec {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw InvalidArgument(std::string(what) + " must be positive and finite, got " +
                          std::to_string(v));
  }
}

}  // namespace

MoleculeSpec::MoleculeSpec(AtomicMass mass_1, AtomicMass mass_2,
                           ElectronVolts hbar_omega0)
    : mass_1_(mass_1), mass_2_(mass_2), hbar_omega0_(hbar_omega0) {
  require_positive(mass_1.value(), "mass_1");
  require_positive(mass_2.value(), "mass_2");
  require_positive(hbar_omega0.value(), "hbar_omega0");
}

MoleculeSpec MoleculeSpec::with_hbar_omega0(ElectronVolts hbar_omega0) const {
  return MoleculeSpec(mass_1_, mass_2_, hbar_omega0);
}

AtomicMass reduced_mass(const MoleculeSpec& spec) {
  const double m1 = spec.mass_1().value();
  const double m2 = spec.mass_2().value();
  return AtomicMass(m1 * m2 / (m1 + m2));
}

ElectronVolts reduced_rest_energy(const MoleculeSpec& spec,
                                  const PhysicalConstants& k) {
  return ElectronVolts(reduced_mass(spec).value() * k.atomic_mass_unit_energy);
}

std::optional<MoleculeSpec> molecule_preset(std::string_view name) {
  if (name == "HCl") {
    return MoleculeSpec(AtomicMass(1.00784), AtomicMass(34.96885),
                        ElectronVolts(0.05));
  }
  return std::nullopt;
}

std::vector<std::string_view> molecule_preset_names() { return {"HCl"}; }

}  // namespace abspec
