#ifndef ABSPEC_MOLECULE_HPP
#define ABSPEC_MOLECULE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "abspec/constants.hpp"
#include "abspec/units.hpp"

namespace abspec {

/// Diatomic molecule treated as a one-dimensional harmonic oscillator in the
/// relative coordinate. Construction validates that both masses and the
/// vibrational quantum are strictly positive and finite.
class MoleculeSpec {
 public:
  MoleculeSpec(AtomicMass mass_1, AtomicMass mass_2, ElectronVolts hbar_omega0);

  [[nodiscard]] AtomicMass mass_1() const { return mass_1_; }
  [[nodiscard]] AtomicMass mass_2() const { return mass_2_; }
  [[nodiscard]] ElectronVolts hbar_omega0() const { return hbar_omega0_; }

  /// Same masses, different vibrational quantum.
  [[nodiscard]] MoleculeSpec with_hbar_omega0(ElectronVolts hbar_omega0) const;

  bool operator==(const MoleculeSpec&) const = default;

 private:
  AtomicMass mass_1_;
  AtomicMass mass_2_;
  ElectronVolts hbar_omega0_;
};

/// m1·m2/(m1+m2).
AtomicMass reduced_mass(const MoleculeSpec& spec);

/// Reduced mass expressed as rest energy μc², in eV.
ElectronVolts reduced_rest_energy(const MoleculeSpec& spec,
                                  const PhysicalConstants& k = codata2018);

/// Built-in molecules by name. "HCl" uses 1.00784 u for hydrogen (standard
/// atomic weight, conventional value), 34.96885 u for chlorine (the 35Cl
/// isotopic mass) and a vibrational quantum of 0.05 eV.
std::optional<MoleculeSpec> molecule_preset(std::string_view name);
std::vector<std::string_view> molecule_preset_names();

}  // namespace abspec

#endif  // ABSPEC_MOLECULE_HPP
