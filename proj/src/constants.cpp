#include "abspec/constants.hpp"

namespace abspec {

ElectronVolts energy_ev_from_joule(Joules energy, const PhysicalConstants& k) {
  return ElectronVolts(energy.value() / k.elementary_charge);
}

Joules energy_joule_from_ev(ElectronVolts energy, const PhysicalConstants& k) {
  return Joules(energy.value() * k.elementary_charge);
}

}  // namespace abspec
