#ifndef ABSPEC_CONSTANTS_HPP
#define ABSPEC_CONSTANTS_HPP

#include "abspec/units.hpp"

namespace abspec {

// Internal unit convention: energies in eV, lengths in m, vector potentials
// in T·m, currents in A, masses in u (converted to rest energies via u·c²).
struct PhysicalConstants {
  double elementary_charge;         // C
  double speed_of_light;            // m/s
  double reduced_planck;            // eV·s
  double vacuum_permeability;       // T·m/A
  double atomic_mass_unit_energy;   // eV (u·c²)
};

/// CODATA 2018 values. e and c are exact by definition of the SI.
inline constexpr PhysicalConstants codata2018{
    1.602176634e-19,
    299792458.0,
    6.582119569e-16,
    1.25663706212e-6,
    931.49410242e6,
};

ElectronVolts energy_ev_from_joule(Joules energy,
                                   const PhysicalConstants& k = codata2018);
Joules energy_joule_from_ev(ElectronVolts energy,
                            const PhysicalConstants& k = codata2018);

}  // namespace abspec

#endif  // ABSPEC_CONSTANTS_HPP
