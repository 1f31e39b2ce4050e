#include <doctest.h>

#include <cmath>
#include <random>

#include "abspec/constants.hpp"

using namespace abspec;

TEST_SUITE("constants") {

TEST_CASE("CODATA 2018 values") {
  const auto& k = codata2018;
  CHECK(k.elementary_charge == 1.602176634e-19);
  CHECK(k.speed_of_light == 299792458.0);
  CHECK(k.reduced_planck == 6.582119569e-16);
  CHECK(k.vacuum_permeability == 1.25663706212e-6);
  CHECK(k.atomic_mass_unit_energy == 931.49410242e6);
  for (double v : {k.elementary_charge, k.speed_of_light, k.reduced_planck,
                   k.vacuum_permeability, k.atomic_mass_unit_energy}) {
    CHECK(v > 0.0);
  }
}

TEST_CASE("joule to eV") {
  CHECK(energy_ev_from_joule(Joules(1.602176634e-19)).value() == 1.0);
  CHECK(energy_ev_from_joule(Joules(0.0)).value() == 0.0);
  CHECK(energy_ev_from_joule(Joules(3.204353268e-19)).value() == 2.0);
}

TEST_CASE("eV/J round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-30.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double e = std::pow(10.0, exponent(rng));
    const double back =
        energy_ev_from_joule(energy_joule_from_ev(ElectronVolts(e))).value();
    CHECK(std::abs(back - e) <= 1e-15 * e);
  }
}

}  // TEST_SUITE
