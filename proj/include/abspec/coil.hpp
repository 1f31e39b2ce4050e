#ifndef ABSPEC_COIL_HPP
#define ABSPEC_COIL_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "abspec/constants.hpp"
#include "abspec/molecule.hpp"
#include "abspec/units.hpp"

namespace abspec {

/// Toroidal coil of circular cross section: tube radius a, revolution
/// radius b, n_loops turns carrying current I. The sign of I is the
/// winding sense.
class ToroidSpec {
 public:
  ToroidSpec(Meters inner_radius, Meters revolution_radius, std::size_t n_loops,
             Amperes current);

  [[nodiscard]] Meters inner_radius() const { return inner_radius_; }
  [[nodiscard]] Meters revolution_radius() const { return revolution_radius_; }
  [[nodiscard]] std::size_t n_loops() const { return n_loops_; }
  [[nodiscard]] Amperes current() const { return current_; }
  /// n_loops · I.
  [[nodiscard]] double ampere_turns() const;

  [[nodiscard]] ToroidSpec with_current(Amperes current) const;

  bool operator==(const ToroidSpec&) const = default;

 private:
  Meters inner_radius_;
  Meters revolution_radius_;
  std::size_t n_loops_;
  Amperes current_;
};

/// Warning text when a/b > 0.5, where the thin-torus on-axis formula is a
/// poor approximation.
std::optional<std::string> thin_torus_warning(const ToroidSpec& t);

/// On-axis vector potential in the Coulomb gauge, thin-torus limit:
///   A_z = (μ₀/4π) · π a² b (N·I) / (b² + z²)^{3/2}
/// N·I replaces the single-turn current. Pass n_loops = 1 for a single
/// turn.
TeslaMeters a_z_on_axis(const ToroidSpec& t, Meters z,
                        const PhysicalConstants& k = codata2018);

/// Contour estimate A₀ = σB/L with σ = πa², L = 2πb and the interior field
/// B = μ₀NI/(2πb), giving μ₀NIa²/(4πb²). This is exactly 1/π times
/// a_z_on_axis at z = 0.
TeslaMeters a0_gauge_independent(const ToroidSpec& t,
                                 const PhysicalConstants& k = codata2018);

/// Current that makes a molecule at the torus centre, aligned with A, reach
/// the coupling ratio target_ratio, using a_z_on_axis(z = 0). The current
/// stored in t is ignored. Throws InvalidArgument for target_ratio <= 0.
Amperes required_current(const ToroidSpec& t, const MoleculeSpec& mol,
                         double target_ratio,
                         const PhysicalConstants& k = codata2018);

}  // namespace abspec

#endif  // ABSPEC_COIL_HPP
