#ifndef ABSPEC_OSCILLATOR_HPP
#define ABSPEC_OSCILLATOR_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "abspec/constants.hpp"
#include "abspec/molecule.hpp"
#include "abspec/units.hpp"

namespace abspec {

/// Strength of the p·A coupling for one molecular orientation.
///
/// Only the projection of A on the molecular axis couples, so the
/// orientation enters through cos_theta alone. alpha carries the sign of
/// cos_theta; ratio_r = alpha / ħω₀ is the dimensionless observability
/// parameter eA₀c·cosθ/√(2ħω₀μc²).
struct CouplingParams {
  TeslaMeters a0;
  double cos_theta = 1.0;
  ElectronVolts alpha;
  double ratio_r = 0.0;
};

/// alpha = eA₀c·√(ħω₀/2μc²)·cosθ, in eV. With A₀ in T·m the product eA₀c
/// expressed in eV is numerically A₀·c.
///
/// Throws InvalidArgument if |cos_theta| > 1 or a0 is not finite.
CouplingParams coupling_alpha(TeslaMeters a0, double cos_theta,
                              const MoleculeSpec& mol,
                              const PhysicalConstants& k = codata2018);

/// Inverse route: the coupling at cosθ = 1 that produces the given ratio r,
/// with a0 back-computed from the same constant chain.
CouplingParams coupling_from_ratio(double ratio_r, const MoleculeSpec& mol,
                                   const PhysicalConstants& k = codata2018);

/// dr/dA₀ at cosθ = 1, in 1/(T·m): c/√(2ħω₀μc²).
double ratio_per_tesla_meter(const MoleculeSpec& mol,
                             const PhysicalConstants& k = codata2018);

/// Truncated oscillator Hamiltonian in the number basis {|0⟩..|N-1⟩}.
///
/// Stored as real diagonal plus non-negative off-diagonal magnitudes. The
/// represented matrix has H(n,n+1) = +i·s·offmag[n] and H(n+1,n) = its
/// conjugate, where s = -1 if the coupling was negative and +1 otherwise.
class HermitianTridiagonal {
 public:
  HermitianTridiagonal(std::vector<double> diag, std::vector<double> offmag,
                       bool negative_coupling);

  [[nodiscard]] std::size_t dim() const { return diag_.size(); }
  [[nodiscard]] const std::vector<double>& diag() const { return diag_; }
  [[nodiscard]] const std::vector<double>& offmag() const { return offmag_; }
  [[nodiscard]] bool negative_coupling() const { return negative_coupling_; }

  /// Dense matrix element, eV. Zero outside the three central diagonals.
  [[nodiscard]] std::complex<double> element(std::size_t row,
                                             std::size_t col) const;

 private:
  std::vector<double> diag_;
  std::vector<double> offmag_;
  bool negative_coupling_;
};

/// ħω₀(a†a + ½) − iα(a† − a) restricted to the lowest n_levels states.
///
/// Throws InvalidArgument for n_levels == 0.
HermitianTridiagonal build_hamiltonian(std::size_t n_levels,
                                       const CouplingParams& cp,
                                       const MoleculeSpec& mol);

struct TwoLevelResult {
  ElectronVolts e_minus;
  ElectronVolts e_plus;
  /// (E₊ − E₋)/ħω₀.
  double transition_ratio = 1.0;
};

/// Closed-form eigenvalues of the N = 2 truncation:
/// E± = ħω₀[1 ± √(¼ + r²)].
TwoLevelResult two_level_energies(const CouplingParams& cp,
                                  const MoleculeSpec& mol);

}  // namespace abspec

#endif  // ABSPEC_OSCILLATOR_HPP
