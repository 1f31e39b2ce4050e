#include "abspec/oscillator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "abspec/error.hpp"

namespace abspec {

namespace {

// √(ħω₀ / 2μc²), dimensionless.
double zero_point_velocity_factor(const MoleculeSpec& mol,
                                  const PhysicalConstants& k) {
  return std::sqrt(mol.hbar_omega0().value() /
                   (2.0 * reduced_rest_energy(mol, k).value()));
}

}  // namespace

CouplingParams coupling_alpha(TeslaMeters a0, double cos_theta,
                              const MoleculeSpec& mol,
                              const PhysicalConstants& k) {
  if (!std::isfinite(a0.value())) {
    throw InvalidArgument("a0 must be finite");
  }
  if (!(std::abs(cos_theta) <= 1.0)) {
    throw InvalidArgument("cos_theta must lie in [-1, 1], got " +
                          std::to_string(cos_theta));
  }
  // Orientation is applied last so that alpha is exactly odd in cos_theta.
  const double amplitude =
      a0.value() * k.speed_of_light * zero_point_velocity_factor(mol, k);
  const double alpha = amplitude * cos_theta;
  return CouplingParams{a0, cos_theta, ElectronVolts(alpha),
                        alpha / mol.hbar_omega0().value()};
}

double ratio_per_tesla_meter(const MoleculeSpec& mol,
                             const PhysicalConstants& k) {
  return k.speed_of_light /
         std::sqrt(2.0 * mol.hbar_omega0().value() *
                   reduced_rest_energy(mol, k).value());
}

CouplingParams coupling_from_ratio(double ratio_r, const MoleculeSpec& mol,
                                   const PhysicalConstants& k) {
  if (!std::isfinite(ratio_r)) {
    throw InvalidArgument("coupling ratio must be finite");
  }
  const double a0 = ratio_r / ratio_per_tesla_meter(mol, k);
  return CouplingParams{TeslaMeters(a0), 1.0,
                        ElectronVolts(ratio_r * mol.hbar_omega0().value()),
                        ratio_r};
}

HermitianTridiagonal::HermitianTridiagonal(std::vector<double> diag,
                                           std::vector<double> offmag,
                                           bool negative_coupling)
    : diag_(std::move(diag)),
      offmag_(std::move(offmag)),
      negative_coupling_(negative_coupling) {
  if (diag_.empty()) {
    throw InvalidArgument("Hamiltonian needs at least one level");
  }
  if (offmag_.size() + 1 != diag_.size()) {
    throw InvalidArgument("off-diagonal length must be dim - 1");
  }
  for (double m : offmag_) {
    if (!(m >= 0.0)) {
      throw InvalidArgument("off-diagonal magnitudes must be non-negative");
    }
  }
}

std::complex<double> HermitianTridiagonal::element(std::size_t row,
                                                   std::size_t col) const {
  if (row >= dim() || col >= dim()) {
    throw InvalidArgument("matrix index out of range");
  }
  const double s = negative_coupling_ ? -1.0 : 1.0;
  if (row == col) return {diag_[row], 0.0};
  if (col == row + 1) return {0.0, s * offmag_[row]};
  if (row == col + 1) return {0.0, -s * offmag_[col]};
  return {0.0, 0.0};
}

HermitianTridiagonal build_hamiltonian(std::size_t n_levels,
                                       const CouplingParams& cp,
                                       const MoleculeSpec& mol) {
  if (n_levels == 0) {
    throw InvalidArgument("n_levels must be at least 1");
  }
  const double hw = mol.hbar_omega0().value();
  const double alpha = cp.alpha.value();
  std::vector<double> diag(n_levels);
  std::vector<double> offmag(n_levels - 1);
  for (std::size_t n = 0; n < n_levels; ++n) {
    diag[n] = hw * (static_cast<double>(n) + 0.5);
  }
  // ⟨n|a|n+1⟩ = √(n+1), so the (n, n+1) element of −iα(a† − a) is +iα√(n+1).
  for (std::size_t n = 0; n + 1 < n_levels; ++n) {
    offmag[n] = std::abs(alpha) * std::sqrt(static_cast<double>(n + 1));
  }
  return HermitianTridiagonal(std::move(diag), std::move(offmag), alpha < 0.0);
}

TwoLevelResult two_level_energies(const CouplingParams& cp,
                                  const MoleculeSpec& mol) {
  const double hw = mol.hbar_omega0().value();
  const double r = cp.ratio_r;
  const double root = std::sqrt(0.25 + r * r);
  return TwoLevelResult{ElectronVolts(hw * (1.0 - root)),
                        ElectronVolts(hw * (1.0 + root)), 2.0 * root};
}

}  // namespace abspec
