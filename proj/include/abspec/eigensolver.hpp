#ifndef ABSPEC_EIGENSOLVER_HPP
#define ABSPEC_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

#include "abspec/molecule.hpp"
#include "abspec/oscillator.hpp"

namespace abspec {

/// Real symmetric tridiagonal matrix, entries in eV.
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

  [[nodiscard]] std::size_t dim() const { return diag_.size(); }
  [[nodiscard]] const std::vector<double>& diag() const { return diag_; }
  [[nodiscard]] const std::vector<double>& offdiag() const { return offdiag_; }

  /// Maximum absolute column sum.
  [[nodiscard]] double norm1() const;

 private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

struct EigenResult {
  /// Ascending, eV.
  std::vector<double> eigenvalues;
  std::size_t iterations = 0;
  /// Upper bound on the distance of each returned value from a true
  /// eigenvalue, eV.
  double residual_bound = 0.0;
};

/// Removes the imaginary unit from the oscillator Hamiltonian.
///
/// With D = diag(1, i, i², …), D†HD has (n, n+1) element
/// i^{-n}·(i·s·m)·i^{n+1} = −s·m. A further similarity by diag(±1) fixes the
/// sign of every off-diagonal independently, so the spectrum of H equals that
/// of the real symmetric matrix with off-diagonals m = offmag.
SymmetricTridiagonal phase_reduce(const HermitianTridiagonal& h);

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr std::size_t kDefaultIterationCap = 64;

/// All eigenvalues by implicit QL with Wilkinson shifts.
///
/// An off-diagonal e[n] is treated as zero once
/// |e[n]| ≤ tol·(|d[n]| + |d[n+1]|), or once it falls below machine epsilon
/// times the matrix norm (this second test only matters for zero diagonals).
/// Throws InvalidArgument unless 0 < tol ≤ 1e-6; throws ConvergenceError if
/// any eigenvalue needs more than iteration_cap sweeps.
EigenResult eigenvalues(const SymmetricTridiagonal& t,
                        double tol = kDefaultEigenTolerance,
                        std::size_t iteration_cap = kDefaultIterationCap);

/// Test-scale oracle: Sturm-sequence bisection on the characteristic
/// polynomial recurrence, started from the Gershgorin interval. Refines each
/// eigenvalue to 1e-13 relative. Throws InvalidArgument for dim > 8.
EigenResult oracle_charpoly_eigenvalues(const SymmetricTridiagonal& t);

/// Exact spectrum of the untruncated operator. Completing the square,
/// p² − 2eA₀p·cosθ = (p − eA₀cosθ)² − (eA₀cosθ)², and the momentum shift is
/// unitary, so every level moves down by α²/ħω₀ = r²ħω₀. Returns the lowest
/// n_levels of ħω₀(n + ½ − r²), eV.
std::vector<double> displaced_spectrum_oracle(std::size_t n_levels,
                                              const CouplingParams& cp,
                                              const MoleculeSpec& mol);

}  // namespace abspec

#endif  // ABSPEC_EIGENSOLVER_HPP
