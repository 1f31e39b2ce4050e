#ifndef ABSPEC_SPECTRUM_HPP
#define ABSPEC_SPECTRUM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "abspec/constants.hpp"
#include "abspec/molecule.hpp"
#include "abspec/units.hpp"

namespace abspec {

/// How the 0→1 transition frequency is obtained for each orientation.
struct ProfileMode {
  enum class Kind { two_level, full_n_level };
  Kind kind = Kind::two_level;
  std::size_t n_levels = 2;

  static ProfileMode two_level() { return {Kind::two_level, 2}; }
  static ProfileMode full_n_level(std::size_t n) { return {Kind::full_n_level, n}; }

  bool operator==(const ProfileMode&) const = default;
};

enum class SamplingScheme { uniform_grid, gauss_legendre };

struct OrientationNode {
  double u;       // cosθ
  double weight;  // fraction of molecules, sums to 1 over an ensemble
};

/// Deterministic sampling of molecular orientations in an isotropic gas.
/// For axes uniform on the sphere u = cosθ is uniform on [−1, 1].
///
/// uniform_grid uses the cell midpoints u_k = (2k + 1 − n)/n with equal
/// weights; gauss_legendre uses the n-point Legendre rule. Both node sets
/// are exactly symmetric under u → −u.
class OrientationEnsemble {
 public:
  OrientationEnsemble(std::size_t n_samples, SamplingScheme scheme);

  [[nodiscard]] std::size_t n_samples() const { return n_samples_; }
  [[nodiscard]] SamplingScheme scheme() const { return scheme_; }
  [[nodiscard]] std::vector<OrientationNode> nodes() const;

 private:
  std::size_t n_samples_;
  SamplingScheme scheme_;
};

/// Gauss-Legendre nodes on [−1, 1], ascending, weights summing to 2.
std::vector<OrientationNode> gauss_legendre_nodes(std::size_t n);

enum class Binning {
  /// Each node's weight goes to the bin containing its ν.
  nearest,
  /// Each node's weight is shared between the two nearest bin centres in
  /// proportion to proximity (cloud-in-cell).
  linear,
};

struct ProfileOptions {
  Binning binning = Binning::linear;
  /// Weight each orientation by cos²θ (parallel-dipole absorption) instead of
  /// uniformly.
  bool dipole_weighting = false;
  /// Worker threads for the per-orientation solves; the result does not
  /// depend on this.
  unsigned threads = 1;
};

struct SpectrumBin {
  double nu;      // bin centre, Δω/ω₀
  double weight;  // fraction of absorption in the bin
};

struct Spectrum {
  ProfileMode mode;
  /// Coupling ratio of a molecule parallel to A.
  double ratio_r0 = 0.0;
  std::vector<SpectrumBin> bins;
  double nu_min = 1.0;
  double nu_max = 1.0;
};

/// Transition ratio ν = (E₁ − E₀)/ħω₀ for coupling ratio r.
double transition_ratio(double ratio_r, const ProfileMode& mode);

/// Orientation-averaged profile of the fundamental absorption line.
///
/// The support [nu_min, nu_max] is spanned by ν at u = 0 and |u| = 1 (and
/// any node outside that range), divided into n_bins equal bins. A support
/// of zero width collapses to one bin at ν = nu_min. Weights are normalized
/// to unit sum.
///
/// Throws InvalidArgument for a0 < 0, n_bins == 0, or a full_n_level mode
/// with fewer than two levels; propagates ConvergenceError.
Spectrum line_profile(const MoleculeSpec& mol, TeslaMeters a0,
                      const OrientationEnsemble& ens, const ProfileMode& mode,
                      std::size_t n_bins, const ProfileOptions& options = {},
                      const PhysicalConstants& k = codata2018);

/// Same as line_profile for an explicit node set; weights need not be
/// normalized.
Spectrum line_profile_from_nodes(const MoleculeSpec& mol, TeslaMeters a0,
                                 std::span<const OrientationNode> nodes,
                                 const ProfileMode& mode, std::size_t n_bins,
                                 const ProfileOptions& options = {},
                                 const PhysicalConstants& k = codata2018);

/// Density of ν = 2√(¼ + r₀²u²) for u uniform on [−1, 1]:
/// g(ν) = ν / (2r₀√(ν² − 1)) on (1, 2√(¼ + r₀²)]. Diverges (integrably) at
/// ν → 1⁺, which is excluded from the domain.
double analytic_two_level_density(double nu, double r0);

struct ConvergenceRow {
  std::size_t n_levels;
  double nu;  // ν at cosθ = 1
};

/// ν(cosθ = 1) of the N-level truncation for each requested N, sorted by N.
/// ν is dimensionless and depends on the molecule only through r0.
/// Throws InvalidArgument for any N < 2.
std::vector<ConvergenceRow> convergence_study(
    double r0, std::span<const std::size_t> n_levels_list);

}  // namespace abspec

#endif  // ABSPEC_SPECTRUM_HPP
