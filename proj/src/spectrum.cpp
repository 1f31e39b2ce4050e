#include "abspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "abspec/eigensolver.hpp"
#include "abspec/error.hpp"
#include "abspec/oscillator.hpp"

namespace abspec {

namespace {

// Sum with O(log n) error growth and a result fixed by the input order.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// ħω₀ = 1 so that eigenvalue differences are ν directly.
const MoleculeSpec& reduced_units_molecule() {
  static const MoleculeSpec mol(AtomicMass(1.0), AtomicMass(1.0),
                                ElectronVolts(1.0));
  return mol;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

OrientationEnsemble::OrientationEnsemble(std::size_t n_samples,
                                         SamplingScheme scheme)
    : n_samples_(n_samples), scheme_(scheme) {
  if (n_samples < 2) {
    throw InvalidArgument("orientation ensemble needs at least 2 samples");
  }
}

std::vector<OrientationNode> OrientationEnsemble::nodes() const {
  const std::size_t n = n_samples_;
  if (scheme_ == SamplingScheme::gauss_legendre) {
    auto nodes = gauss_legendre_nodes(n);
    for (auto& node : nodes) node.weight *= 0.5;
    return nodes;
  }
  std::vector<OrientationNode> nodes(n);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Integer numerator keeps u_{n-1-k} == -u_k bit for bit.
    const double numer = 2.0 * static_cast<double>(k) + 1.0 - dn;
    nodes[k] = {numer / dn, 1.0 / dn};
  }
  return nodes;
}

std::vector<OrientationNode> gauss_legendre_nodes(std::size_t n) {
  if (n == 0) throw InvalidArgument("Gauss-Legendre rule needs n >= 1");
  std::vector<OrientationNode> out(n);
  const double dn = static_cast<double>(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Newton on P_n from the Tricomi-style initial guess (largest root first).
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (dn + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        const double p2 = ((2.0 * dj - 1.0) * x * p1 - (dj - 1.0) * p0) / dj;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    if (2 * i + 1 == n) x = 0.0;
    // Recompute P_n' at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
      const double dj = static_cast<double>(j);
      const double p2 = ((2.0 * dj - 1.0) * x * p1 - (dj - 1.0) * p0) / dj;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = dn * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out[n - 1 - i] = {x, w};
    out[i] = {-x, w};
  }
  return out;
}

double transition_ratio(double ratio_r, const ProfileMode& mode) {
  const MoleculeSpec& unit = reduced_units_molecule();
  const CouplingParams cp = coupling_from_ratio(ratio_r, unit);
  if (mode.kind == ProfileMode::Kind::two_level) {
    return two_level_energies(cp, unit).transition_ratio;
  }
  if (mode.n_levels < 2) {
    throw InvalidArgument("full_n_level mode needs n_levels >= 2");
  }
  const EigenResult ev =
      eigenvalues(phase_reduce(build_hamiltonian(mode.n_levels, cp, unit)));
  return ev.eigenvalues[1] - ev.eigenvalues[0];
}

Spectrum line_profile(const MoleculeSpec& mol, TeslaMeters a0,
                      const OrientationEnsemble& ens, const ProfileMode& mode,
                      std::size_t n_bins, const ProfileOptions& options,
                      const PhysicalConstants& k) {
  const auto nodes = ens.nodes();
  return line_profile_from_nodes(mol, a0, nodes, mode, n_bins, options, k);
}

Spectrum line_profile_from_nodes(const MoleculeSpec& mol, TeslaMeters a0,
                                 std::span<const OrientationNode> nodes,
                                 const ProfileMode& mode, std::size_t n_bins,
                                 const ProfileOptions& options,
                                 const PhysicalConstants& k) {
  if (!(a0.value() >= 0.0) || !std::isfinite(a0.value())) {
    throw InvalidArgument("a0 must be finite and non-negative");
  }
  if (n_bins == 0) throw InvalidArgument("n_bins must be at least 1");
  if (nodes.empty()) throw InvalidArgument("orientation node set is empty");
  if (mode.kind == ProfileMode::Kind::full_n_level && mode.n_levels < 2) {
    throw InvalidArgument("full_n_level mode needs n_levels >= 2");
  }

  const double r0 = coupling_alpha(a0, 1.0, mol, k).ratio_r;

  const std::size_t count = nodes.size();
  std::vector<double> nu(count);
  std::vector<double> weight(count);
  parallel_for(count, options.threads, [&](std::size_t i) {
    const double u = nodes[i].u;
    if (!(std::abs(u) <= 1.0)) {
      throw InvalidArgument("orientation node outside [-1, 1]");
    }
    nu[i] = transition_ratio(r0 * u, mode);
    weight[i] = options.dipole_weighting ? nodes[i].weight * u * u
                                         : nodes[i].weight;
  });

  Spectrum spec;
  spec.mode = mode;
  spec.ratio_r0 = r0;
  spec.nu_min = transition_ratio(0.0, mode);
  spec.nu_max = transition_ratio(r0, mode);
  for (double v : nu) {
    spec.nu_min = std::min(spec.nu_min, v);
    spec.nu_max = std::max(spec.nu_max, v);
  }

  const double total = pairwise_sum(weight);
  if (!(total > 0.0)) {
    throw InvalidArgument("orientation weights sum to zero");
  }

  const double width = spec.nu_max - spec.nu_min;
  if (width <= 0.0) {
    spec.bins.push_back({spec.nu_min, 1.0});
    return spec;
  }

  const double dnu = width / static_cast<double>(n_bins);
  std::vector<std::vector<double>> contributions(n_bins);
  const double last = static_cast<double>(n_bins - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double pos = (nu[i] - spec.nu_min) / dnu;
    if (options.binning == Binning::nearest || n_bins == 1) {
      const std::size_t b = std::min(
          static_cast<std::size_t>(std::max(pos, 0.0)), n_bins - 1);
      contributions[b].push_back(weight[i]);
      continue;
    }
    // Offset from the first bin centre.
    const double x = pos - 0.5;
    if (x <= 0.0) {
      contributions.front().push_back(weight[i]);
    } else if (x >= last) {
      contributions.back().push_back(weight[i]);
    } else {
      const double lower = std::floor(x);
      const double frac = x - lower;
      const auto b = static_cast<std::size_t>(lower);
      contributions[b].push_back(weight[i] * (1.0 - frac));
      contributions[b + 1].push_back(weight[i] * frac);
    }
  }

  spec.bins.resize(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b) {
    spec.bins[b].nu = spec.nu_min + (static_cast<double>(b) + 0.5) * dnu;
    spec.bins[b].weight = pairwise_sum(contributions[b]) / total;
  }
  return spec;
}

double analytic_two_level_density(double nu, double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw InvalidArgument("r0 must be positive and finite");
  }
  const double nu_max = 2.0 * std::sqrt(0.25 + r0 * r0);
  if (!(nu > 1.0 && nu <= nu_max)) {
    throw InvalidArgument("nu outside the support (1, " +
                          std::to_string(nu_max) + "]");
  }
  return nu / (2.0 * r0 * std::sqrt(nu * nu - 1.0));
}

std::vector<ConvergenceRow> convergence_study(
    double r0, std::span<const std::size_t> n_levels_list) {
  std::vector<std::size_t> levels(n_levels_list.begin(), n_levels_list.end());
  std::sort(levels.begin(), levels.end());
  std::vector<ConvergenceRow> rows;
  rows.reserve(levels.size());
  for (std::size_t n : levels) {
    if (n < 2) throw InvalidArgument("convergence study needs every N >= 2");
    rows.push_back({n, transition_ratio(r0, ProfileMode::full_n_level(n))});
  }
  return rows;
}

}  // namespace abspec
