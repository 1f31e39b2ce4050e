#include <doctest.h>

#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "abspec/error.hpp"
#include "abspec/oscillator.hpp"
#include "abspec/spectrum.hpp"

using namespace abspec;

namespace {

const MoleculeSpec& hcl() {
  static const MoleculeSpec m = *molecule_preset("HCl");
  return m;
}

TeslaMeters a0_for(double r0) { return coupling_from_ratio(r0, hcl()).a0; }

double total_weight(const Spectrum& s) {
  double t = 0.0;
  for (const auto& b : s.bins) t += b.weight;
  return t;
}

// P(ν ≤ x) for the two-level ensemble: |u| ≤ √(x² − 1)/(2r₀).
double two_level_cdf(double x, double r0) {
  if (x <= 1.0) return 0.0;
  return std::min(1.0, std::sqrt(x * x - 1.0) / (2.0 * r0));
}

// Σ_b |w_b − ∫_bin g|, bin edges reconstructed from the centres.
double l1_to_analytic(const Spectrum& s, double r0) {
  const double width = (s.nu_max - s.nu_min) / static_cast<double>(s.bins.size());
  double l1 = 0.0;
  for (std::size_t b = 0; b < s.bins.size(); ++b) {
    const double lo = s.nu_min + static_cast<double>(b) * width;
    const double hi = lo + width;
    l1 += std::abs(s.bins[b].weight - (two_level_cdf(hi, r0) - two_level_cdf(lo, r0)));
  }
  return l1;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("orientation grid") {
  const auto nodes = OrientationEnsemble(4, SamplingScheme::uniform_grid).nodes();
  REQUIRE(nodes.size() == 4);
  const double u[] = {-0.75, -0.25, 0.25, 0.75};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(nodes[i].u == u[i]);
    CHECK(nodes[i].weight == 0.25);
  }
  CHECK_THROWS_AS(OrientationEnsemble(1, SamplingScheme::uniform_grid), InvalidArgument);
  CHECK_THROWS_AS(OrientationEnsemble(0, SamplingScheme::gauss_legendre), InvalidArgument);
}

TEST_CASE("orientation ensembles are symmetric and normalized") {
  for (auto scheme : {SamplingScheme::uniform_grid, SamplingScheme::gauss_legendre}) {
    for (std::size_t n : {2u, 3u, 17u, 64u, 1001u}) {
      const auto nodes = OrientationEnsemble(n, scheme).nodes();
      double w = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(nodes[i].u == -nodes[n - 1 - i].u);
        CHECK(nodes[i].weight == nodes[n - 1 - i].weight);
        CHECK(std::abs(nodes[i].u) < 1.0);
        w += nodes[i].weight;
      }
      CHECK(w == near(1.0, 1e-12));
      CHECK(std::is_sorted(nodes.begin(), nodes.end(),
                           [](auto& a, auto& b) { return a.u < b.u; }));
    }
  }
}

TEST_CASE("Gauss-Legendre rule") {
  SUBCASE("three-point nodes and weights") {
    const auto g = gauss_legendre_nodes(3);
    CHECK(g[0].u == near(-std::sqrt(0.6), 1e-15));
    CHECK(g[1].u == 0.0);
    CHECK(g[2].weight == near(5.0 / 9.0, 1e-15));
    CHECK(g[1].weight == near(8.0 / 9.0, 1e-15));
  }
  SUBCASE("integrates polynomials up to degree 2n − 1 exactly") {
    for (std::size_t n : {1u, 2u, 5u, 12u, 40u}) {
      const auto g = gauss_legendre_nodes(n);
      for (std::size_t p = 0; p < 2 * n; ++p) {
        double s = 0.0;
        for (const auto& node : g) s += node.weight * std::pow(node.u, static_cast<double>(p));
        const double exact = (p % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(p + 1);
        CHECK(std::abs(s - exact) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(gauss_legendre_nodes(0), InvalidArgument);
}

TEST_CASE("transition ratio") {
  CHECK(transition_ratio(0.0, ProfileMode::two_level()) == 1.0);
  CHECK(transition_ratio(1.0, ProfileMode::two_level()) == near(std::sqrt(5.0), 1e-15));
  CHECK(transition_ratio(-1.0, ProfileMode::two_level()) == near(std::sqrt(5.0), 1e-15));
  CHECK(transition_ratio(0.0, ProfileMode::full_n_level(7)) == near(1.0, 1e-14));
  CHECK(transition_ratio(1.0, ProfileMode::full_n_level(2)) == near(std::sqrt(5.0), 1e-14));
  CHECK_THROWS_AS(transition_ratio(1.0, ProfileMode::full_n_level(1)), InvalidArgument);
}

TEST_CASE("zero potential collapses to one line at the bare frequency") {
  for (auto mode : {ProfileMode::two_level(), ProfileMode::full_n_level(6)}) {
    const auto s = line_profile(hcl(), TeslaMeters(0.0),
                                OrientationEnsemble(64, SamplingScheme::uniform_grid),
                                mode, 32);
    REQUIRE(s.bins.size() == 1);
    CHECK(s.bins[0].nu == near(1.0, 1e-14));
    CHECK(s.bins[0].weight == 1.0);
    CHECK(s.ratio_r0 == 0.0);
  }
}

TEST_CASE("two-level support endpoints") {
  for (double r0 : {0.1, 1.0, 3.0, 25.0}) {
    const auto s = line_profile(hcl(), a0_for(r0),
                                OrientationEnsemble(512, SamplingScheme::uniform_grid),
                                ProfileMode::two_level(), 100);
    CHECK(s.nu_min == 1.0);
    CHECK(s.nu_max == near(2.0 * std::sqrt(0.25 + r0 * r0), 1e-12));
    CHECK(s.ratio_r0 == near(r0, 1e-13));
    REQUIRE(s.bins.size() == 100);
    const double w = (s.nu_max - s.nu_min) / 100.0;
    CHECK(s.bins.front().nu == near(1.0 + 0.5 * w, 1e-13));
    CHECK(s.bins.back().nu == near(s.nu_max - 0.5 * w, 1e-13));
  }
}

TEST_CASE("analytic density") {
  CHECK(analytic_two_level_density(std::sqrt(5.0), 1.0) ==
        near(0.559016994374947424, 1e-15));
  CHECK(analytic_two_level_density(2.0, 1.0) == near(1.0 / std::sqrt(3.0), 1e-15));
  CHECK_THROWS_AS(analytic_two_level_density(1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(analytic_two_level_density(2.3, 1.0), InvalidArgument);
  CHECK_THROWS_AS(analytic_two_level_density(1.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(analytic_two_level_density(1.5, -1.0), InvalidArgument);
}

TEST_CASE("analytic density integrates to one and matches its CDF") {
  boost::math::quadrature::tanh_sinh<double> integrator;
  for (double r0 : {0.2, 1.0, 7.5}) {
    const double top = 2.0 * std::sqrt(0.25 + r0 * r0);
    // Same density written in s = ν − 1, which keeps full precision next to
    // the ν → 1 singularity where 1 + s rounds to 1.
    const auto g = [r0](double s) {
      return (1.0 + s) / (2.0 * r0 * std::sqrt(s * (2.0 + s)));
    };
    for (double s : {1e-3, 0.05, 0.5 * (top - 1.0), top - 1.0}) {
      CHECK(analytic_two_level_density(1.0 + s, r0) == near(g(s), 1e-10));
    }
    CHECK(integrator.integrate(g, 0.0, top - 1.0) == near(1.0, 1e-12));
    for (double frac : {0.1, 0.5, 0.9}) {
      const double x = 1.0 + frac * (top - 1.0);
      CHECK(integrator.integrate(g, 0.0, x - 1.0) == near(two_level_cdf(x, r0), 1e-12));
    }
  }
}

TEST_CASE("histogram approaches the analytic density") {
  SUBCASE("4096 grid nodes, linear binning") {
    const auto s = line_profile(hcl(), a0_for(1.0),
                                OrientationEnsemble(4096, SamplingScheme::uniform_grid),
                                ProfileMode::two_level(), 256);
    CHECK(l1_to_analytic(s, 1.0) < 0.02);
  }
  SUBCASE("4096 Gauss-Legendre nodes, linear binning") {
    const auto s = line_profile(hcl(), a0_for(1.0),
                                OrientationEnsemble(4096, SamplingScheme::gauss_legendre),
                                ProfileMode::two_level(), 256);
    CHECK(l1_to_analytic(s, 1.0) < 0.02);
  }
  SUBCASE("nearest binning needs many more nodes") {
    ProfileOptions opts;
    opts.binning = Binning::nearest;
    const auto coarse = line_profile(hcl(), a0_for(1.0),
                                     OrientationEnsemble(4096, SamplingScheme::uniform_grid),
                                     ProfileMode::two_level(), 256, opts);
    const auto fine = line_profile(hcl(), a0_for(1.0),
                                   OrientationEnsemble(1000000, SamplingScheme::uniform_grid),
                                   ProfileMode::two_level(), 256, opts);
    CHECK(l1_to_analytic(fine, 1.0) < 0.02);
    CHECK(l1_to_analytic(fine, 1.0) < l1_to_analytic(coarse, 1.0));
  }
}

TEST_CASE("weights are normalized and non-negative") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ratio(0.01, 20.0);
  std::uniform_int_distribution<std::size_t> bins(1, 300);
  std::uniform_int_distribution<std::size_t> samples(2, 2000);
  for (int i = 0; i < 60; ++i) {
    ProfileOptions opts;
    opts.binning = (i % 2 == 0) ? Binning::linear : Binning::nearest;
    opts.dipole_weighting = (i % 3 == 0);
    const auto scheme =
        (i % 4 == 0) ? SamplingScheme::gauss_legendre : SamplingScheme::uniform_grid;
    const auto s = line_profile(hcl(), a0_for(ratio(rng)),
                                OrientationEnsemble(samples(rng), scheme),
                                ProfileMode::two_level(), bins(rng), opts);
    CHECK(total_weight(s) == near(1.0, 1e-12));
    for (const auto& b : s.bins) {
      CHECK(b.weight >= 0.0);
      CHECK(b.nu >= s.nu_min);
      CHECK(b.nu <= s.nu_max);
    }
  }
}

TEST_CASE("profile depends only on |u|") {
  // Half ensemble (u > 0) with doubled weights reproduces the full one.
  const auto full = OrientationEnsemble(800, SamplingScheme::uniform_grid).nodes();
  std::vector<OrientationNode> half;
  for (const auto& n : full) {
    if (n.u > 0.0) half.push_back({n.u, 2.0 * n.weight});
  }
  for (auto mode : {ProfileMode::two_level(), ProfileMode::full_n_level(5)}) {
    const auto a = line_profile_from_nodes(hcl(), a0_for(1.5), full, mode, 64);
    const auto b = line_profile_from_nodes(hcl(), a0_for(1.5), half, mode, 64);
    REQUIRE(a.bins.size() == b.bins.size());
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
      CHECK(a.bins[i].nu == b.bins[i].nu);
      CHECK(std::abs(a.bins[i].weight - b.bins[i].weight) < 1e-14);
    }
  }
}

TEST_CASE("two-level and N = 2 modes agree") {
  const OrientationEnsemble ens(300, SamplingScheme::uniform_grid);
  const auto a = line_profile(hcl(), a0_for(2.0), ens, ProfileMode::two_level(), 50);
  const auto b = line_profile(hcl(), a0_for(2.0), ens, ProfileMode::full_n_level(2), 50);
  CHECK(a.nu_max == near(b.nu_max, 1e-12));
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(std::abs(a.bins[i].weight - b.bins[i].weight) < 1e-9);
  }
}

TEST_CASE("refining the ensemble changes the histogram by less than two bins' worth") {
  for (auto mode : {ProfileMode::two_level(), ProfileMode::full_n_level(8)}) {
    const std::size_t n_bins = 64;
    const auto a = line_profile(hcl(), a0_for(1.0),
                                OrientationEnsemble(4096, SamplingScheme::uniform_grid),
                                mode, n_bins);
    const auto b = line_profile(hcl(), a0_for(1.0),
                                OrientationEnsemble(8192, SamplingScheme::uniform_grid),
                                mode, n_bins);
    double l1 = 0.0;
    for (std::size_t i = 0; i < n_bins; ++i) {
      l1 += std::abs(a.bins[i].weight - b.bins[i].weight);
    }
    CHECK(l1 < 2.0 / static_cast<double>(n_bins));
  }
}

TEST_CASE("thread count does not change the result") {
  const OrientationEnsemble ens(999, SamplingScheme::gauss_legendre);
  ProfileOptions one;
  const auto ref = line_profile(hcl(), a0_for(1.2), ens, ProfileMode::full_n_level(12), 80, one);
  for (unsigned t : {2u, 3u, 8u}) {
    ProfileOptions many;
    many.threads = t;
    const auto s = line_profile(hcl(), a0_for(1.2), ens, ProfileMode::full_n_level(12), 80, many);
    REQUIRE(s.bins.size() == ref.bins.size());
    for (std::size_t i = 0; i < s.bins.size(); ++i) {
      CHECK(s.bins[i].nu == ref.bins[i].nu);
      CHECK(s.bins[i].weight == ref.bins[i].weight);
    }
  }
}

TEST_CASE("dipole weighting shifts absorption towards large |cos θ|") {
  const OrientationEnsemble ens(2048, SamplingScheme::uniform_grid);
  ProfileOptions dip;
  dip.dipole_weighting = true;
  const auto plain = line_profile(hcl(), a0_for(1.0), ens, ProfileMode::two_level(), 40);
  const auto weighted = line_profile(hcl(), a0_for(1.0), ens, ProfileMode::two_level(), 40, dip);
  double mean_plain = 0.0;
  double mean_weighted = 0.0;
  for (std::size_t i = 0; i < 40; ++i) {
    mean_plain += plain.bins[i].nu * plain.bins[i].weight;
    mean_weighted += weighted.bins[i].nu * weighted.bins[i].weight;
  }
  CHECK(mean_weighted > mean_plain);
  CHECK(total_weight(weighted) == near(1.0, 1e-12));
}

TEST_CASE("line profile argument checks") {
  const OrientationEnsemble ens(16, SamplingScheme::uniform_grid);
  CHECK_THROWS_AS(line_profile(hcl(), TeslaMeters(-1e-6), ens, ProfileMode::two_level(), 8),
                  InvalidArgument);
  CHECK_THROWS_AS(line_profile(hcl(), a0_for(1.0), ens, ProfileMode::two_level(), 0),
                  InvalidArgument);
  CHECK_THROWS_AS(line_profile(hcl(), a0_for(1.0), ens, ProfileMode::full_n_level(1), 8),
                  InvalidArgument);
  const std::vector<OrientationNode> bad{{1.5, 1.0}};
  CHECK_THROWS_AS(line_profile_from_nodes(hcl(), a0_for(1.0), bad, ProfileMode::two_level(), 8),
                  InvalidArgument);
  const std::vector<OrientationNode> weightless{{0.5, 0.0}, {-0.5, 0.0}};
  CHECK_THROWS_AS(
      line_profile_from_nodes(hcl(), a0_for(1.0), weightless, ProfileMode::two_level(), 8),
      InvalidArgument);
  CHECK_THROWS_AS(line_profile_from_nodes(hcl(), a0_for(1.0), std::vector<OrientationNode>{},
                                          ProfileMode::two_level(), 8),
                  InvalidArgument);
}

TEST_CASE("convergence study") {
  const std::vector<std::size_t> levels{64, 2, 8, 4, 16, 32};
  const auto rows = convergence_study(1.0, levels);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].n_levels == 2);
  CHECK(rows[0].nu == near(std::sqrt(5.0), 1e-13));
  CHECK(rows[5].n_levels == 64);
  CHECK(std::abs(rows[5].nu - 1.0) < 1e-6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].nu <= rows[i - 1].nu + 1e-12);
  }
  // Loose checks against an independent dense evaluation.
  CHECK(rows[1].nu == near(1.288, 1e-3));
  CHECK(rows[2].nu == near(1.00235, 1e-5));

  const std::vector<std::size_t> bad{2, 1};
  CHECK_THROWS_AS(convergence_study(1.0, bad), InvalidArgument);
  CHECK(convergence_study(1.0, std::vector<std::size_t>{}).empty());
}

TEST_CASE("truncated transition ratio depends on r only through r²") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ratio(0.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double r = ratio(rng);
    const auto mode = ProfileMode::full_n_level(2 + static_cast<std::size_t>(i % 20));
    CHECK(transition_ratio(r, mode) == transition_ratio(-r, mode));
  }
}

}  // TEST_SUITE
