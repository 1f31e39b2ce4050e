#ifndef ABSPEC_CONFIG_HPP
#define ABSPEC_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abspec/coil.hpp"
#include "abspec/molecule.hpp"
#include "abspec/spectrum.hpp"

namespace abspec {

enum class Command { eigen, spectrum, coil, design, converge };

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

struct MoleculeSource {
  /// Preset the molecule was derived from; empty for explicit masses.
  std::string preset;
  MoleculeSpec spec;

  bool operator==(const MoleculeSource&) const = default;
};

struct CouplingSource {
  enum class Kind { a0, ratio };
  Kind kind = Kind::ratio;
  /// T·m for a0; dimensionless r₀ (at cosθ = 1) for ratio.
  double value = 0.0;

  bool operator==(const CouplingSource&) const = default;
};

struct ZGrid {
  double min_m = 0.0;
  double max_m = 0.0;
  std::size_t points = 0;

  bool operator==(const ZGrid&) const = default;
};

/// One fully validated computation. A toroid supplies the coupling through
/// A_z(z = 0) when no explicit coupling is given.
struct RunConfig {
  Command command = Command::eigen;
  std::optional<MoleculeSource> molecule;
  std::optional<ToroidSpec> toroid;
  std::optional<CouplingSource> coupling;
  double cos_theta = 1.0;
  std::size_t n_levels = 2;
  std::vector<std::size_t> n_levels_list{2, 4, 8, 16, 32, 64};
  ProfileMode::Kind spectrum_mode = ProfileMode::Kind::two_level;
  std::size_t ensemble_size = 4096;
  SamplingScheme scheme = SamplingScheme::uniform_grid;
  std::size_t n_bins = 256;
  Binning binning = Binning::linear;
  bool dipole_weighting = false;
  std::optional<double> target_ratio;
  std::optional<ZGrid> z_grid;
  unsigned threads = 1;
  std::string output;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a JSON configuration document. Throws ConfigError
/// naming the offending field (dotted path).
RunConfig parse_config(std::string_view text);
RunConfig parse_config_json(const nlohmann::json& doc);

/// Applies a `key=value` override to a configuration document before
/// validation. Dotted keys address nested objects; the value is taken as
/// JSON when it parses, as a string otherwise.
void apply_override(nlohmann::json& doc, std::string_view assignment);

nlohmann::json to_json(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

}  // namespace abspec

#endif  // ABSPEC_CONFIG_HPP
