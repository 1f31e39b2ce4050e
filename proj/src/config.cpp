#include "abspec/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "abspec/error.hpp"

namespace abspec {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 5> kCommands{{
    {Command::eigen, "eigen"},
    {Command::spectrum, "spectrum"},
    {Command::coil, "coil"},
    {Command::design, "design"},
    {Command::converge, "converge"},
}};

std::string join(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ConfigError(join(path, item.key()), "unknown field");
    }
  }
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw ConfigError(path, "expected an object");
  return v;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "expected a finite number");
  return d;
}

std::size_t as_count(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer()) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  throw ConfigError(path, "expected an integer");
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw ConfigError(path, "expected true or false");
  return v.get<bool>();
}

const json* find(const json& obj, std::string_view key) {
  auto it = obj.find(std::string(key));
  return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const std::string& path,
                    std::string_view key) {
  const json* v = find(obj, key);
  if (v == nullptr) throw ConfigError(join(path, key), "missing field");
  return *v;
}

MoleculeSource parse_molecule(const json& v) {
  const std::string path = "molecule";
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    auto preset = molecule_preset(name);
    if (!preset) throw ConfigError(path, "unknown molecule preset '" + name + "'");
    return {name, *preset};
  }
  require_object(v, path);
  try {
    if (const json* preset_name = find(v, "preset")) {
      reject_unknown_keys(v, path, {"preset", "hbar_omega0_ev"});
      const std::string name = as_string(*preset_name, join(path, "preset"));
      auto preset = molecule_preset(name);
      if (!preset) {
        throw ConfigError(join(path, "preset"),
                          "unknown molecule preset '" + name + "'");
      }
      MoleculeSpec spec = *preset;
      if (const json* hw = find(v, "hbar_omega0_ev")) {
        spec = spec.with_hbar_omega0(
            ElectronVolts(as_number(*hw, join(path, "hbar_omega0_ev"))));
      }
      return {name, spec};
    }
    reject_unknown_keys(v, path, {"mass_1_u", "mass_2_u", "hbar_omega0_ev"});
    const double m1 = as_number(require(v, path, "mass_1_u"), join(path, "mass_1_u"));
    const double m2 = as_number(require(v, path, "mass_2_u"), join(path, "mass_2_u"));
    const double hw =
        as_number(require(v, path, "hbar_omega0_ev"), join(path, "hbar_omega0_ev"));
    return {"", MoleculeSpec(AtomicMass(m1), AtomicMass(m2), ElectronVolts(hw))};
  } catch (const InvalidArgument& e) {
    throw ConfigError(path, e.what());
  }
}

ToroidSpec parse_toroid(const json& v, bool current_required) {
  const std::string path = "toroid";
  require_object(v, path);
  reject_unknown_keys(v, path,
                      {"inner_radius_m", "revolution_radius_m", "n_loops", "current_a"});
  const double a =
      as_number(require(v, path, "inner_radius_m"), join(path, "inner_radius_m"));
  const double b = as_number(require(v, path, "revolution_radius_m"),
                             join(path, "revolution_radius_m"));
  const std::size_t loops = as_count(require(v, path, "n_loops"), join(path, "n_loops"));
  double current = 0.0;
  if (const json* c = find(v, "current_a")) {
    current = as_number(*c, join(path, "current_a"));
  } else if (current_required) {
    throw ConfigError(join(path, "current_a"), "missing field");
  }
  try {
    return ToroidSpec(Meters(a), Meters(b), loops, Amperes(current));
  } catch (const InvalidArgument& e) {
    throw ConfigError(path, e.what());
  }
}

std::optional<CouplingSource> parse_coupling(const json& v) {
  const std::string path = "coupling";
  require_object(v, path);
  reject_unknown_keys(v, path, {"a0_tm", "ratio"});
  const json* a0 = find(v, "a0_tm");
  const json* ratio = find(v, "ratio");
  if (a0 != nullptr && ratio != nullptr) {
    throw ConfigError(path, "conflicting coupling sources");
  }
  if (a0 != nullptr) {
    return CouplingSource{CouplingSource::Kind::a0, as_number(*a0, join(path, "a0_tm"))};
  }
  if (ratio != nullptr) {
    return CouplingSource{CouplingSource::Kind::ratio,
                          as_number(*ratio, join(path, "ratio"))};
  }
  return std::nullopt;
}

void parse_spectrum_block(const json& v, RunConfig& cfg) {
  const std::string path = "spectrum";
  require_object(v, path);
  reject_unknown_keys(v, path,
                      {"mode", "samples", "scheme", "bins", "binning", "dipole_weighting"});
  if (const json* m = find(v, "mode")) {
    const std::string s = as_string(*m, join(path, "mode"));
    if (s == "two_level") {
      cfg.spectrum_mode = ProfileMode::Kind::two_level;
    } else if (s == "full_n_level") {
      cfg.spectrum_mode = ProfileMode::Kind::full_n_level;
    } else {
      throw ConfigError(join(path, "mode"), "expected two_level or full_n_level");
    }
  }
  if (const json* n = find(v, "samples")) cfg.ensemble_size = as_count(*n, join(path, "samples"));
  if (const json* s = find(v, "scheme")) {
    const std::string name = as_string(*s, join(path, "scheme"));
    if (name == "grid") {
      cfg.scheme = SamplingScheme::uniform_grid;
    } else if (name == "gauss_legendre") {
      cfg.scheme = SamplingScheme::gauss_legendre;
    } else {
      throw ConfigError(join(path, "scheme"), "expected grid or gauss_legendre");
    }
  }
  if (const json* b = find(v, "bins")) cfg.n_bins = as_count(*b, join(path, "bins"));
  if (const json* b = find(v, "binning")) {
    const std::string name = as_string(*b, join(path, "binning"));
    if (name == "linear") {
      cfg.binning = Binning::linear;
    } else if (name == "nearest") {
      cfg.binning = Binning::nearest;
    } else {
      throw ConfigError(join(path, "binning"), "expected linear or nearest");
    }
  }
  if (const json* d = find(v, "dipole_weighting")) {
    cfg.dipole_weighting = as_bool(*d, join(path, "dipole_weighting"));
  }
}

bool needs_coupling(Command c) {
  return c == Command::eigen || c == Command::spectrum || c == Command::converge;
}

void validate(const RunConfig& cfg) {
  const Command c = cfg.command;
  if (c != Command::coil && !cfg.molecule) {
    throw ConfigError("molecule", "missing field");
  }
  if ((c == Command::coil || c == Command::design) && !cfg.toroid) {
    throw ConfigError("toroid", "missing field");
  }
  if (needs_coupling(c)) {
    if (cfg.coupling && cfg.toroid) {
      throw ConfigError("coupling", "conflicting coupling sources");
    }
    if (!cfg.coupling && !cfg.toroid) {
      throw ConfigError("coupling", "missing field");
    }
  }
  if (c == Command::design && cfg.coupling) {
    throw ConfigError("coupling", "design derives the coupling from target_ratio");
  }
  if (c == Command::design) {
    if (!cfg.target_ratio) throw ConfigError("target_ratio", "missing field");
    if (!(*cfg.target_ratio > 0.0)) {
      throw ConfigError("target_ratio", "must be positive");
    }
  }
  if (!(std::abs(cfg.cos_theta) <= 1.0)) {
    throw ConfigError("cos_theta", "must lie in [-1, 1]");
  }
  if (c == Command::eigen && cfg.n_levels < 1) {
    throw ConfigError("n_levels", "must be at least 1");
  }
  if (c == Command::spectrum) {
    if (cfg.coupling && cfg.coupling->value < 0.0) {
      throw ConfigError("coupling", "spectrum needs a non-negative coupling");
    }
    if (cfg.toroid && cfg.toroid->current().value() < 0.0) {
      throw ConfigError("toroid.current_a",
                        "spectrum needs a non-negative vector potential");
    }
    if (cfg.spectrum_mode == ProfileMode::Kind::full_n_level && cfg.n_levels < 2) {
      throw ConfigError("n_levels", "full_n_level spectra need at least 2 levels");
    }
    if (cfg.ensemble_size < 2) throw ConfigError("spectrum.samples", "must be at least 2");
    if (cfg.n_bins < 1) throw ConfigError("spectrum.bins", "must be at least 1");
  }
  if (c == Command::converge) {
    if (cfg.n_levels_list.empty()) {
      throw ConfigError("n_levels_list", "must not be empty");
    }
    for (std::size_t n : cfg.n_levels_list) {
      if (n < 2) throw ConfigError("n_levels_list", "every entry must be at least 2");
    }
  }
  if (cfg.z_grid) {
    if (cfg.z_grid->points < 1) throw ConfigError("z_grid.points", "must be at least 1");
    if (cfg.z_grid->max_m < cfg.z_grid->min_m) {
      throw ConfigError("z_grid", "max_m must not be below min_m");
    }
  }
  if (cfg.threads < 1) throw ConfigError("threads", "must be at least 1");
}

}  // namespace

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

RunConfig parse_config(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ConfigError("", "configuration is not valid JSON");
  }
  return parse_config_json(doc);
}

RunConfig parse_config_json(const json& doc) {
  require_object(doc, "");
  reject_unknown_keys(doc, "",
                      {"command", "molecule", "toroid", "coupling", "cos_theta",
                       "n_levels", "n_levels_list", "spectrum", "target_ratio",
                       "z_grid", "threads", "output"});
  RunConfig cfg;
  const std::string name = as_string(require(doc, "", "command"), "command");
  const auto cmd = command_from_name(name);
  if (!cmd) throw ConfigError("command", "unknown command '" + name + "'");
  cfg.command = *cmd;

  if (const json* m = find(doc, "molecule")) cfg.molecule = parse_molecule(*m);
  if (const json* c = find(doc, "coupling")) cfg.coupling = parse_coupling(*c);
  if (const json* t = find(doc, "toroid")) {
    const bool current_required = cfg.command != Command::design;
    cfg.toroid = parse_toroid(*t, current_required);
  }
  if (const json* v = find(doc, "cos_theta")) cfg.cos_theta = as_number(*v, "cos_theta");
  if (const json* v = find(doc, "n_levels")) cfg.n_levels = as_count(*v, "n_levels");
  if (const json* v = find(doc, "n_levels_list")) {
    if (!v->is_array()) throw ConfigError("n_levels_list", "expected an array");
    cfg.n_levels_list.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      cfg.n_levels_list.push_back(
          as_count((*v)[i], "n_levels_list[" + std::to_string(i) + "]"));
    }
  }
  if (const json* v = find(doc, "spectrum")) parse_spectrum_block(*v, cfg);
  if (const json* v = find(doc, "target_ratio")) {
    cfg.target_ratio = as_number(*v, "target_ratio");
  }
  if (const json* v = find(doc, "z_grid")) {
    require_object(*v, "z_grid");
    reject_unknown_keys(*v, "z_grid", {"min_m", "max_m", "points"});
    ZGrid g;
    g.min_m = as_number(require(*v, "z_grid", "min_m"), "z_grid.min_m");
    g.max_m = as_number(require(*v, "z_grid", "max_m"), "z_grid.max_m");
    g.points = as_count(require(*v, "z_grid", "points"), "z_grid.points");
    cfg.z_grid = g;
  }
  if (const json* v = find(doc, "threads")) {
    const std::size_t t = as_count(*v, "threads");
    if (t > 1024) throw ConfigError("threads", "must be at most 1024");
    cfg.threads = static_cast<unsigned>(t);
  }
  if (const json* v = find(doc, "output")) cfg.output = as_string(*v, "output");

  validate(cfg);
  return cfg;
}

void apply_override(json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError(std::string(assignment), "override must have the form key=value");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  if (!doc.is_object()) throw ConfigError("", "configuration must be an object");
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigError(key, "empty path component in override");
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    if (!child.is_object()) {
      throw ConfigError(key.substr(0, dot), "cannot descend into a non-object");
    }
    node = &child;
    start = dot + 1;
  }
}

json to_json(const RunConfig& cfg) {
  json doc;
  doc["command"] = std::string(command_name(cfg.command));
  if (cfg.molecule) {
    const auto& m = *cfg.molecule;
    if (!m.preset.empty()) {
      doc["molecule"] = {{"preset", m.preset},
                         {"hbar_omega0_ev", m.spec.hbar_omega0().value()}};
    } else {
      doc["molecule"] = {{"mass_1_u", m.spec.mass_1().value()},
                         {"mass_2_u", m.spec.mass_2().value()},
                         {"hbar_omega0_ev", m.spec.hbar_omega0().value()}};
    }
  }
  if (cfg.toroid) {
    const auto& t = *cfg.toroid;
    doc["toroid"] = {{"inner_radius_m", t.inner_radius().value()},
                     {"revolution_radius_m", t.revolution_radius().value()},
                     {"n_loops", t.n_loops()},
                     {"current_a", t.current().value()}};
  }
  if (cfg.coupling) {
    const char* key = cfg.coupling->kind == CouplingSource::Kind::a0 ? "a0_tm" : "ratio";
    doc["coupling"] = {{key, cfg.coupling->value}};
  }
  doc["cos_theta"] = cfg.cos_theta;
  doc["n_levels"] = cfg.n_levels;
  doc["n_levels_list"] = cfg.n_levels_list;
  doc["spectrum"] = {
      {"mode", cfg.spectrum_mode == ProfileMode::Kind::two_level ? "two_level"
                                                                 : "full_n_level"},
      {"samples", cfg.ensemble_size},
      {"scheme", cfg.scheme == SamplingScheme::uniform_grid ? "grid" : "gauss_legendre"},
      {"bins", cfg.n_bins},
      {"binning", cfg.binning == Binning::linear ? "linear" : "nearest"},
      {"dipole_weighting", cfg.dipole_weighting},
  };
  if (cfg.target_ratio) doc["target_ratio"] = *cfg.target_ratio;
  if (cfg.z_grid) {
    doc["z_grid"] = {{"min_m", cfg.z_grid->min_m},
                     {"max_m", cfg.z_grid->max_m},
                     {"points", cfg.z_grid->points}};
  }
  doc["threads"] = cfg.threads;
  if (!cfg.output.empty()) doc["output"] = cfg.output;
  return doc;
}

std::string serialize_config(const RunConfig& config) {
  return to_json(config).dump(2) + "\n";
}

}  // namespace abspec
