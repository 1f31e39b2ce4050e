#include "abspec/runner.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abspec/coil.hpp"
#include "abspec/csv.hpp"
#include "abspec/eigensolver.hpp"
#include "abspec/error.hpp"
#include "abspec/oscillator.hpp"
#include "abspec/spectrum.hpp"

namespace abspec {

namespace {

class Summary {
 public:
  void add(std::string_view name, double value, std::string_view unit) {
    std::string line(name);
    line += " = ";
    line += format_number(value);
    if (!unit.empty()) {
      line += ' ';
      line += unit;
    }
    lines_.push_back(std::move(line));
  }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  std::vector<std::string> lines_;
};

void add_molecule(Summary& s, const MoleculeSpec& mol) {
  s.add("reduced_mass", reduced_mass(mol).value(), "u");
  s.add("reduced_rest_energy", reduced_rest_energy(mol).value(), "eV");
  s.add("hbar_omega0", mol.hbar_omega0().value(), "eV");
}

// Vector potential acting on a molecule parallel to A.
TeslaMeters source_a0(const RunConfig& cfg, const MoleculeSpec& mol) {
  if (cfg.coupling) {
    if (cfg.coupling->kind == CouplingSource::Kind::a0) {
      return TeslaMeters(cfg.coupling->value);
    }
    return coupling_from_ratio(cfg.coupling->value, mol).a0;
  }
  return a_z_on_axis(*cfg.toroid, Meters(0.0));
}

// A ratio source is used directly so that r is not round-tripped through A₀.
CouplingParams source_coupling(const RunConfig& cfg, const MoleculeSpec& mol,
                               double cos_theta) {
  if (cfg.coupling && cfg.coupling->kind == CouplingSource::Kind::ratio) {
    CouplingParams cp = coupling_from_ratio(cfg.coupling->value * cos_theta, mol);
    cp.a0 = TeslaMeters(cfg.coupling->value / ratio_per_tesla_meter(mol));
    cp.cos_theta = cos_theta;
    return cp;
  }
  return coupling_alpha(source_a0(cfg, mol), cos_theta, mol);
}

void add_coupling(Summary& s, const CouplingParams& cp) {
  s.add("a0", cp.a0.value(), "T*m");
  s.add("cos_theta", cp.cos_theta, "");
  s.add("alpha", cp.alpha.value(), "eV");
  s.add("ratio_r", cp.ratio_r, "");
}

RunArtifacts run_eigen(const RunConfig& cfg) {
  const MoleculeSpec& mol = cfg.molecule->spec;
  const CouplingParams cp = source_coupling(cfg, mol, cfg.cos_theta);
  const EigenResult ev =
      eigenvalues(phase_reduce(build_hamiltonian(cfg.n_levels, cp, mol)));

  std::string csv = "index,energy_ev\n";
  for (std::size_t i = 0; i < ev.eigenvalues.size(); ++i) {
    csv += std::to_string(i) + "," + format_number(ev.eigenvalues[i]) + "\n";
  }

  Summary s;
  add_molecule(s, mol);
  add_coupling(s, cp);
  const TwoLevelResult two = two_level_energies(cp, mol);
  s.add("two_level_e_minus", two.e_minus.value(), "eV");
  s.add("two_level_e_plus", two.e_plus.value(), "eV");
  s.add("two_level_transition_ratio", two.transition_ratio, "");
  s.add("n_levels", static_cast<double>(cfg.n_levels), "");
  if (cfg.n_levels >= 2) {
    const double gap = ev.eigenvalues[1] - ev.eigenvalues[0];
    s.add("transition_energy", gap, "eV");
    s.add("transition_ratio", gap / mol.hbar_omega0().value(), "");
  }
  s.add("exact_ground_energy", displaced_spectrum_oracle(1, cp, mol)[0], "eV");
  s.add("ql_iterations", static_cast<double>(ev.iterations), "");
  s.add("residual_bound", ev.residual_bound, "eV");
  return {std::move(csv), s.take(), {}};
}

RunArtifacts run_spectrum(const RunConfig& cfg) {
  const MoleculeSpec& mol = cfg.molecule->spec;
  const TeslaMeters a0 = source_a0(cfg, mol);
  const ProfileMode mode = cfg.spectrum_mode == ProfileMode::Kind::two_level
                               ? ProfileMode::two_level()
                               : ProfileMode::full_n_level(cfg.n_levels);
  ProfileOptions opts;
  opts.binning = cfg.binning;
  opts.dipole_weighting = cfg.dipole_weighting;
  opts.threads = cfg.threads;
  const Spectrum spec = line_profile(mol, a0, OrientationEnsemble(cfg.ensemble_size, cfg.scheme),
                                     mode, cfg.n_bins, opts);

  std::string csv = "nu,weight\n";
  for (const auto& bin : spec.bins) {
    csv += format_number(bin.nu) + "," + format_number(bin.weight) + "\n";
  }

  const double hw = mol.hbar_omega0().value();
  Summary s;
  add_molecule(s, mol);
  s.add("a0", a0.value(), "T*m");
  s.add("ratio_r0", spec.ratio_r0, "");
  s.add("nu_min", spec.nu_min, "");
  s.add("nu_max", spec.nu_max, "");
  s.add("line_low_edge", spec.nu_min * hw, "eV");
  s.add("line_high_edge", spec.nu_max * hw, "eV");
  s.add("line_width", (spec.nu_max - spec.nu_min) * hw, "eV");
  s.add("bins", static_cast<double>(spec.bins.size()), "");
  return {std::move(csv), s.take(), {}};
}

RunArtifacts run_converge(const RunConfig& cfg) {
  const MoleculeSpec& mol = cfg.molecule->spec;
  const double r0 = source_coupling(cfg, mol, 1.0).ratio_r;
  const auto rows = convergence_study(r0, cfg.n_levels_list);

  std::string csv = "n_levels,nu\n";
  for (const auto& row : rows) {
    csv += std::to_string(row.n_levels) + "," + format_number(row.nu) + "\n";
  }
  Summary s;
  add_molecule(s, mol);
  s.add("ratio_r0", r0, "");
  s.add("two_level_nu", transition_ratio(r0, ProfileMode::two_level()), "");
  s.add("exact_nu", 1.0, "");
  s.add("largest_n_levels", static_cast<double>(rows.back().n_levels), "");
  s.add("largest_n_nu", rows.back().nu, "");
  return {std::move(csv), s.take(), {}};
}

std::vector<std::string> toroid_warnings(const ToroidSpec& t) {
  std::vector<std::string> w;
  if (auto msg = thin_torus_warning(t)) w.push_back(*msg);
  return w;
}

RunArtifacts run_coil(const RunConfig& cfg) {
  const ToroidSpec& t = *cfg.toroid;
  const double b = t.revolution_radius().value();
  const ZGrid grid = cfg.z_grid.value_or(ZGrid{-5.0 * b, 5.0 * b, 101});

  std::string csv = "z_m,a_z_tm\n";
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double z = grid.points == 1
                         ? grid.min_m
                         : grid.min_m + (grid.max_m - grid.min_m) *
                                            static_cast<double>(i) /
                                            static_cast<double>(grid.points - 1);
    csv += format_number(z) + "," + format_number(a_z_on_axis(t, Meters(z)).value()) +
           "\n";
  }
  const double centre = a_z_on_axis(t, Meters(0.0)).value();
  const double contour = a0_gauge_independent(t).value();
  Summary s;
  s.add("ampere_turns", t.ampere_turns(), "A");
  s.add("a_z_centre", centre, "T*m");
  s.add("a0_gauge_independent", contour, "T*m");
  s.add("centre_to_contour_ratio", centre / contour, "");
  return {std::move(csv), s.take(), toroid_warnings(t)};
}

RunArtifacts run_design(const RunConfig& cfg) {
  const MoleculeSpec& mol = cfg.molecule->spec;
  const double target = *cfg.target_ratio;
  const ToroidSpec unit = cfg.toroid->with_current(Amperes(1.0));
  const double per_ampere = a_z_on_axis(unit, Meters(0.0)).value();
  const double contour_per_ampere = a0_gauge_independent(unit).value();
  const double ratio_per_tm = ratio_per_tesla_meter(mol);
  const double current = required_current(*cfg.toroid, mol, target).value();
  const ToroidSpec driven = cfg.toroid->with_current(Amperes(current));
  const double a0 = a_z_on_axis(driven, Meters(0.0)).value();
  const double achieved = coupling_alpha(TeslaMeters(a0), 1.0, mol).ratio_r;

  struct Row {
    const char* name;
    double value;
    const char* unit;
  };
  const Row rows[] = {
      {"reduced_mass", reduced_mass(mol).value(), "u"},
      {"reduced_rest_energy", reduced_rest_energy(mol).value(), "eV"},
      {"hbar_omega0", mol.hbar_omega0().value(), "eV"},
      {"target_ratio", target, "1"},
      {"ratio_per_vector_potential", ratio_per_tm, "1/(T*m)"},
      {"required_vector_potential", target / ratio_per_tm, "T*m"},
      {"vector_potential_per_ampere", per_ampere, "T*m/A"},
      {"required_current", current, "A"},
      {"ampere_turns", driven.ampere_turns(), "A"},
      {"achieved_ratio", achieved, "1"},
      {"alpha", achieved * mol.hbar_omega0().value(), "eV"},
      {"parallel_transition_ratio", transition_ratio(achieved, ProfileMode::two_level()), "1"},
      {"contour_vector_potential_at_required_current", contour_per_ampere * current, "T*m"},
      {"contour_required_current", target / (ratio_per_tm * contour_per_ampere), "A"},
  };
  std::string csv = "quantity,value,unit\n";
  Summary s;
  for (const auto& row : rows) {
    csv += std::string(row.name) + "," + format_number(row.value) + "," + row.unit + "\n";
    s.add(row.name, row.value, std::string_view(row.unit) == "1" ? "" : row.unit);
  }
  return {std::move(csv), s.take(), toroid_warnings(*cfg.toroid)};
}

void report_error(std::ostream& err, std::string_view kind, std::string_view field,
                  std::string_view message) {
  std::string clean(message);
  for (char& c : clean) {
    if (c == '"' || c == '\n') c = '\'';
  }
  err << "error kind=" << kind << " field=" << (field.empty() ? "-" : field)
      << " message=\"" << clean << "\"\n";
}

}  // namespace

RunArtifacts execute(const RunConfig& config) {
  switch (config.command) {
    case Command::eigen:
      return run_eigen(config);
    case Command::spectrum:
      return run_spectrum(config);
    case Command::converge:
      return run_converge(config);
    case Command::coil:
      return run_coil(config);
    case Command::design:
      return run_design(config);
  }
  throw InvalidArgument("unhandled command");
}

std::string output_path(const RunConfig& config) {
  if (!config.output.empty()) return config.output;
  return std::string(command_name(config.command)) + ".csv";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunArtifacts artifacts;
  try {
    artifacts = execute(config);
  } catch (const ConvergenceError& e) {
    report_error(err, "computation", "", e.what());
    return kExitComputation;
  } catch (const InvalidArgument& e) {
    report_error(err, "config", "", e.what());
    return kExitConfig;
  }
  const std::string path = output_path(config);
  try {
    write_file_atomically(path, artifacts.csv);
  } catch (const IoError& e) {
    report_error(err, "io", "output", e.what());
    return kExitIo;
  }
  for (const auto& w : artifacts.warnings) err << "warning: " << w << "\n";
  out << "command = " << command_name(config.command) << "\n";
  for (const auto& line : artifacts.summary) out << line << "\n";
  out << "output = " << path << "\n";
  return kExitOk;
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Vibrational spectra of a diatomic molecule in a constant vector potential"};
  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  app.add_option("command", command, "eigen | spectrum | coil | design | converge")
      ->required();
  app.add_option("config", config_path, "JSON run configuration")->required();
  app.add_option("--set", overrides, "Override a configuration field (key=value)")
      ->take_all();
  app.add_option("--out", out_path, "Output CSV path");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "config", "argv", e.what());
    return kExitConfig;
  }

  std::string text;
  {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      report_error(err, "io", "config", "cannot read " + config_path);
      return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  RunConfig cfg;
  try {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw ConfigError("", "configuration is not a JSON object");
    }
    doc["command"] = command;
    for (const auto& o : overrides) apply_override(doc, o);
    if (!out_path.empty()) doc["output"] = out_path;
    cfg = parse_config_json(doc);
  } catch (const ConfigError& e) {
    report_error(err, "config", e.field(), e.what());
    return kExitConfig;
  }
  return run(cfg, out, err);
}

}  // namespace abspec
