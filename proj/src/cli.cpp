#include "irabi/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "irabi/errors.hpp"
#include "irabi/evolution.hpp"
#include "irabi/io.hpp"
#include "irabi/limits.hpp"
#include "irabi/susy.hpp"
#include "irabi/sweep.hpp"
#include "irabi/tridiag_eigen.hpp"

namespace irabi::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct RunConfig {
  double omega = 1.0;
  double omega0 = 0.0;
  double g = 0.0;
  double k = 0.5;
  std::string parity = "+";
  std::size_t size = 0;  // required where used
  std::size_t levels = 0;
  std::string format = "csv";
  bool hamiltonian = false;

  std::string param = "omega0";
  double from = 0.0;
  double to = 3.0;
  std::size_t points = 121;
  double gap_tol = 1e-6;
  bool svg = false;

  double tmax = 40.0 * std::numbers::pi;
  std::size_t samples = 2048;
  double threshold = 0.5;
  std::string initial;
  std::size_t site = 0;
  bool dump_state = false;

  double tol = 1e-6;
  std::vector<std::size_t> sizes;

  std::string out_dir = ".";
};

using Field = std::variant<double RunConfig::*, std::size_t RunConfig::*, std::string RunConfig::*,
                           bool RunConfig::*, std::vector<std::size_t> RunConfig::*>;

struct OptionSpec {
  const char* name;
  Field field;
  const char* help;
};

const std::vector<OptionSpec>& option_table() {
  static const std::vector<OptionSpec> table = {
      {"omega", &RunConfig::omega, "field frequency (> 0)"},
      {"omega0", &RunConfig::omega0, "qubit frequency (>= 0)"},
      {"g", &RunConfig::g, "coupling (>= 0)"},
      {"k", &RunConfig::k, "Bargmann parameter (> 0)"},
      {"parity", &RunConfig::parity, "parity sector: + or - (spectrum also accepts 'both')"},
      {"size", &RunConfig::size, "lattice truncation N"},
      {"levels", &RunConfig::levels, "number of lowest levels reported"},
      {"format", &RunConfig::format, "csv, json or both"},
      {"hamiltonian", &RunConfig::hamiltonian, "also write the chain matrices as JSON"},
      {"param", &RunConfig::param, "swept parameter: omega0 or g"},
      {"from", &RunConfig::from, "grid start"},
      {"to", &RunConfig::to, "grid end"},
      {"points", &RunConfig::points, "grid points"},
      {"gap-tol", &RunConfig::gap_tol, "same-parity gap below which a crossing is reported"},
      {"svg", &RunConfig::svg, "also write an SVG plot"},
      {"tmax", &RunConfig::tmax, "final time (units of 1/omega)"},
      {"samples", &RunConfig::samples, "uniform time samples on [0, tmax]"},
      {"threshold", &RunConfig::threshold, "revival threshold on the site-0 intensity"},
      {"initial", &RunConfig::initial, "JSON amplitude file for the initial state"},
      {"site", &RunConfig::site, "initially excited waveguide when no amplitude file is given"},
      {"dump-state", &RunConfig::dump_state, "write initial and final amplitudes as JSON"},
      {"tol", &RunConfig::tol, "isospectrality tolerance"},
      {"sizes", &RunConfig::sizes, "strictly increasing truncations"},
  };
  return table;
}

const std::vector<std::string>& command_options(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> options = {
      {"spectrum", {"omega", "omega0", "g", "k", "parity", "size", "levels", "format", "hamiltonian"}},
      {"sweep", {"omega", "omega0", "g", "k", "param", "from", "to", "points", "levels", "size", "gap-tol", "svg"}},
      {"evolve",
       {"omega", "omega0", "g", "k", "parity", "size", "tmax", "samples", "threshold", "initial", "site",
        "dump-state", "svg"}},
      {"susy", {"omega", "omega0", "g", "k", "size", "levels", "tol"}},
      {"converge", {"omega", "omega0", "g", "k", "parity", "sizes", "levels"}},
  };
  static const std::vector<std::string> none;
  const auto it = options.find(command);
  return it == options.end() ? none : it->second;
}

const OptionSpec& find_spec(const std::string& name) {
  for (const auto& spec : option_table())
    if (name == spec.name) return spec;
  throw std::logic_error("unknown option " + name);
}

/// Defaults that differ from RunConfig's per command.
RunConfig defaults_for(const std::string& command) {
  RunConfig c;
  if (command == "sweep") {
    c.levels = 8;
    c.size = 300;
  } else if (command == "susy") {
    c.levels = 10;
  } else if (command == "converge") {
    c.levels = 1;
  }
  return c;
}

void apply_json(RunConfig& config, const std::string& command, const json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  const auto& allowed = command_options(command);
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown config key '" + key + "' for command " + command);
    const auto& spec = find_spec(key);
    try {
      std::visit(
          [&](auto member) {
            using T = std::remove_reference_t<decltype(config.*member)>;
            if constexpr (std::is_same_v<T, std::size_t>) {
              if (!value.is_number_unsigned()) throw ConfigError("config key '" + key + "' must be a non-negative integer");
            } else if constexpr (std::is_same_v<T, std::vector<std::size_t>>) {
              for (const auto& v : value)
                if (!v.is_number_unsigned()) throw ConfigError("config key '" + key + "' must list non-negative integers");
            }
            config.*member = value.get<T>();
          },
          spec.field);
    } catch (const json::exception&) {
      throw ConfigError("config key '" + key + "' has the wrong type");
    }
  }
}

json effective_config(const RunConfig& config, const std::string& command) {
  json j = json::object();
  for (const auto& name : command_options(command)) {
    std::visit([&](auto member) { j[name] = config.*member; }, find_spec(name).field);
  }
  return j;
}

void bind_options(CLI::App& sub, RunConfig& config, const std::string& command) {
  for (const auto& name : command_options(command)) {
    const auto& spec = find_spec(name);
    const std::string flag = "--" + name;
    std::visit(
        [&](auto member) {
          using T = std::remove_reference_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, bool>) {
            sub.add_flag(flag, config.*member, spec.help);
          } else if constexpr (std::is_same_v<T, std::vector<std::size_t>>) {
            sub.add_option(flag, config.*member, spec.help)->delimiter(',');
          } else {
            sub.add_option(flag, config.*member, spec.help);
          }
        },
        spec.field);
  }
}

/// Finds "--config PATH" or "--config=PATH" among the arguments.
std::optional<std::string> config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a path");
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return std::nullopt;
}

ModelParams model_params(const RunConfig& c) { return ModelParams(c.omega, c.omega0, c.g, c.k); }

std::size_t require_size(const RunConfig& c) {
  if (c.size == 0) throw ConfigError("size must be >= 1 (no default truncation)");
  return c.size;
}

class Outputs {
 public:
  Outputs(fs::path dir, std::ostream& out) : dir_(std::move(dir)), out_(out) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir_.string());
  }
  void write(const std::string& name, std::string_view content) {
    io::write_file_atomic(dir_ / name, content);
    out_ << "wrote " << (dir_ / name).string() << '\n';
  }
  void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

 private:
  fs::path dir_;
  std::ostream& out_;
};

json meta(const std::string& command, const RunConfig& config) {
  return {{"command", command}, {"config", effective_config(config, command)}};
}

void cmd_spectrum(const RunConfig& c, Outputs& outputs) {
  const ModelParams params = model_params(c);
  const std::size_t size = require_size(c);
  const std::size_t levels = c.levels == 0 ? size : c.levels;
  if (levels > size) throw ConfigError("levels must not exceed size");
  if (c.format != "csv" && c.format != "json" && c.format != "both")
    throw ConfigError("format must be csv, json or both");

  std::vector<Parity> parities;
  if (c.parity == "both") {
    parities = {Parity::positive, Parity::negative};
  } else {
    parities = {parse_parity(c.parity)};
  }

  std::vector<SpectrumResult> spectra;
  json hamiltonians = json::array();
  for (Parity p : parities) {
    const auto h = build_hamiltonian(params, p, size);
    if (c.hamiltonian) hamiltonians.push_back(io::to_json(h));
    auto s = eigen_tridiagonal(h);
    s.eigenvalues.resize(levels);
    spectra.push_back(std::move(s));
  }

  json m = meta("spectrum", c);
  m["valid_regime"] = params.valid();
  if (c.format == "csv" || c.format == "both") outputs.write("spectrum.csv", io::spectrum_csv(spectra, levels));
  if (c.format == "json" || c.format == "both") {
    json j = meta("spectrum", c);
    j["spectra"] = json::array();
    for (const auto& s : spectra) j["spectra"].push_back(io::to_json(s));
    outputs.write_json("spectrum.json", j);
  }
  if (c.hamiltonian) outputs.write_json("hamiltonian.json", hamiltonians);
  outputs.write_json("spectrum_meta.json", m);
}

void cmd_sweep(const RunConfig& c, Outputs& outputs) {
  const ModelParams base = model_params(c);
  const SweptParameter which = parse_swept_parameter(c.param);
  const auto grid = linear_grid(c.from, c.to, c.points);
  // Validates every grid point up front so bad ranges exit with a config error.
  for (double v : grid) (void)at_parameter(base, which, v);

  const auto sweep = sweep_spectrum(base, which, grid, c.levels, c.size);
  const auto crossings = analyze_crossings(sweep, c.gap_tol);

  json m = meta("sweep", c);
  json unconverged = json::array();
  for (std::size_t i = 0; i < sweep.grid.size(); ++i)
    if (!sweep.converged[i]) unconverged.push_back(sweep.grid[i]);
  m["converged"] = sweep.converged;
  m["unconverged_points"] = std::move(unconverged);

  outputs.write("sweep_branches.csv", io::sweep_csv(sweep));
  json cj = io::to_json(crossings);
  cj["config"] = effective_config(c, "sweep");
  outputs.write_json("sweep_crossings.json", cj);
  if (c.svg) outputs.write("sweep.svg", io::sweep_svg(sweep));
  outputs.write_json("sweep_meta.json", m);
}

void cmd_evolve(const RunConfig& c, Outputs& outputs) {
  const ModelParams params = model_params(c);
  const std::size_t size = require_size(c);
  const Parity parity = parse_parity(c.parity);
  if (!params.valid()) throw DivergentRegime("divergent regime: evolution requires g < omega/2");

  LatticeState initial;
  if (!c.initial.empty()) {
    json j;
    try {
      j = json::parse(io::read_file(c.initial));
    } catch (const json::exception& e) {
      throw ConfigError("cannot parse amplitude file: " + std::string(e.what()));
    }
    initial = io::lattice_state_from_json(j, parity);
    if (initial.parity != parity) throw ConfigError("amplitude file parity does not match --parity");
    if (initial.amplitudes.size() != size) throw ConfigError("amplitude file length does not match --size");
    initial.time = 0.0;
  } else {
    initial = site_state(size, c.site, parity);
  }

  const auto h = build_hamiltonian(params, parity, size);
  const auto trace = evolve(h, initial, c.tmax, c.samples);
  const auto revivals = detect_revivals(trace, c.threshold);

  json m = meta("evolve", c);
  m["norm_drift"] = trace.norm_drift;
  m["last_site_leakage"] = trace.leakage;
  m["leakage_warning"] = trace.leakage_warning;

  outputs.write("evolve_trace.csv", io::trace_csv(trace));
  json rj = io::to_json(revivals);
  rj["config"] = effective_config(c, "evolve");
  outputs.write_json("evolve_revivals.json", rj);
  if (c.dump_state) {
    outputs.write_json("evolve_initial.json", io::to_json(initial));
    outputs.write_json("evolve_final.json", io::to_json(trace.final_state));
  }
  if (c.svg) outputs.write("evolve.svg", io::trace_svg(trace));
  outputs.write_json("evolve_meta.json", m);
}

void cmd_susy(const RunConfig& c, Outputs& outputs) {
  const ModelParams params = model_params(c);
  const std::size_t size = require_size(c);
  const auto pair = build_susy_pair(params, size);
  const auto report = verify_isospectrality(pair, c.levels, c.tol);

  // Convergence of both partners over {N/4, N/2, N}.
  std::vector<std::size_t> sizes;
  for (std::size_t n : {size / 4, size / 2, size})
    if (n >= c.levels && (sizes.empty() || n > sizes.back())) sizes.push_back(n);
  json convergence = nullptr;
  if (sizes.size() >= 2) {
    const auto lower = ground_energy_vs_size(params, Parity::positive, sizes, c.levels);
    const auto upper = ground_energy_vs_size(params.with_k(params.k() + 0.5), Parity::positive, sizes, c.levels);
    convergence = {{"sizes", sizes}, {"h_minus_converged", lower.all_converged()},
                   {"h_plus_converged", upper.all_converged()}};
  }

  const auto [closed_minus, closed_plus] = closed_form_susy_energies(params, c.levels);
  json j = meta("susy", c);
  j["report"] = io::to_json(report);
  j["gap"] = pair.gap;
  j["alpha"] = alpha_parameter(params);
  j["k_partner"] = pair.k_partner();
  j["closed_form_minus"] = closed_minus;
  j["closed_form_plus"] = closed_plus;
  j["convergence"] = std::move(convergence);

  outputs.write_json("susy_report.json", j);
  outputs.write("susy_report.csv", io::isospectrality_csv(report));
  outputs.write_json("susy_meta.json", meta("susy", c));
}

void cmd_converge(const RunConfig& c, Outputs& outputs) {
  const ModelParams params = model_params(c);
  const Parity parity = parse_parity(c.parity);
  const auto report = ground_energy_vs_size(params, parity, c.sizes, c.levels);

  json m = meta("converge", c);
  json verdicts = json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back({{"converged", v.converged}, {"value", v.value}, {"last_delta", v.last_delta}});
  m["tolerance"] = report.tolerance;
  m["verdicts"] = std::move(verdicts);
  m["valid_regime"] = params.valid();

  outputs.write("converge.csv", io::convergence_csv(report));
  outputs.write_json("converge_meta.json", m);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands = {"spectrum", "sweep", "evolve", "susy", "converge"};

  CLI::App app{"Intensity-dependent quantum Rabi model: spectra, SUSY partners and lattice dynamics", "irabi"};
  app.require_subcommand(1);

  const std::string command = args.empty() ? std::string() : args.front();
  RunConfig config = defaults_for(command);
  std::string config_file;
  std::string out_dir = ".";

  try {
    if (std::find(commands.begin(), commands.end(), command) != commands.end()) {
      if (const auto path = config_path(args)) {
        json j;
        try {
          j = json::parse(io::read_file(*path));
        } catch (const json::exception& e) {
          throw ConfigError("cannot parse config file: " + std::string(e.what()));
        }
        apply_json(config, command, j);
      }
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    if (name != command) continue;
    bind_options(*sub, config, name);
    sub->add_option("--config", config_file, "JSON file with option values (flags override it)");
    sub->add_option("--out-dir", out_dir, "directory for output files");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    Outputs outputs(out_dir, out);
    if (command == "spectrum") cmd_spectrum(config, outputs);
    else if (command == "sweep") cmd_sweep(config, outputs);
    else if (command == "evolve") cmd_evolve(config, outputs);
    else if (command == "susy") cmd_susy(config, outputs);
    else cmd_converge(config, outputs);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace irabi::cli
