#include "irabi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "irabi/errors.hpp"

namespace irabi::io {
namespace {

void append_row(std::string& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
}

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string color;
  bool dashed = false;
};

struct Panel {
  std::string label;
  std::vector<Series> series;
};

std::string svg_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string render_panels(const std::vector<Panel>& panels, const std::string& x_label) {
  constexpr double width = 800.0;
  constexpr double panel_height = 260.0;
  constexpr double margin_left = 70.0;
  constexpr double margin_right = 20.0;
  constexpr double margin_top = 20.0;
  constexpr double margin_bottom = 40.0;
  const double height = panel_height * static_cast<double>(panels.size());

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + svg_number(width) + "\" height=\"" +
         svg_number(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const auto& panel = panels[p];
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : panel.series) {
      for (double v : s.x) xmin = std::min(xmin, v), xmax = std::max(xmax, v);
      for (double v : s.y) ymin = std::min(ymin, v), ymax = std::max(ymax, v);
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    const double top = panel_height * static_cast<double>(p) + margin_top;
    const double plot_w = width - margin_left - margin_right;
    const double plot_h = panel_height - margin_top - margin_bottom;
    auto px = [&](double x) { return margin_left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    out += "<rect x=\"" + svg_number(margin_left) + "\" y=\"" + svg_number(top) + "\" width=\"" +
           svg_number(plot_w) + "\" height=\"" + svg_number(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text x=\"5\" y=\"" + svg_number(top + plot_h / 2) + "\" font-size=\"12\">" + panel.label + "</text>\n";
    out += "<text x=\"" + svg_number(margin_left) + "\" y=\"" + svg_number(top + plot_h + 15) +
           "\" font-size=\"10\">" + svg_number(xmin) + "</text>\n";
    out += "<text x=\"" + svg_number(margin_left + plot_w - 30) + "\" y=\"" + svg_number(top + plot_h + 15) +
           "\" font-size=\"10\">" + svg_number(xmax) + "</text>\n";
    out += "<text x=\"" + svg_number(margin_left - 45) + "\" y=\"" + svg_number(top + 10) +
           "\" font-size=\"10\">" + svg_number(ymax) + "</text>\n";
    out += "<text x=\"" + svg_number(margin_left - 45) + "\" y=\"" + svg_number(top + plot_h) +
           "\" font-size=\"10\">" + svg_number(ymin) + "</text>\n";
    out += "<text x=\"" + svg_number(margin_left + plot_w / 2) + "\" y=\"" + svg_number(top + plot_h + 30) +
           "\" font-size=\"12\">" + x_label + "</text>\n";

    for (const auto& s : panel.series) {
      out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.2\"";
      if (s.dashed) out += " stroke-dasharray=\"5,3\"";
      out += " points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (i > 0) out += ' ';
        out += svg_number(px(s.x[i])) + "," + svg_number(py(s.y[i]));
      }
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open output file " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ConfigError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot move output into place at " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json params_json(const ModelParams& params) {
  return {{"omega", params.omega()}, {"omega0", params.omega0()}, {"g", params.g()}, {"k", params.k()}};
}

json to_json(const TridiagonalHamiltonian& h) {
  json j = params_json(h.params);
  j["parity"] = std::string(to_string(h.parity));
  j["size"] = h.size();
  j["diagonal"] = h.diagonal;
  j["offdiagonal"] = h.offdiagonal;
  return j;
}

json to_json(const SpectrumResult& s) {
  json j = params_json(s.params);
  j["parity"] = std::string(to_string(s.parity));
  j["size"] = s.size;
  j["eigenvalues"] = s.eigenvalues;
  if (s.eigenvectors) {
    json vectors = json::array();
    for (std::size_t i = 0; i < s.eigenvectors->size(); ++i) {
      const auto v = s.eigenvectors->vector(i);
      vectors.push_back(std::vector<double>(v.begin(), v.end()));
    }
    j["eigenvectors"] = std::move(vectors);
  }
  return j;
}

json to_json(const IsospectralityReport& r) {
  return {{"levels", r.levels},
          {"tolerance", r.tolerance},
          {"omega_minus", r.omega_minus},
          {"omega_plus", r.omega_plus},
          {"ground_residual", r.ground_residual},
          {"match_residuals", r.match_residuals},
          {"passed", r.passed}};
}

json to_json(const RevivalReport& r) {
  return {{"threshold", r.threshold}, {"peak_times", r.peak_times}, {"peak_values", r.peak_values}};
}

json to_json(const CrossingReport& r) {
  json gaps = json::array();
  for (const auto& g : r.within_parity_min_gaps) {
    gaps.push_back({{"parity", std::string(to_string(g.parity))},
                    {"levels", {g.lower_level, g.lower_level + 1}},
                    {"min_gap", g.gap},
                    {"location", g.location},
                    {"grid_index", g.grid_index}});
  }
  json crossings = json::array();
  for (const auto& c : r.between_parity_crossings) {
    crossings.push_back({{"level_positive", c.level_positive},
                         {"level_negative", c.level_negative},
                         {"interval", {c.interval_lo, c.interval_hi}},
                         {"location", c.location},
                         {"residual", c.residual},
                         {"bisection_steps", c.bisection_steps}});
  }
  return {{"gap_tolerance", r.gap_tolerance},
          {"avoided_only", r.avoided_only()},
          {"within_parity_min_gaps", std::move(gaps)},
          {"between_parity_crossings", std::move(crossings)}};
}

json to_json(const LatticeState& state) {
  json amps = json::array();
  for (const auto& a : state.amplitudes) amps.push_back({a.real(), a.imag()});
  return {{"parity", std::string(to_string(state.parity))}, {"time", state.time}, {"amplitudes", std::move(amps)}};
}

LatticeState lattice_state_from_json(const json& j, Parity fallback) {
  if (!j.is_object() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw ConfigError("amplitude file must be an object with an 'amplitudes' array");
  LatticeState state;
  state.parity = j.contains("parity") ? parse_parity(j["parity"].get<std::string>()) : fallback;
  state.time = j.value("time", 0.0);
  for (const auto& pair : j["amplitudes"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw ConfigError("each amplitude must be a [re, im] pair");
    state.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return state;
}

std::string spectrum_csv(const std::vector<SpectrumResult>& spectra, std::size_t levels) {
  std::string out = "parity,index,eigenvalue\n";
  for (const auto& s : spectra) {
    const std::size_t count = std::min(levels, s.eigenvalues.size());
    for (std::size_t i = 0; i < count; ++i)
      append_row(out, {std::string(to_string(s.parity)), std::to_string(i), format_real(s.eigenvalues[i])});
  }
  return out;
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::string out = "size,level,energy,verdict\n";
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    for (std::size_t l = 0; l < report.levels; ++l) {
      append_row(out, {std::to_string(report.sizes[s]), std::to_string(l), format_real(report.energies[s][l]),
                       report.verdicts[l].converged ? "converged" : "diverging"});
    }
  }
  return out;
}

std::string isospectrality_csv(const IsospectralityReport& r) {
  std::string out = "level,omega_minus,omega_plus_shifted,residual\n";
  for (std::size_t l = 0; l < r.levels; ++l) {
    const double partner = l == 0 ? 0.0 : r.omega_plus[l - 1];
    const double residual = l == 0 ? r.ground_residual : r.match_residuals[l - 1];
    append_row(out, {std::to_string(l), format_real(r.omega_minus[l]), format_real(partner), format_real(residual)});
  }
  return out;
}

std::string trace_csv(const EvolutionTrace& trace) {
  std::string out = "t,site0_intensity,mean_n,sigma_z\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    append_row(out, {format_real(trace.times[i]), format_real(trace.site0_intensity[i]), format_real(trace.mean_n[i]),
                     format_real(trace.sigma_z[i])});
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "parameter,parity,level,energy\n";
  for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
    for (Parity parity : {Parity::positive, Parity::negative}) {
      const auto& levels = sweep.branches(parity)[i];
      for (std::size_t l = 0; l < levels.size(); ++l) {
        append_row(out, {format_real(sweep.grid[i]), std::string(to_string(parity)), std::to_string(l),
                         format_real(levels[l])});
      }
    }
  }
  return out;
}

std::string sweep_svg(const SweepResult& sweep) {
  Panel panel{"E", {}};
  for (Parity parity : {Parity::positive, Parity::negative}) {
    for (std::size_t l = 0; l < sweep.levels; ++l) {
      Series s;
      s.x = sweep.grid;
      for (const auto& point : sweep.branches(parity)) s.y.push_back(point[l]);
      s.color = parity == Parity::positive ? "red" : "blue";
      s.dashed = parity == Parity::negative;
      panel.series.push_back(std::move(s));
    }
  }
  return render_panels({panel}, std::string(to_string(sweep.swept)));
}

std::string trace_svg(const EvolutionTrace& trace) {
  std::vector<Panel> panels;
  panels.push_back({"|E0|^2", {{trace.times, trace.site0_intensity, "black", false}}});
  panels.push_back({"&lt;n&gt;", {{trace.times, trace.mean_n, "black", false}}});
  panels.push_back({"&lt;sz&gt;", {{trace.times, trace.sigma_z, "black", false}}});
  return render_panels(panels, "t");
}

}  // namespace irabi::io
