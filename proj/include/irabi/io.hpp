#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "irabi/evolution.hpp"
#include "irabi/model.hpp"
#include "irabi/susy.hpp"
#include "irabi/sweep.hpp"
#include "irabi/tridiag_eigen.hpp"

namespace irabi::io {

using nlohmann::json;

/// 17 significant digits, so doubles survive a text round trip.
std::string format_real(double x);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

json params_json(const ModelParams& params);
json to_json(const TridiagonalHamiltonian& h);
json to_json(const SpectrumResult& s);
json to_json(const IsospectralityReport& r);
json to_json(const RevivalReport& r);
json to_json(const CrossingReport& r);

/// {"parity": "+", "time": t, "amplitudes": [[re, im], ...]}
json to_json(const LatticeState& state);
/// Inverse of to_json(LatticeState). Parity defaults to `fallback` when absent.
LatticeState lattice_state_from_json(const json& j, Parity fallback);

/// parity,index,eigenvalue
std::string spectrum_csv(const std::vector<SpectrumResult>& spectra, std::size_t levels);
/// size,level,energy,verdict
std::string convergence_csv(const ConvergenceReport& report);
/// level,omega_minus,omega_plus_shifted,residual; row 0 compares the zero mode with 0.
std::string isospectrality_csv(const IsospectralityReport& r);
/// t,site0_intensity,mean_n,sigma_z
std::string trace_csv(const EvolutionTrace& trace);
/// parameter,parity,level,energy
std::string sweep_csv(const SweepResult& sweep);

/// Both parity branch families: positive solid red, negative dashed blue.
std::string sweep_svg(const SweepResult& sweep);
/// Three stacked panels: site-0 intensity, mean photon number, inversion.
std::string trace_svg(const EvolutionTrace& trace);

}  // namespace irabi::io
