#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "irabi/model.hpp"
#include "irabi/tridiag_eigen.hpp"

namespace irabi {

using Amplitude = std::complex<double>;

/// Field amplitudes E_j over the waveguide sites of one parity chain.
struct LatticeState {
  std::vector<Amplitude> amplitudes;
  Parity parity = Parity::positive;
  double time = 0.0;

  double norm_squared() const noexcept;
};

/// Light launched into a single waveguide.
LatticeState site_state(std::size_t size, std::size_t site, Parity parity);

struct Observables {
  double site0 = 0.0;    // |E_0|^2
  double mean_n = 0.0;   // sum_j j |E_j|^2
  double sigma_z = 0.0;  // even minus odd sites (positive sector), opposite in the negative sector
};

Observables observables(const LatticeState& state);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<double> site0_intensity;
  std::vector<double> mean_n;
  std::vector<double> sigma_z;
  LatticeState final_state;
  double norm_drift = 0.0;
  double leakage = 0.0;  // max_t |E_{N-1}(t)|^2
  bool leakage_warning = false;
};

inline constexpr double kLeakageThreshold = 1e-6;
inline constexpr double kNormalizationTolerance = 1e-8;
/// A sample counts as a strict local maximum only if it exceeds both
/// neighbours by more than this, so round-off on a flat trace is not a peak.
inline constexpr double kPeakNoiseFloor = 1e-12;

/// Exact propagator of a truncated chain through its eigendecomposition,
/// E(t) = V exp(-i Lambda t) V^T E(0). Negative times propagate backwards.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const TridiagonalHamiltonian& h);

  std::size_t size() const noexcept { return spectrum_.size; }
  const SpectrumResult& spectrum() const noexcept { return spectrum_; }

  /// Eigenbasis coefficients V^T E.
  std::vector<Amplitude> project(std::span<const Amplitude> amplitudes) const;
  /// Amplitudes at time t given eigenbasis coefficients at time 0.
  std::vector<Amplitude> reconstruct(std::span<const Amplitude> coefficients, double t) const;
  std::vector<Amplitude> propagate(std::span<const Amplitude> amplitudes, double t) const;

 private:
  SpectrumResult spectrum_;
};

/// Samples `samples` uniformly spaced instants on [0, t_max]. The first sample
/// is the initial state itself. Throws ConfigError for non-normalized input,
/// size mismatch, t_max <= 0 or samples < 2.
EvolutionTrace evolve(const TridiagonalHamiltonian& h, const LatticeState& initial, double t_max,
                      std::size_t samples);

/// <E|H|E>.
double energy_expectation(const TridiagonalHamiltonian& h, std::span<const Amplitude> amplitudes);

struct RevivalReport {
  std::vector<double> peak_times;
  std::vector<double> peak_values;
  double threshold = 0.0;
};

/// Strict interior local maxima (above kPeakNoiseFloor) of the site-0 intensity at or above
/// `threshold`, refined by a parabola through the three samples around each.
RevivalReport detect_revivals(const EvolutionTrace& trace, double threshold);

}  // namespace irabi
