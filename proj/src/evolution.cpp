#include "irabi/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "irabi/errors.hpp"

namespace irabi {

double LatticeState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

LatticeState site_state(std::size_t size, std::size_t site, Parity parity) {
  if (site >= size) throw ConfigError("initial site outside the lattice");
  LatticeState state;
  state.amplitudes.assign(size, Amplitude{0.0, 0.0});
  state.amplitudes[site] = 1.0;
  state.parity = parity;
  return state;
}

Observables observables(const LatticeState& state) {
  Observables obs;
  if (state.amplitudes.empty()) return obs;
  obs.site0 = std::norm(state.amplitudes[0]);
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t j = 0; j < state.amplitudes.size(); ++j) {
    const double p = std::norm(state.amplitudes[j]);
    obs.mean_n += static_cast<double>(j) * p;
    (j % 2 == 0 ? even : odd) += p;
  }
  // |+,j> carries the excited qubit on even j; the negative sector is flipped.
  obs.sigma_z = parity_sign(state.parity) * (even - odd);
  return obs;
}

SpectralPropagator::SpectralPropagator(const TridiagonalHamiltonian& h) : spectrum_(eigen_tridiagonal(h, true)) {}

std::vector<Amplitude> SpectralPropagator::project(std::span<const Amplitude> amplitudes) const {
  const auto& v = *spectrum_.eigenvectors;
  const std::size_t n = size();
  std::vector<Amplitude> coefficients(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = v.vector(i);
    Amplitude sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) sum += row[j] * amplitudes[j];
    coefficients[i] = sum;
  }
  return coefficients;
}

std::vector<Amplitude> SpectralPropagator::reconstruct(std::span<const Amplitude> coefficients, double t) const {
  const auto& v = *spectrum_.eigenvectors;
  const std::size_t n = size();
  std::vector<Amplitude> out(n, Amplitude{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const Amplitude phased = coefficients[i] * std::polar(1.0, -spectrum_.eigenvalues[i] * t);
    if (phased == Amplitude{0.0, 0.0}) continue;
    const auto row = v.vector(i);
    for (std::size_t j = 0; j < n; ++j) out[j] += row[j] * phased;
  }
  return out;
}

std::vector<Amplitude> SpectralPropagator::propagate(std::span<const Amplitude> amplitudes, double t) const {
  if (amplitudes.size() != size()) throw ConfigError("state dimension does not match the lattice size");
  const auto coefficients = project(amplitudes);
  return reconstruct(coefficients, t);
}

EvolutionTrace evolve(const TridiagonalHamiltonian& h, const LatticeState& initial, double t_max,
                      std::size_t samples) {
  h.validate();
  if (initial.amplitudes.size() != h.size()) throw ConfigError("initial state dimension does not match the lattice size");
  if (!(t_max > 0.0)) throw ConfigError("t_max must be > 0");
  if (samples < 2) throw ConfigError("samples must be >= 2");
  if (std::abs(initial.norm_squared() - 1.0) > kNormalizationTolerance)
    throw ConfigError("initial state is not normalized");

  const SpectralPropagator propagator(h);
  const auto coefficients = propagator.project(initial.amplitudes);

  EvolutionTrace trace;
  trace.times.resize(samples);
  trace.site0_intensity.resize(samples);
  trace.mean_n.resize(samples);
  trace.sigma_z.resize(samples);

  const double dt = t_max / static_cast<double>(samples - 1);
  LatticeState current{{}, initial.parity, 0.0};
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = s + 1 == samples ? t_max : dt * static_cast<double>(s);
    current.time = t;
    current.amplitudes = s == 0 ? initial.amplitudes : propagator.reconstruct(coefficients, t);

    const auto obs = observables(current);
    trace.times[s] = t;
    trace.site0_intensity[s] = obs.site0;
    trace.mean_n[s] = obs.mean_n;
    trace.sigma_z[s] = obs.sigma_z;
    trace.norm_drift = std::max(trace.norm_drift, std::abs(current.norm_squared() - 1.0));
    trace.leakage = std::max(trace.leakage, std::norm(current.amplitudes.back()));
  }
  trace.final_state = std::move(current);
  trace.leakage_warning = trace.leakage > kLeakageThreshold;
  return trace;
}

double energy_expectation(const TridiagonalHamiltonian& h, std::span<const Amplitude> amplitudes) {
  const std::size_t n = h.size();
  double energy = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    energy += h.diagonal[j] * std::norm(amplitudes[j]);
    if (j + 1 < n) energy += 2.0 * h.offdiagonal[j] * std::real(std::conj(amplitudes[j]) * amplitudes[j + 1]);
  }
  return energy;
}

RevivalReport detect_revivals(const EvolutionTrace& trace, double threshold) {
  RevivalReport report;
  report.threshold = threshold;
  const auto& y = trace.site0_intensity;
  const auto& t = trace.times;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] - y[i - 1] > kPeakNoiseFloor && y[i] - y[i + 1] > kPeakNoiseFloor) || y[i] < threshold) continue;
    // Vertex of the parabola through three (locally uniform) samples.
    const double curvature = y[i - 1] - 2.0 * y[i] + y[i + 1];
    const double offset = 0.5 * (y[i - 1] - y[i + 1]) / curvature;
    const double h_left = t[i] - t[i - 1];
    const double h_right = t[i + 1] - t[i];
    const double step = offset < 0.0 ? h_left : h_right;
    report.peak_times.push_back(t[i] + offset * step);
    report.peak_values.push_back(y[i] - 0.25 * (y[i - 1] - y[i + 1]) * offset);
  }
  return report;
}

}  // namespace irabi
