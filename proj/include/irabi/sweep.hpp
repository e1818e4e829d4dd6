#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "irabi/model.hpp"

namespace irabi {

enum class SweptParameter { omega0, g };

std::string_view to_string(SweptParameter p) noexcept;
SweptParameter parse_swept_parameter(std::string_view text);

/// `base` with the swept parameter replaced by `value`.
ModelParams at_parameter(const ModelParams& base, SweptParameter which, double value);

/// `points` equally spaced values on [from, to].
std::vector<double> linear_grid(double from, double to, std::size_t points);

struct SweepResult {
  ModelParams base{1.0, 0.0, 0.0, 0.5};
  SweptParameter swept = SweptParameter::omega0;
  std::vector<double> grid;
  std::size_t levels = 0;
  std::size_t truncation = 0;
  // branches_*[point][level], ascending in level.
  std::vector<std::vector<double>> branches_positive;
  std::vector<std::vector<double>> branches_negative;
  std::vector<bool> converged;

  const std::vector<std::vector<double>>& branches(Parity p) const noexcept {
    return p == Parity::positive ? branches_positive : branches_negative;
  }
};

/// Lowest `levels` eigenvalues of both parity chains at every grid point.
/// Points with g >= omega/2 are flagged unconverged; the first and last valid
/// points are re-solved at twice the truncation and, if any level moves by more
/// than 1e-8*omega, every point is flagged unconverged.
SweepResult sweep_spectrum(const ModelParams& base, SweptParameter which, std::span<const double> grid,
                           std::size_t levels, std::size_t size);

struct MinimalGap {
  Parity parity = Parity::positive;
  std::size_t lower_level = 0;  // gap between levels lower_level and lower_level + 1
  double gap = 0.0;
  double location = 0.0;
  std::size_t grid_index = 0;
};

struct ParityCrossing {
  std::size_t level_positive = 0;
  std::size_t level_negative = 0;
  double interval_lo = 0.0;  // bracketing grid interval
  double interval_hi = 0.0;
  double location = 0.0;     // bisection estimate
  double residual = 0.0;     // |E_pos - E_neg| at the estimate
  std::size_t bisection_steps = 0;
};

struct CrossingReport {
  double gap_tolerance = 0.0;
  std::vector<MinimalGap> within_parity_min_gaps;
  std::vector<ParityCrossing> between_parity_crossings;

  /// True when no adjacent same-parity pair ever comes within gap_tolerance.
  bool avoided_only() const noexcept;
};

CrossingReport analyze_crossings(const SweepResult& sweep, double gap_tol);

}  // namespace irabi
