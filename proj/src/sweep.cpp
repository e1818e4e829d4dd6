#include "irabi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irabi/errors.hpp"
#include "irabi/tridiag_eigen.hpp"

namespace irabi {
namespace {

constexpr std::size_t kMaxBisectionSteps = 40;
constexpr double kBisectionWidth = 1e-10;

std::vector<double> lowest_levels(const ModelParams& params, Parity parity, std::size_t size, std::size_t levels) {
  auto spectrum = eigen_tridiagonal(build_hamiltonian(params, parity, size));
  spectrum.eigenvalues.resize(levels);
  return std::move(spectrum.eigenvalues);
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

std::string_view to_string(SweptParameter p) noexcept { return p == SweptParameter::omega0 ? "omega0" : "g"; }

SweptParameter parse_swept_parameter(std::string_view text) {
  if (text == "omega0") return SweptParameter::omega0;
  if (text == "g") return SweptParameter::g;
  throw ConfigError("swept parameter must be 'omega0' or 'g', got '" + std::string(text) + "'");
}

ModelParams at_parameter(const ModelParams& base, SweptParameter which, double value) {
  return which == SweptParameter::omega0 ? base.with_omega0(value) : base.with_g(value);
}

std::vector<double> linear_grid(double from, double to, std::size_t points) {
  if (points < 2) throw ConfigError("grid needs at least two points");
  if (!(to > from)) throw ConfigError("grid end must exceed grid start");
  std::vector<double> grid(points);
  const double step = (to - from) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = from + step * static_cast<double>(i);
  grid.back() = to;
  return grid;
}

SweepResult sweep_spectrum(const ModelParams& base, SweptParameter which, std::span<const double> grid,
                           std::size_t levels, std::size_t size) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw ConfigError("sweep grid must be strictly increasing");
  if (levels == 0) throw ConfigError("levels must be >= 1");
  if (size < levels) throw ConfigError("truncation must be >= levels");

  SweepResult result;
  result.base = base;
  result.swept = which;
  result.grid.assign(grid.begin(), grid.end());
  result.levels = levels;
  result.truncation = size;

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const ModelParams params = at_parameter(base, which, grid[i]);
    try {
      result.branches_positive.push_back(lowest_levels(params, Parity::positive, size, levels));
      result.branches_negative.push_back(lowest_levels(params, Parity::negative, size, levels));
    } catch (const NumericalError& e) {
      throw NumericalError(std::string(e.what()) + " at " + std::string(to_string(which)) + " = " +
                           std::to_string(grid[i]));
    }
    result.converged.push_back(params.valid());
  }

  // Spot check at the extreme valid points by doubling the truncation.
  const double tol = 1e-8 * base.omega();
  auto spot_ok = [&](std::size_t i) {
    const ModelParams params = at_parameter(base, which, grid[i]);
    for (Parity parity : {Parity::positive, Parity::negative}) {
      const auto doubled = lowest_levels(params, parity, 2 * size, levels);
      const auto& current = result.branches(parity)[i];
      for (std::size_t l = 0; l < levels; ++l)
        if (std::abs(doubled[l] - current[l]) > tol) return false;
    }
    return true;
  };
  const auto first = std::find(result.converged.begin(), result.converged.end(), true);
  if (first != result.converged.end()) {
    const auto lo = static_cast<std::size_t>(first - result.converged.begin());
    const auto hi = result.converged.size() - 1 -
                    static_cast<std::size_t>(std::find(result.converged.rbegin(), result.converged.rend(), true) -
                                             result.converged.rbegin());
    if (!spot_ok(lo) || (hi != lo && !spot_ok(hi)))
      std::fill(result.converged.begin(), result.converged.end(), false);
  }
  return result;
}

bool CrossingReport::avoided_only() const noexcept {
  return std::all_of(within_parity_min_gaps.begin(), within_parity_min_gaps.end(),
                     [&](const MinimalGap& g) { return g.gap > gap_tolerance; });
}

CrossingReport analyze_crossings(const SweepResult& sweep, double gap_tol) {
  CrossingReport report;
  report.gap_tolerance = gap_tol;
  const std::size_t points = sweep.grid.size();
  const std::size_t levels = sweep.levels;

  for (Parity parity : {Parity::positive, Parity::negative}) {
    const auto& branches = sweep.branches(parity);
    for (std::size_t level = 0; level + 1 < levels; ++level) {
      MinimalGap best;
      best.parity = parity;
      best.lower_level = level;
      best.gap = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < points; ++i) {
        const double gap = branches[i][level + 1] - branches[i][level];
        if (gap < best.gap) {
          best.gap = gap;
          best.location = sweep.grid[i];
          best.grid_index = i;
        }
      }
      report.within_parity_min_gaps.push_back(best);
    }
  }

  auto difference_at = [&](double value, std::size_t ip, std::size_t in) {
    const ModelParams params = at_parameter(sweep.base, sweep.swept, value);
    const std::size_t need = std::max(ip, in) + 1;
    const auto pos = lowest_levels(params, Parity::positive, sweep.truncation, need);
    const auto neg = lowest_levels(params, Parity::negative, sweep.truncation, need);
    return pos[ip] - neg[in];
  };

  for (std::size_t ip = 0; ip < levels; ++ip) {
    for (std::size_t in = (ip == 0 ? 0 : ip - 1); in < std::min(levels, ip + 2); ++in) {
      // Exact zeros on the grid are skipped: a crossing is a sign flip between
      // consecutive nonzero samples of E_pos - E_neg.
      std::size_t last = points;
      int last_sign = 0;
      for (std::size_t i = 0; i < points; ++i) {
        const int s = sign_of(sweep.branches_positive[i][ip] - sweep.branches_negative[i][in]);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
          ParityCrossing crossing;
          crossing.level_positive = ip;
          crossing.level_negative = in;
          crossing.interval_lo = sweep.grid[last];
          crossing.interval_hi = sweep.grid[i];
          double lo = crossing.interval_lo;
          double hi = crossing.interval_hi;
          int lo_sign = last_sign;
          double mid = 0.5 * (lo + hi);
          double value = 0.0;
          for (; crossing.bisection_steps < kMaxBisectionSteps && hi - lo >= kBisectionWidth;
               ++crossing.bisection_steps) {
            mid = 0.5 * (lo + hi);
            value = difference_at(mid, ip, in);
            const int ms = sign_of(value);
            if (ms == 0) {
              lo = hi = mid;
              break;
            }
            (ms == lo_sign ? lo : hi) = mid;
          }
          crossing.location = 0.5 * (lo + hi);
          crossing.residual = std::abs(difference_at(crossing.location, ip, in));
          report.between_parity_crossings.push_back(crossing);
        }
        last = i;
        last_sign = s;
      }
    }
  }
  return report;
}

}  // namespace irabi
