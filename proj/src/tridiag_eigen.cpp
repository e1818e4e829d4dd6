#include "irabi/tridiag_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "irabi/errors.hpp"

namespace irabi {
namespace {

constexpr int kMaxIterationsPerEigenvalue = 60;

void fix_sign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::abs(v[j]) > std::abs(v[best])) best = j;
  if (v[best] < 0.0)
    for (double& x : v) x = -x;
}

}  // namespace

SpectrumResult eigen_tridiagonal(const TridiagonalHamiltonian& h, bool want_vectors) {
  h.validate();
  const int n = static_cast<int>(h.size());

  std::vector<double> d = h.diagonal;
  std::vector<double> e(n, 0.0);
  std::copy(h.offdiagonal.begin(), h.offdiagonal.end(), e.begin());

  // Rows of z are the eigenvectors, so each rotation touches two contiguous rows.
  std::optional<EigenvectorSet> z;
  if (want_vectors) {
    z.emplace(h.size());
    for (int i = 0; i < n; ++i) (*z)(i, i) = 1.0;
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxIterationsPerEigenvalue)
        throw NumericalError("tridiagonal QL did not converge for eigenvalue index " + std::to_string(l));

      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z) {
          auto lo = z->vector(i);
          auto hi = z->vector(i + 1);
          for (int q = 0; q < n; ++q) {
            const double t = hi[q];
            hi[q] = s * lo[q] + c * t;
            lo[q] = c * lo[q] - s * t;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<std::size_t> order(h.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  SpectrumResult result;
  result.params = h.params;
  result.parity = h.parity;
  result.size = h.size();
  result.eigenvalues.reserve(h.size());
  for (std::size_t idx : order) result.eigenvalues.push_back(d[idx]);
  if (z) {
    EigenvectorSet sorted(h.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto src = z->vector(order[i]);
      auto dst = sorted.vector(i);
      std::copy(src.begin(), src.end(), dst.begin());
      fix_sign(dst);
    }
    result.eigenvectors = std::move(sorted);
  }
  return result;
}

bool ConvergenceReport::all_converged() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const LevelVerdict& v) { return v.converged; });
}

ConvergenceReport ground_energy_vs_size(const ModelParams& params, Parity parity,
                                        std::span<const std::size_t> sizes, std::size_t levels) {
  if (levels == 0) throw ConfigError("levels must be >= 1");
  if (sizes.size() < 2) throw ConfigError("convergence study needs at least two sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < levels) throw ConfigError("every size must be >= the number of tracked levels");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw ConfigError("sizes must be strictly increasing");
  }

  ConvergenceReport report;
  report.sizes.assign(sizes.begin(), sizes.end());
  report.levels = levels;
  report.tolerance = 1e-8 * params.omega();
  for (std::size_t n : sizes) {
    const auto spectrum = eigen_tridiagonal(build_hamiltonian(params, parity, n));
    report.energies.emplace_back(spectrum.eigenvalues.begin(),
                                 spectrum.eigenvalues.begin() + static_cast<std::ptrdiff_t>(levels));
  }
  const auto& last = report.energies.back();
  const auto& prev = report.energies[report.energies.size() - 2];
  for (std::size_t level = 0; level < levels; ++level) {
    LevelVerdict v;
    v.value = last[level];
    v.last_delta = last[level] - prev[level];
    v.converged = std::abs(v.last_delta) <= report.tolerance;
    report.verdicts.push_back(v);
  }
  return report;
}

}  // namespace irabi
