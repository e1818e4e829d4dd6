#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "irabi/model.hpp"

namespace irabi {

/// Orthonormal eigenvectors stored one per row, aligned with the eigenvalues.
class EigenvectorSet {
 public:
  EigenvectorSet() = default;
  explicit EigenvectorSet(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  /// Component j of eigenvector i.
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::span<const double> vector(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<double> vector(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // non-decreasing
  std::optional<EigenvectorSet> eigenvectors;
  ModelParams params{1.0, 0.0, 0.0, 0.5};
  Parity parity = Parity::positive;
  std::size_t size = 0;
};

/// Full spectrum of a real symmetric tridiagonal matrix by implicit-shift QL
/// with Wilkinson shifts. Eigenvalues ascend (stable order for ties); each
/// eigenvector has its largest-magnitude component positive.
///
/// Throws NumericalError if some eigenvalue does not converge within the
/// iteration cap; no partial result is returned.
SpectrumResult eigen_tridiagonal(const TridiagonalHamiltonian& h, bool want_vectors = false);

struct LevelVerdict {
  bool converged = false;
  double value = 0.0;       // energy at the largest size
  double last_delta = 0.0;  // E(N_m) - E(N_{m-1})
};

struct ConvergenceReport {
  std::vector<std::size_t> sizes;
  std::size_t levels = 0;
  double tolerance = 0.0;
  std::vector<std::vector<double>> energies;  // energies[size_index][level]
  std::vector<LevelVerdict> verdicts;         // one per level

  bool all_converged() const noexcept;
};

/// Lowest `levels` energies for each truncation; a level is converged when
/// its last delta is within 1e-8*omega.
ConvergenceReport ground_energy_vs_size(const ModelParams& params, Parity parity,
                                        std::span<const std::size_t> sizes, std::size_t levels);

}  // namespace irabi
