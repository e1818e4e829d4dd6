#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "irabi/model.hpp"

namespace irabi {

/// The two supersymmetric partners of the degenerate-qubit model, written as
/// chains. h_minus is A^dagger A (Bargmann k); h_plus is A A^dagger, which is
/// the same model at Bargmann k + 1/2 up to a constant shift.
struct SusyPair {
  TridiagonalHamiltonian h_minus;
  TridiagonalHamiltonian h_plus;
  double gap = 0.0;
  ModelParams params{1.0, 0.0, 0.0, 0.5};

  double k_partner() const noexcept { return params.k() + 0.5; }
};

struct IsospectralityReport {
  std::size_t levels = 0;
  double tolerance = 0.0;
  std::vector<double> omega_minus;  // lowest `levels` eigenvalues of A^dagger A
  std::vector<double> omega_plus;   // lowest `levels` eigenvalues of A A^dagger
  double ground_residual = 0.0;
  std::vector<double> match_residuals;  // |omega_minus[i+1] - omega_plus[i]|
  bool passed = false;
};

/// alpha = sqrt((omega + gap)/2). Throws DivergentRegime for g >= omega/2 and
/// NonDegenerateQubit for omega0 != 0.
double alpha_parameter(const ModelParams& params);

SusyPair build_susy_pair(const ModelParams& params, std::size_t size);

/// ({gap*j}, {gap*(j+1)}) for j < count.
std::pair<std::vector<double>, std::vector<double>> closed_form_susy_energies(const ModelParams& params,
                                                                              std::size_t count);

/// Diagonalizes both partners and compares spec(A^dagger A) minus its zero
/// mode with spec(A A^dagger), level by level.
IsospectralityReport verify_isospectrality(const SusyPair& pair, std::size_t levels, double tol);

}  // namespace irabi
