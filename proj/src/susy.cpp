#include "irabi/susy.hpp"

#include <cmath>

#include "irabi/errors.hpp"
#include "irabi/limits.hpp"
#include "irabi/tridiag_eigen.hpp"

namespace irabi {
namespace {

double require_susy_regime(const ModelParams& params) {
  if (params.omega0() != 0.0) throw NonDegenerateQubit("SUSY partners require a degenerate qubit (omega0 = 0)");
  return squeeze_params(params).gap;
}

}  // namespace

double alpha_parameter(const ModelParams& params) {
  const double gap = require_susy_regime(params);
  return std::sqrt((params.omega() + gap) / 2.0);
}

SusyPair build_susy_pair(const ModelParams& params, std::size_t size) {
  const double gap = require_susy_regime(params);
  if (size < 2) throw ConfigError("SUSY partner truncation must be >= 2");

  const double omega = params.omega();
  const double k = params.k();
  const ModelParams partner = params.with_k(k + 0.5);

  SusyPair pair{build_hamiltonian(params, Parity::positive, size),
                build_hamiltonian(partner, Parity::positive, size), gap, params};
  for (std::size_t j = 0; j < size; ++j) {
    const double jd = static_cast<double>(j);
    pair.h_minus.diagonal[j] = omega * (jd + k) - k * gap;
    pair.h_plus.diagonal[j] = omega * (jd + k + 0.5) + (0.5 - k) * gap;
  }
  return pair;
}

std::pair<std::vector<double>, std::vector<double>> closed_form_susy_energies(const ModelParams& params,
                                                                              std::size_t count) {
  const double gap = require_susy_regime(params);
  std::vector<double> lower(count);
  std::vector<double> upper(count);
  for (std::size_t j = 0; j < count; ++j) {
    lower[j] = gap * static_cast<double>(j);
    upper[j] = gap * static_cast<double>(j + 1);
  }
  return {std::move(lower), std::move(upper)};
}

IsospectralityReport verify_isospectrality(const SusyPair& pair, std::size_t levels, double tol) {
  if (levels < 2) throw ConfigError("isospectrality check needs at least two levels");
  if (levels > pair.h_minus.size() || levels > pair.h_plus.size())
    throw ConfigError("levels exceed the partner truncation");

  const auto minus = eigen_tridiagonal(pair.h_minus);
  const auto plus = eigen_tridiagonal(pair.h_plus);

  IsospectralityReport report;
  report.levels = levels;
  report.tolerance = tol;
  report.omega_minus.assign(minus.eigenvalues.begin(), minus.eigenvalues.begin() + static_cast<std::ptrdiff_t>(levels));
  report.omega_plus.assign(plus.eigenvalues.begin(), plus.eigenvalues.begin() + static_cast<std::ptrdiff_t>(levels));
  report.ground_residual = std::abs(report.omega_minus[0]);
  report.passed = report.ground_residual <= tol;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const double r = std::abs(report.omega_minus[i + 1] - report.omega_plus[i]);
    report.match_residuals.push_back(r);
    if (!(r <= tol)) report.passed = false;
  }
  return report;
}

}  // namespace irabi
