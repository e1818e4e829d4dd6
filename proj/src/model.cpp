#include "irabi/model.hpp"

#include <algorithm>
#include <cmath>

#include "irabi/errors.hpp"

namespace irabi {

std::string_view to_string(Parity p) noexcept { return p == Parity::positive ? "+" : "-"; }

Parity parse_parity(std::string_view text) {
  if (text == "+" || text == "positive" || text == "plus") return Parity::positive;
  if (text == "-" || text == "negative" || text == "minus") return Parity::negative;
  throw ConfigError("parity must be '+' or '-', got '" + std::string(text) + "'");
}

ModelParams::ModelParams(double omega, double omega0, double g, double k)
    : omega_(omega), omega0_(omega0), g_(g), k_(k) {
  if (!std::isfinite(omega) || !std::isfinite(omega0) || !std::isfinite(g) || !std::isfinite(k))
    throw ConfigError("model parameters must be finite");
  if (!(omega > 0.0)) throw ConfigError("omega must be > 0");
  if (!(k > 0.0)) throw ConfigError("k must be > 0");
  if (g < 0.0) throw ConfigError("g must be >= 0");
  if (omega0 < 0.0) throw ConfigError("omega0 must be >= 0");
}

double onsite_energy(const ModelParams& params, Parity parity, std::size_t j) {
  const double alternating = (j % 2 == 0) ? 1.0 : -1.0;
  return params.omega() * static_cast<double>(j) +
         parity_sign(parity) * params.omega0() * alternating / 2.0;
}

double coupling(const ModelParams& params, std::size_t j) {
  const double jd = static_cast<double>(j);
  return params.g() * std::sqrt((jd + 1.0) * (jd + 2.0 * params.k()));
}

void TridiagonalHamiltonian::validate() const {
  if (diagonal.empty()) throw ConfigError("truncation size must be >= 1");
  if (offdiagonal.size() + 1 != diagonal.size())
    throw ConfigError("off-diagonal length must be diagonal length - 1");
}

double TridiagonalHamiltonian::norm_inf() const noexcept {
  double best = 0.0;
  const std::size_t n = diagonal.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diagonal[i]);
    if (i > 0) row += std::abs(offdiagonal[i - 1]);
    if (i + 1 < n) row += std::abs(offdiagonal[i]);
    best = std::max(best, row);
  }
  return best;
}

TridiagonalHamiltonian TridiagonalHamiltonian::leading(std::size_t n) const {
  if (n == 0 || n > size()) throw ConfigError("leading submatrix order out of range");
  TridiagonalHamiltonian sub = *this;
  sub.diagonal.resize(n);
  sub.offdiagonal.resize(n - 1);
  return sub;
}

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, Parity parity, std::size_t size) {
  if (size == 0) throw ConfigError("truncation size must be >= 1");
  TridiagonalHamiltonian h;
  h.params = params;
  h.parity = parity;
  h.diagonal.resize(size);
  h.offdiagonal.resize(size - 1);
  for (std::size_t j = 0; j < size; ++j) h.diagonal[j] = onsite_energy(params, parity, j);
  for (std::size_t j = 0; j + 1 < size; ++j) h.offdiagonal[j] = coupling(params, j);
  return h;
}

TridiagonalHamiltonian make_tridiagonal(std::vector<double> diagonal, std::vector<double> offdiagonal) {
  TridiagonalHamiltonian h;
  h.diagonal = std::move(diagonal);
  h.offdiagonal = std::move(offdiagonal);
  h.validate();
  return h;
}

}  // namespace irabi
