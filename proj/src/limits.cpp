#include "irabi/limits.hpp"

#include <algorithm>
#include <cmath>

#include "irabi/errors.hpp"

namespace irabi {
namespace {

void require_valid(const ModelParams& params) {
  if (!params.valid()) throw DivergentRegime("divergent regime: requires g < omega/2");
}

}  // namespace

SqueezeParams squeeze_params(const ModelParams& params) {
  require_valid(params);
  const double ratio = 2.0 * params.g() / params.omega();
  SqueezeParams sq;
  sq.xi = std::atanh(ratio);
  sq.gap = std::sqrt(params.omega() * params.omega() - 4.0 * params.g() * params.g());
  return sq;
}

std::vector<double> weak_limit_energies(const ModelParams& params, Parity parity, std::size_t count) {
  // Entries grow by omega every two sites, so count + 2 sites always contain the lowest count.
  std::vector<double> energies;
  energies.reserve(count + 2);
  for (std::size_t j = 0; j < count + 2; ++j) energies.push_back(onsite_energy(params, parity, j));
  std::sort(energies.begin(), energies.end());
  energies.resize(count);
  return energies;
}

std::vector<double> deep_strong_energies(const ModelParams& params, std::size_t count) {
  const double gap = squeeze_params(params).gap;
  const double shift = params.omega() * params.k();
  std::vector<double> energies(count);
  for (std::size_t j = 0; j < count; ++j) energies[j] = gap * (static_cast<double>(j) + params.k()) - shift;
  return energies;
}

}  // namespace irabi
