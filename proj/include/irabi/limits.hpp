#pragma once

#include <cstddef>
#include <vector>

#include "irabi/model.hpp"

namespace irabi {

/// SU(1,1) squeeze that diagonalizes the degenerate-qubit model:
/// tanh(xi) = 2g/omega and the resulting level spacing sqrt(omega^2 - 4g^2).
struct SqueezeParams {
  double xi = 0.0;
  double gap = 0.0;
};

/// Throws DivergentRegime when g >= omega/2.
SqueezeParams squeeze_params(const ModelParams& params);

/// Lowest `count` energies in the g -> 0 limit: the sorted chain diagonal.
std::vector<double> weak_limit_energies(const ModelParams& params, Parity parity, std::size_t count);

/// Lowest `count` energies for omega0 = 0, in the lattice convention:
/// gap*(j + k) - omega*k. Uses only omega, g and k; omega0 is ignored.
/// Throws DivergentRegime when g >= omega/2.
std::vector<double> deep_strong_energies(const ModelParams& params, std::size_t count);

}  // namespace irabi
