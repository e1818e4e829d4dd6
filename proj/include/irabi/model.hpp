#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace irabi {

enum class Parity { positive, negative };

/// +1 for the positive sector (seed |0,e>), -1 for the negative one (seed |0,g>).
constexpr int parity_sign(Parity p) noexcept { return p == Parity::positive ? 1 : -1; }

std::string_view to_string(Parity p) noexcept;
/// Accepts "+", "positive", "-", "negative".
Parity parse_parity(std::string_view text);

/// Physical parameters of the intensity-dependent Rabi model: field frequency
/// omega, qubit splitting omega0, coupling g and Bargmann index k.
///
/// Construction enforces omega > 0, k > 0, g >= 0, omega0 >= 0. Couplings at or
/// above omega/2 are accepted so the divergence can be probed, but are flagged
/// through valid().
class ModelParams {
 public:
  ModelParams(double omega, double omega0, double g, double k);

  double omega() const noexcept { return omega_; }
  double omega0() const noexcept { return omega0_; }
  double g() const noexcept { return g_; }
  double k() const noexcept { return k_; }

  /// True iff g < omega/2.
  bool valid() const noexcept { return g_ < 0.5 * omega_; }

  ModelParams with_omega0(double omega0) const { return {omega_, omega0, g_, k_}; }
  ModelParams with_g(double g) const { return {omega_, omega0_, g, k_}; }
  ModelParams with_k(double k) const { return {omega_, omega0_, g_, k}; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double omega_;
  double omega0_;
  double g_;
  double k_;
};

/// Site energy of the j-th chain site: omega*j + s*omega0*(-1)^j/2.
double onsite_energy(const ModelParams& params, Parity parity, std::size_t j);

/// Hopping between sites j and j+1: g*sqrt((j+1)(j+2k)).
double coupling(const ModelParams& params, std::size_t j);

/// Truncated real symmetric tridiagonal matrix. The diagonal and off-diagonal
/// may be arbitrary (the eigensolver and propagator accept any such matrix);
/// build_hamiltonian() fills them from the model.
struct TridiagonalHamiltonian {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;
  ModelParams params{1.0, 0.0, 0.0, 0.5};
  Parity parity = Parity::positive;

  std::size_t size() const noexcept { return diagonal.size(); }

  /// Throws ConfigError unless size >= 1 and offdiagonal has size-1 entries.
  void validate() const;

  /// Max absolute row sum.
  double norm_inf() const noexcept;

  /// Leading principal submatrix of order n.
  TridiagonalHamiltonian leading(std::size_t n) const;
};

/// Parity-sector chain Hamiltonian truncated to `size` sites.
TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, Parity parity, std::size_t size);

/// Wraps raw diagonal/off-diagonal data (used for test chains and custom lattices).
TridiagonalHamiltonian make_tridiagonal(std::vector<double> diagonal, std::vector<double> offdiagonal);

}  // namespace irabi
