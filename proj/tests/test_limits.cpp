#include <doctest.h>

#include <cmath>

#include "irabi/errors.hpp"
#include "irabi/limits.hpp"
#include "irabi/tridiag_eigen.hpp"

using namespace irabi;

TEST_CASE("squeeze parameters") {
  const auto zero = squeeze_params(ModelParams(1.0, 0.0, 0.0, 0.5));
  CHECK(zero.xi == 0.0);
  CHECK(zero.gap == 1.0);

  const auto quarter = squeeze_params(ModelParams(1.0, 0.0, 0.25, 0.5));
  CHECK(quarter.xi == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  CHECK(quarter.xi == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK(quarter.gap == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(std::abs(std::tanh(quarter.xi) - 0.5) <= 1e-14);

  CHECK(squeeze_params(ModelParams(1.0, 0.0, 0.2, 0.5)).gap == doctest::Approx(0.916515).epsilon(1e-6));

  CHECK_THROWS_AS(squeeze_params(ModelParams(1.0, 0.0, 0.5, 0.5)), DivergentRegime);
  CHECK_THROWS_AS(squeeze_params(ModelParams(1.0, 0.0, 0.7, 0.5)), DivergentRegime);

  for (double g : {0.01, 0.1, 0.3, 0.45, 0.499}) {
    const auto sq = squeeze_params(ModelParams(2.0, 0.0, 2.0 * g, 1.0));
    CHECK(std::abs(std::pow(std::cosh(sq.xi), 2) - std::pow(std::sinh(sq.xi), 2) - 1.0) <= 1e-12);
    CHECK(std::abs(std::tanh(sq.xi) - 2.0 * g) <= 1e-14);
    CHECK(sq.gap > 0.0);
  }
}

TEST_CASE("weak limit") {
  CHECK(weak_limit_energies(ModelParams(1.0, 0.0, 0.0, 0.5), Parity::positive, 3) == std::vector<double>{0, 1, 2});
  CHECK(weak_limit_energies(ModelParams(1.0, 0.75, 0.0, 0.5), Parity::positive, 3) ==
        std::vector<double>{0.375, 0.625, 2.375});
  CHECK(weak_limit_energies(ModelParams(1.0, 0.75, 0.0, 0.5), Parity::negative, 2) ==
        std::vector<double>{-0.375, 1.375});
  // Large omega0 reorders the diagonal: 1 - 1.25 < 0 + 1.25 < 3 - 1.25.
  CHECK(weak_limit_energies(ModelParams(1.0, 2.5, 0.0, 0.5), Parity::positive, 3) ==
        std::vector<double>{-0.25, 1.25, 1.75});

  for (double omega0 : {0.0, 0.3, 1.0, 1.7, 2.9}) {
    for (Parity parity : {Parity::positive, Parity::negative}) {
      const ModelParams p(1.0, omega0, 0.0, 0.8);
      const auto numeric = eigen_tridiagonal(build_hamiltonian(p, parity, 40)).eigenvalues;
      const auto closed = weak_limit_energies(p, parity, 10);
      for (std::size_t i = 0; i < closed.size(); ++i) CHECK(numeric[i] == closed[i]);
    }
  }
}

TEST_CASE("deep-strong limit") {
  CHECK(deep_strong_energies(ModelParams(1.0, 0.0, 0.0, 0.5), 3) == std::vector<double>{0, 1, 2});

  const auto e = deep_strong_energies(ModelParams(1.0, 0.0, 0.2, 0.5), 2);
  CHECK(e[0] == doctest::Approx(std::sqrt(0.84) * 0.5 - 0.5).epsilon(1e-15));
  CHECK(e[1] == doctest::Approx(std::sqrt(0.84) * 1.5 - 0.5).epsilon(1e-15));
  CHECK(e[0] == doctest::Approx(-0.041742).epsilon(1e-5));
  CHECK(e[1] == doctest::Approx(0.8747727).epsilon(1e-7));

  const auto near = deep_strong_energies(ModelParams(1.0, 0.0, 0.49999, 0.5), 2);
  CHECK(near[1] - near[0] == doctest::Approx(std::sqrt(1.0 - 4.0 * 0.49999 * 0.49999)).epsilon(1e-10));
  CHECK(near[1] - near[0] == doctest::Approx(0.00632).epsilon(1e-3));

  CHECK_THROWS_AS(deep_strong_energies(ModelParams(1.0, 0.0, 0.5, 0.5), 2), DivergentRegime);

  const ModelParams p(1.0, 0.0, 0.35, 1.5);
  const auto ladder = deep_strong_energies(p, 20);
  const double gap = squeeze_params(p).gap;
  for (std::size_t j = 1; j < ladder.size(); ++j) CHECK(std::abs(ladder[j] - ladder[j - 1] - gap) <= 1e-13);
}

TEST_CASE("deep-strong limit matches the converged chain") {
  for (double k : {0.25, 0.5, 1.0, 2.0}) {
    for (double g : {0.1, 0.25, 0.4}) {
      const ModelParams p(1.0, 0.0, g, k);
      const std::vector<std::size_t> sizes{200, 400};
      const auto conv = ground_energy_vs_size(p, Parity::positive, sizes, 10);
      REQUIRE(conv.all_converged());
      const auto closed = deep_strong_energies(p, 10);
      for (std::size_t j = 0; j < 10; ++j) CHECK(std::abs(conv.verdicts[j].value - closed[j]) <= 1e-6);
    }
  }
}
