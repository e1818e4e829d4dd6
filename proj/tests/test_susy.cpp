#include <doctest.h>

#include <cmath>

#include "irabi/errors.hpp"
#include "irabi/limits.hpp"
#include "irabi/susy.hpp"
#include "irabi/tridiag_eigen.hpp"

using namespace irabi;

TEST_CASE("alpha parameter") {
  CHECK(alpha_parameter(ModelParams(1.0, 0.0, 0.0, 0.5)) == 1.0);
  CHECK(alpha_parameter(ModelParams(1.0, 0.0, 0.2, 0.5)) ==
        doctest::Approx(std::sqrt((1.0 + std::sqrt(0.84)) / 2.0)).epsilon(1e-15));
  CHECK(alpha_parameter(ModelParams(1.0, 0.0, 0.2, 0.5)) == doctest::Approx(0.978906).epsilon(1e-6));
  CHECK(alpha_parameter(ModelParams(1.0, 0.0, 0.5 - 1e-12, 0.5)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));
  CHECK_THROWS_AS(alpha_parameter(ModelParams(1.0, 0.0, 0.5, 0.5)), DivergentRegime);
  CHECK_THROWS_AS(alpha_parameter(ModelParams(1.0, 0.1, 0.2, 0.5)), NonDegenerateQubit);
}

TEST_CASE("partner construction") {
  const auto free = build_susy_pair(ModelParams(1.0, 0.0, 0.0, 0.5), 3);
  CHECK(free.h_minus.diagonal == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(free.h_plus.diagonal == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(free.h_minus.offdiagonal == std::vector<double>{0.0, 0.0});
  CHECK(free.h_plus.offdiagonal == std::vector<double>{0.0, 0.0});
  CHECK(free.k_partner() == 1.0);

  const auto pair = build_susy_pair(ModelParams(1.0, 0.0, 0.2, 0.5), 2);
  const double gap = std::sqrt(0.84);
  CHECK(pair.h_minus.diagonal[0] == doctest::Approx(0.5 - 0.5 * gap).epsilon(1e-15));
  CHECK(pair.h_minus.diagonal[1] == doctest::Approx(1.5 - 0.5 * gap).epsilon(1e-15));
  CHECK(pair.h_minus.diagonal[0] == doctest::Approx(0.041742).epsilon(1e-5));
  CHECK(pair.h_minus.offdiagonal[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(pair.gap == doctest::Approx(gap).epsilon(1e-15));

  CHECK_THROWS_AS(build_susy_pair(ModelParams(1.0, 0.0, 0.2, 0.5), 1), ConfigError);
  CHECK_THROWS_AS(build_susy_pair(ModelParams(1.0, 0.3, 0.2, 0.5), 10), NonDegenerateQubit);
  CHECK_THROWS_AS(build_susy_pair(ModelParams(1.0, 0.0, 0.6, 0.5), 10), DivergentRegime);
}

TEST_CASE("partners are the model at k and k + 1/2 up to constant shifts") {
  for (double k : {0.3, 0.5, 1.0, 1.7}) {
    const ModelParams p(1.3, 0.0, 0.4, k);
    const std::size_t n = 25;
    const auto pair = build_susy_pair(p, n);
    const auto base = build_hamiltonian(p, Parity::positive, n);
    const auto partner = build_hamiltonian(p.with_k(k + 0.5), Parity::positive, n);
    CHECK(pair.h_minus.offdiagonal == base.offdiagonal);
    CHECK(pair.h_plus.offdiagonal == partner.offdiagonal);
    CHECK(pair.h_plus.params.k() == k + 0.5);
    CHECK(pair.k_partner() == k + 0.5);
    const double minus_shift = p.omega() * k - k * pair.gap;
    const double plus_shift = p.omega() * (k + 0.5) + (0.5 - k) * pair.gap;
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(pair.h_minus.diagonal[j] == doctest::Approx(base.diagonal[j] + minus_shift).epsilon(1e-14));
      CHECK(pair.h_plus.diagonal[j] == doctest::Approx(partner.diagonal[j] + plus_shift).epsilon(1e-14));
    }
  }
}

TEST_CASE("closed-form partner spectra") {
  const auto [lo, hi] = closed_form_susy_energies(ModelParams(1.0, 0.0, 0.2, 0.5), 2);
  CHECK(lo[0] == 0.0);
  CHECK(lo[1] == doctest::Approx(0.916515).epsilon(1e-6));
  CHECK(hi[0] == doctest::Approx(0.916515).epsilon(1e-6));
  CHECK(hi[1] == doctest::Approx(1.833030).epsilon(1e-6));
  const auto [lo0, hi0] = closed_form_susy_energies(ModelParams(1.0, 0.0, 0.0, 0.5), 3);
  CHECK(lo0 == std::vector<double>{0, 1, 2});
  CHECK(hi0 == std::vector<double>{1, 2, 3});
  CHECK_THROWS_AS(closed_form_susy_energies(ModelParams(1.0, 0.0, 0.55, 0.5), 3), DivergentRegime);
}

TEST_CASE("isospectrality") {
  SUBCASE("g = 0.2, k = 1/2") {
    const ModelParams p(1.0, 0.0, 0.2, 0.5);
    const auto r = verify_isospectrality(build_susy_pair(p, 400), 10, 1e-6);
    CHECK(r.passed);
    CHECK(r.ground_residual <= 1e-6);
    const auto [lo, hi] = closed_form_susy_energies(p, 10);
    for (std::size_t j = 0; j < 10; ++j) {
      CHECK(std::abs(r.omega_minus[j] - lo[j]) <= 1e-6);
      CHECK(std::abs(r.omega_plus[j] - hi[j]) <= 1e-6);
    }
  }
  SUBCASE("free pair is exact") {
    const auto r = verify_isospectrality(build_susy_pair(ModelParams(1.0, 0.0, 0.0, 0.5), 20), 5, 1e-12);
    CHECK(r.passed);
    CHECK(r.ground_residual == 0.0);
  }
  SUBCASE("g = 0.45, k = 1") {
    const ModelParams p(1.0, 0.0, 0.45, 1.0);
    const std::vector<std::size_t> sizes{150, 300, 600};
    REQUIRE(ground_energy_vs_size(p, Parity::positive, sizes, 6).all_converged());
    const auto r = verify_isospectrality(build_susy_pair(p, 600), 6, 1e-5);
    CHECK(r.passed);
  }
  SUBCASE("tight tolerance fails honestly on a short truncation") {
    const auto r = verify_isospectrality(build_susy_pair(ModelParams(1.0, 0.0, 0.45, 0.5), 12), 6, 1e-9);
    CHECK_FALSE(r.passed);
  }
  SUBCASE("too few levels") {
    CHECK_THROWS_AS(verify_isospectrality(build_susy_pair(ModelParams(1.0, 0.0, 0.2, 0.5), 10), 1, 1e-6),
                    ConfigError);
  }
}
