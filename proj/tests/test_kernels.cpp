#include <bit>

#include "doctest.h"
#include "interferoq/kernels.hpp"
#include "interferoq/states.hpp"
#include "test_helpers.hpp"

using namespace iq;

TEST_CASE("damping kernels: OpenMP variant is bit-identical to serial") {
  for (int n : {2, 5, 7}) {
    CAPTURE(n);
    const DensityMatrix rho = random_density_matrix(n, 100 + n);
    Matrix serial_ind = rho.matrix, omp_ind = rho.matrix;
    kernels::damp_hamming_serial(serial_ind, 0.37);
    kernels::damp_hamming_omp(omp_ind, 0.37);
    CHECK(iq::test::max_abs_diff(serial_ind, omp_ind) == 0.0);

    Matrix serial_col = rho.matrix, omp_col = rho.matrix;
    kernels::damp_jz_gap_serial(serial_col, 0.37, n);
    kernels::damp_jz_gap_omp(omp_col, 0.37, n);
    CHECK(iq::test::max_abs_diff(serial_col, omp_col) == 0.0);
  }
}

TEST_CASE("damping kernels apply the right per-entry factors") {
  const int n = 4;
  const DensityMatrix rho = random_density_matrix(n, 7);
  Matrix ind = rho.matrix;
  kernels::damp_hamming_serial(ind, 0.25);
  Matrix col = rho.matrix;
  kernels::damp_jz_gap_serial(col, 0.25, n);
  const Matrix jz = collective_jz(n);
  for (Eigen::Index a = 0; a < rho.dim(); ++a)
    for (Eigen::Index b = 0; b < rho.dim(); ++b) {
      const int hamming = std::popcount(static_cast<unsigned>(a ^ b));
      CHECK(std::abs(ind(a, b) - rho.matrix(a, b) * std::exp(-0.25 * hamming)) <
            1e-15);
      const double gap = jz(a, a).real() - jz(b, b).real();
      CHECK(std::abs(col(a, b) - rho.matrix(a, b) * std::exp(-0.25 * gap * gap)) <
            1e-15);
    }
}

TEST_CASE("Lindblad right-hand sides equal the exact-channel time derivative") {
  // d/dt [e^{-gamma t hamming} rho_ab] at t = 0 is -gamma hamming(a,b) rho_ab,
  // and similarly -Gamma (m_a - m_b)^2 rho_ab for the collective generator.
  const int n = 3;
  const DensityMatrix rho = random_density_matrix(n, 8);
  const Matrix jz = collective_jz(n);
  const Matrix rhs_ind = kernels::lindblad_rhs_independent(rho.matrix, 0.6, n);
  const Matrix rhs_col = kernels::lindblad_rhs_collective(rho.matrix, 0.6, n);
  for (Eigen::Index a = 0; a < rho.dim(); ++a)
    for (Eigen::Index b = 0; b < rho.dim(); ++b) {
      const int hamming = std::popcount(static_cast<unsigned>(a ^ b));
      CHECK(std::abs(rhs_ind(a, b) + 0.6 * hamming * rho.matrix(a, b)) < 1e-15);
      const double gap = jz(a, a).real() - jz(b, b).real();
      CHECK(std::abs(rhs_col(a, b) + 0.6 * gap * gap * rho.matrix(a, b)) < 1e-15);
    }
}

TEST_CASE("Monte-Carlo majority-vote kernel") {
  SUBCASE("OpenMP variant is identical to serial") {
    for (std::uint64_t trials : {std::uint64_t{1000}, std::uint64_t{100003}}) {
      CHECK(kernels::mc_majority_failures_serial(3, 0.1, trials, 99) ==
            kernels::mc_majority_failures_omp(3, 0.1, trials, 99));
      CHECK(kernels::mc_majority_failures_serial(5, 0.3, trials, 1) ==
            kernels::mc_majority_failures_omp(5, 0.3, trials, 1));
    }
  }
  SUBCASE("deterministic in the seed, sensitive to the seed") {
    const auto a = kernels::mc_majority_failures_omp(3, 0.1, 200000, 7);
    const auto b = kernels::mc_majority_failures_omp(3, 0.1, 200000, 7);
    const auto c = kernels::mc_majority_failures_omp(3, 0.1, 200000, 8);
    CHECK(a == b);
    CHECK(a != c);
  }
  SUBCASE("edge probabilities") {
    CHECK(kernels::mc_majority_failures_omp(5, 0.0, 100000, 3) == 0);
    CHECK(kernels::mc_majority_failures_omp(5, 1.0, 100000, 3) == 100000);
  }
  SUBCASE("n = 1 frequency tracks p within 3 sigma") {
    const std::uint64_t trials = 1000000;
    const double p = 0.3;
    const double freq =
        static_cast<double>(kernels::mc_majority_failures_omp(1, p, trials, 5)) /
        static_cast<double>(trials);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    CHECK(std::abs(freq - p) < 3.0 * sigma);
  }
}
