#include "interferoq/kernels.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace iq::kernels {

namespace {

inline int popcnt(Eigen::Index x) {
  return std::popcount(static_cast<unsigned long long>(x));
}

// Precomputed exp(-rate * k) for k = 0..nqubits (Hamming weights) or
// k = 0..nqubits^2 (squared J_z gaps); shared by both variants so they
// stay bit-identical.
std::vector<double> exp_table(double rate, int kmax) {
  std::vector<double> t(kmax + 1);
  for (int k = 0; k <= kmax; ++k) t[k] = std::exp(-rate * k);
  return t;
}

}  // namespace

void damp_hamming_serial(Matrix& rho, double gamma_tau) {
  const Eigen::Index dim = rho.rows();
  const auto t = exp_table(gamma_tau, popcnt(dim - 1));
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b)
      rho(a, b) *= t[popcnt(a ^ b)];
}

void damp_hamming_omp(Matrix& rho, double gamma_tau) {
  const Eigen::Index dim = rho.rows();
  const auto t = exp_table(gamma_tau, popcnt(dim - 1));
#pragma omp parallel for schedule(static)
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b)
      rho(a, b) *= t[popcnt(a ^ b)];
}

void damp_jz_gap_serial(Matrix& rho, double Gamma_tau, int nqubits) {
  const Eigen::Index dim = rho.rows();
  const auto t = exp_table(Gamma_tau, nqubits * nqubits);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      const int gap = popcnt(a) - popcnt(b);  // m_a - m_b = (pop_b - pop_a), sign irrelevant
      rho(a, b) *= t[gap * gap];
    }
}

void damp_jz_gap_omp(Matrix& rho, double Gamma_tau, int nqubits) {
  const Eigen::Index dim = rho.rows();
  const auto t = exp_table(Gamma_tau, nqubits * nqubits);
#pragma omp parallel for schedule(static)
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      const int gap = popcnt(a) - popcnt(b);
      rho(a, b) *= t[gap * gap];
    }
}

Matrix lindblad_rhs_independent(const Matrix& rho, double gamma, int nqubits) {
  const Eigen::Index dim = rho.rows();
  Matrix out(dim, dim);
#pragma omp parallel for schedule(static)
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      // gamma/2 * sum_i (sigma_iz rho sigma_iz - rho) entrywise:
      // sigma_iz conjugation gives sign -1 when qubit i differs in a, b.
      int sign_sum = 0;
      for (int i = 0; i < nqubits; ++i)
        sign_sum += (((a ^ b) >> i) & 1) ? -1 : 1;
      out(a, b) = 0.5 * gamma * (sign_sum - nqubits) * rho(a, b);
    }
  return out;
}

Matrix lindblad_rhs_collective(const Matrix& rho, double Gamma, int nqubits) {
  const Eigen::Index dim = rho.rows();
  Matrix out(dim, dim);
#pragma omp parallel for schedule(static)
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      // Gamma * (2 Jz rho Jz - Jz^2 rho - rho Jz^2) entrywise.
      const double ma = (nqubits - 2 * popcnt(a)) / 2.0;
      const double mb = (nqubits - 2 * popcnt(b)) / 2.0;
      out(a, b) = Gamma * (2.0 * ma * mb - ma * ma - mb * mb) * rho(a, b);
    }
  return out;
}

namespace {

constexpr std::uint64_t kMcChunks = 1024;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// xorshift-multiply generator; cheap, seedable, platform-independent.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(splitmix64(seed)) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s * 0x2545F4914F6CDD1DULL;
  }
  double u01() { return (next() >> 11) * 0x1.0p-53; }
};

std::uint64_t chunk_failures(int n, double p, std::uint64_t trials,
                             std::uint64_t chunk_seed) {
  Rng rng(chunk_seed);
  const int threshold = (n + 1) / 2;  // code fails when flips >= (n+1)/2
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    int flips = 0;
    for (int i = 0; i < n; ++i)
      if (rng.u01() < p) ++flips;
    if (flips >= threshold) ++failures;
  }
  return failures;
}

}  // namespace

std::uint64_t mc_majority_failures_serial(int n, double p, std::uint64_t trials,
                                          std::uint64_t seed) {
  std::uint64_t total = 0;
  for (std::uint64_t c = 0; c < kMcChunks; ++c) {
    const std::uint64_t count = trials / kMcChunks + (c < trials % kMcChunks ? 1 : 0);
    total += chunk_failures(n, p, count, splitmix64(seed) ^ splitmix64(c + 1));
  }
  return total;
}

std::uint64_t mc_majority_failures_omp(int n, double p, std::uint64_t trials,
                                       std::uint64_t seed) {
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (std::uint64_t c = 0; c < kMcChunks; ++c) {
    const std::uint64_t count = trials / kMcChunks + (c < trials % kMcChunks ? 1 : 0);
    total += chunk_failures(n, p, count, splitmix64(seed) ^ splitmix64(c + 1));
  }
  return total;
}

}  // namespace iq::kernels
