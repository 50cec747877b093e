#pragma once

#include <cstdint>

#include "interferoq/linalg.hpp"

namespace iq {

// Hilbert-space cap. Everything here is a desk-scale brute-force oracle;
// large-N results go through the closed forms instead.
inline constexpr int kMaxQubits = 12;

// Basis convention: computational basis index b has qubit i stored in bit i,
// |0> <-> bit value 0. So |1...1> is index 2^N - 1.

struct PureState {
  Vector amplitudes;  // length 2^nqubits, unit norm
  int nqubits = 0;

  Matrix density_matrix() const { return amplitudes * amplitudes.adjoint(); }
};

struct DensityMatrix {
  Matrix matrix;  // 2^nqubits x 2^nqubits
  int nqubits = 0;

  Eigen::Index dim() const { return matrix.rows(); }
  // Checks trace, Hermiticity and positivity; throws on violation.
  void validate() const;
};

DensityMatrix density_from_pure(const PureState& psi);

// (|0...0> + |1...1>)/sqrt(2)
PureState ghz_state(int nqubits);

// |+>^N : all amplitudes 2^{-N/2}
PureState product_plus_state(int nqubits);

// J_z = sum_i sigma_iz / 2, diagonal in the computational basis.
Matrix collective_jz(int nqubits);

// Conjugation by exp(-i * phase * generator); generator must be diagonal.
DensityMatrix phase_gate(const DensityMatrix& state, double phase,
                         const Matrix& generator);

// Seeded full-rank random state (Ginibre construction), for oracle checks.
DensityMatrix random_density_matrix(int nqubits, std::uint64_t seed);

}  // namespace iq
