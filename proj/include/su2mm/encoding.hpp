#pragma once

#include <array>
#include <cstdint>

#include "su2mm/pauli.hpp"

namespace su2mm {

/// Truncation and coupling parameters. Each of the N^2-1 = 3 oscillator modes
/// keeps its lowest Lambda = 2^K number states, encoded in binary on K qubits.
/// Qubit layout is mode-major: mode a occupies qubits [a*K, a*K + K), with bit
/// ell (value 2^ell) of the occupation number on qubit a*K + ell.
struct TruncationConfig {
  int N = 2;
  int K = 2;
  double m = 1.0;
  double lambda = 0.0;

  int Lambda() const { return 1 << K; }
  int n_qubits() const { return (N * N - 1) * K; }
};

struct FockIndex {
  std::array<int, 3> occ{0, 0, 0};
  bool operator==(const FockIndex&) const = default;
};

/// |bra><ket| on a single K-qubit mode, expanded in Pauli strings via the
/// projector identities |0><0| = (1+Z)/2, |1><1| = (1-Z)/2,
/// |0><1| = (X+iY)/2, |1><0| = (X-iY)/2 (Z|0> = +|0> convention).
PauliSum fock_transition(int K, int bra, int ket);

/// Truncated annihilation operator: a|k> = sqrt(k)|k-1> for 1 <= k < Lambda.
PauliSum lowering_op(int K);
/// Adjoint of lowering_op; kills |Lambda-1>.
PauliSum raising_op(int K);

/// X = (a + a^dag)/sqrt(2m) and P = i sqrt(m/2)(a^dag - a) on one mode.
PauliSum position_op(int K, double m);
PauliSum momentum_op(int K, double m);

/// Number operator sum_i 2^i (1 - Z_i)/2; eigenvalue k on |k>.
PauliSum number_op(int K);

/// Lift a K-qubit single-mode operator onto the full 3K-qubit register.
PauliSum embed(const PauliSum& mode_op, int mode_index, const TruncationConfig& cfg);

/// Occupation-parity operator of one mode: (-1)^{n_a} = Z on the mode's bit-0
/// qubit (n mod 2 is the lowest binary digit).
PauliSum parity_op(int mode_index, const TruncationConfig& cfg);

std::uint64_t fock_encode(const FockIndex& f, const TruncationConfig& cfg);
FockIndex fock_decode(std::uint64_t bits, const TruncationConfig& cfg);

}  // namespace su2mm
