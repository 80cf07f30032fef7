#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "su2mm/encoding.hpp"
#include "su2mm/pauli.hpp"

namespace su2mm {

/// The truncated N=2 matrix-model operators on the 3K-qubit register.
///
/// h_free = (1/2) sum_a (P_a^2 + m^2 X_a^2) with the quadratics built from
/// normal-ordered truncated ladders; it comes out equal to m sum_a (N_a + 1/2)
/// and is diagonal in the Z basis. h_int = (lambda/64) S^2 with
/// S = sum_a X_a^2 and the square taken in the truncated operator algebra.
struct ModelOperators {
  PauliSum h_full;
  PauliSum h_free;
  PauliSum h_int;
  std::array<PauliSum, 3> gauge_generators;
  TruncationConfig cfg;
};

ModelOperators build_hamiltonian(const TruncationConfig& cfg);

/// G_a = i sum_{bc} eps_abc adag_b a_c with truncated ladders.
std::array<PauliSum, 3> build_gauge_generators(const TruncationConfig& cfg);

/// Orthonormal singlet-sector basis, generated by powers of the pair-creation
/// operator sum_a (adag_a)^2 acting on the Fock vacuum; dimension 2^{K-1}.
struct SingletBasis {
  std::vector<Eigen::VectorXcd> vectors;
  int k_max = 0;
};

SingletBasis build_singlet_basis(const TruncationConfig& cfg);

/// N_tot = sum_a N_a on the full register (diagonal).
PauliSum total_number_op(const TruncationConfig& cfg);

}  // namespace su2mm
