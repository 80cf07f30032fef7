#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "su2mm/pauli.hpp"

namespace su2mm {

enum class GateKind : std::uint8_t { H, S, Sdg, Rz, CX, Measure };

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;        // target for CX, unused otherwise
  double angle = 0.0; // Rz only
};

struct CircuitMeta {
  int trotter_steps = 1;
  double dt = 0.0;
  int fold = 1;
  std::string mode;      // "full" or "interaction"
  std::string ordering;  // term-ordering tag recorded for reproducibility
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  CircuitMeta meta;
};

struct CircuitMetrics {
  int depth = 0;
  int twoq_depth = 0;
  int twoq_count = 0;
};

/// Deterministic term ordering (descending |c|, lexicographic tie-break on the
/// letter string) plus a greedy partition into layers of pairwise
/// disjoint-support terms.
struct TrotterPlan {
  std::vector<std::pair<PauliString, double>> terms;  // non-identity, real coeffs
  std::vector<std::vector<int>> layers;               // indices into terms
};

TrotterPlan order_terms(const PauliSum& h);

/// Single Pauli exponential exp(-i theta P) as a basis-change bracket plus a
/// CX chain with an Rz(2 theta) at the apex; 2(weight-1) entanglers. The
/// identity string compiles to nothing (global phase).
std::vector<Gate> synthesize_term(const PauliString& p, double theta);

/// r repetitions of a first-order product step for exp(-i h t).
///
/// The step is compiled group-wise: terms sharing the same X/Y letter pattern
/// commute, so each group is one basis-change bracket around a parity walk
/// that accumulates Z-products on an apex qubit with shared CX fan-in. Walk
/// order minimizes (bit-0-qubit toggles, total toggles); bit-0 qubits carry
/// the occupation parities used by post-selection, so entanglers are steered
/// off them. Exact Held-Karp for groups of <= 12 members, membership-
/// contiguous sort plus weighted 2-opt beyond.
///
/// `mode` is a provenance label ("interaction" when h is the interaction part
/// only, "full" otherwise); K fixes the bit-0 qubit positions (mode stride).
Circuit build_trotter_circuit(const PauliSum& h, double t, int r, int K,
                              const std::string& mode = "full");

CircuitMetrics circuit_metrics(const Circuit& c);

/// Two-qubit gate folding: every entangler g becomes g (g^dag g)^k, scaling
/// the entangler count by 2k+1 while preserving the ideal unitary.
Circuit fold_circuit(const Circuit& c, int k);

std::string dump_circuit(const Circuit& c);

}  // namespace su2mm
