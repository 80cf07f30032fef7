#include "su2mm/encoding.hpp"

#include <cmath>

namespace su2mm {

PauliSum fock_transition(int K, int bra, int ket) {
  const int Lam = 1 << K;
  if (bra < 0 || bra >= Lam || ket < 0 || ket >= Lam)
    throw std::out_of_range("fock_transition: index outside cutoff");
  PauliSum acc = PauliSum::identity(K);
  for (int ell = 0; ell < K; ++ell) {
    const int b_bra = (bra >> ell) & 1;
    const int b_ket = (ket >> ell) & 1;
    PauliSum f(K);
    const PauliString id(K);
    const PauliString z = PauliString::single(K, ell, Pauli::Z);
    const PauliString x = PauliString::single(K, ell, Pauli::X);
    const PauliString y = PauliString::single(K, ell, Pauli::Y);
    if (b_bra == 0 && b_ket == 0) {
      f.add_term(id, 0.5);
      f.add_term(z, 0.5);
    } else if (b_bra == 1 && b_ket == 1) {
      f.add_term(id, 0.5);
      f.add_term(z, -0.5);
    } else if (b_bra == 0 && b_ket == 1) {
      f.add_term(x, 0.5);
      f.add_term(y, Complex{0, 0.5});
    } else {
      f.add_term(x, 0.5);
      f.add_term(y, Complex{0, -0.5});
    }
    acc = acc * f;
  }
  return acc;
}

PauliSum lowering_op(int K) {
  if (K < 1) throw std::invalid_argument("lowering_op: K must be >= 1");
  const int Lam = 1 << K;
  PauliSum a(K);
  for (int k = 1; k < Lam; ++k) {
    PauliSum t = fock_transition(K, k - 1, k);
    t *= std::sqrt(static_cast<double>(k));
    a += t;
  }
  return a;
}

PauliSum raising_op(int K) { return lowering_op(K).adjoint(); }

PauliSum position_op(int K, double m) {
  PauliSum a = lowering_op(K);
  PauliSum x = a + a.adjoint();
  x *= 1.0 / std::sqrt(2.0 * m);
  return x;
}

PauliSum momentum_op(int K, double m) {
  PauliSum a = lowering_op(K);
  PauliSum p = a.adjoint() - a;
  p *= Complex{0, 1} * std::sqrt(m / 2.0);
  return p;
}

PauliSum number_op(int K) {
  PauliSum n(K);
  const PauliString id(K);
  for (int i = 0; i < K; ++i) {
    const double w = static_cast<double>(1 << i);
    n.add_term(id, 0.5 * w);
    n.add_term(PauliString::single(K, i, Pauli::Z), -0.5 * w);
  }
  return n;
}

PauliSum embed(const PauliSum& mode_op, int mode_index, const TruncationConfig& cfg) {
  if (mode_index < 0 || mode_index >= cfg.N * cfg.N - 1)
    throw std::out_of_range("embed: mode index");
  if (mode_op.n_qubits() != cfg.K)
    throw std::invalid_argument("embed: operator is not a single-mode operator");
  const int n = cfg.n_qubits();
  const int off = mode_index * cfg.K;
  PauliSum out(n, mode_op.prune_tolerance());
  for (const auto& [p, c] : mode_op.sorted_terms()) {
    PauliString q(n);
    for (int ell = 0; ell < cfg.K; ++ell) q.set_letter(off + ell, p.letter(ell));
    out.add_term(q, c);
  }
  return out;
}

PauliSum parity_op(int mode_index, const TruncationConfig& cfg) {
  return PauliSum::single(cfg.n_qubits(), mode_index * cfg.K, Pauli::Z);
}

std::uint64_t fock_encode(const FockIndex& f, const TruncationConfig& cfg) {
  std::uint64_t bits = 0;
  for (int a = 0; a < 3; ++a) {
    if (f.occ[a] < 0 || f.occ[a] >= cfg.Lambda())
      throw std::out_of_range("fock_encode: occupation outside cutoff");
    bits |= static_cast<std::uint64_t>(f.occ[a]) << (a * cfg.K);
  }
  return bits;
}

FockIndex fock_decode(std::uint64_t bits, const TruncationConfig& cfg) {
  if (bits >> cfg.n_qubits())
    throw std::out_of_range("fock_decode: bitstring outside register");
  FockIndex f;
  const std::uint64_t mask = (std::uint64_t{1} << cfg.K) - 1;
  for (int a = 0; a < 3; ++a) f.occ[a] = static_cast<int>((bits >> (a * cfg.K)) & mask);
  return f;
}

}  // namespace su2mm
