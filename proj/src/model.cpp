#include "su2mm/model.hpp"

#include <cmath>

namespace su2mm {

namespace {

// Normal-ordered single-mode quadratics, truncated: with a the truncated
// lowering operator, X^2 -> (adag^2 + a^2 + 2 adag a + 1)/(2m) and
// P^2 -> (m/2)(2 adag a + 1 - adag^2 - a^2).
struct ModeQuadratics {
  PauliSum x2;
  PauliSum p2;
};

ModeQuadratics mode_quadratics(int K, double m) {
  const PauliSum a = lowering_op(K);
  const PauliSum ad = a.adjoint();
  const PauliSum one = PauliSum::identity(K);
  PauliSum core = ad * a;
  core *= 2.0;
  core += one;
  PauliSum off = ad * ad + a * a;
  PauliSum x2 = core + off;
  x2 *= 1.0 / (2.0 * m);
  PauliSum p2 = core - off;
  p2 *= m / 2.0;
  return {x2, p2};
}

}  // namespace

ModelOperators build_hamiltonian(const TruncationConfig& cfg) {
  if (cfg.N != 2)
    throw std::invalid_argument("build_hamiltonian: only N=2 is supported");
  const int n = cfg.n_qubits();
  const auto quad = mode_quadratics(cfg.K, cfg.m);

  PauliSum h_free(n);
  PauliSum s(n);
  for (int a = 0; a < 3; ++a) {
    PauliSum x2a = embed(quad.x2, a, cfg);
    PauliSum p2a = embed(quad.p2, a, cfg);
    h_free += 0.5 * (p2a + cfg.m * cfg.m * x2a);
    s += x2a;
  }
  PauliSum h_int = s * s;
  h_int *= cfg.lambda / 64.0;

  ModelOperators ops{h_free + h_int, h_free, h_int, build_gauge_generators(cfg), cfg};
  return ops;
}

std::array<PauliSum, 3> build_gauge_generators(const TruncationConfig& cfg) {
  if (cfg.N != 2)
    throw std::invalid_argument("build_gauge_generators: only N=2 is supported");
  const int n = cfg.n_qubits();
  const PauliSum low = lowering_op(cfg.K);
  const PauliSum rai = low.adjoint();
  std::array<PauliSum, 3> g{PauliSum(n), PauliSum(n), PauliSum(n)};
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    const int c = (a + 2) % 3;
    PauliSum t = embed(rai, b, cfg) * embed(low, c, cfg) -
                 embed(rai, c, cfg) * embed(low, b, cfg);
    t *= Complex{0, 1};
    g[a] = t;
  }
  return g;
}

SingletBasis build_singlet_basis(const TruncationConfig& cfg) {
  if (cfg.N != 2)
    throw std::invalid_argument("build_singlet_basis: only N=2 is supported");
  const int n = cfg.n_qubits();
  const std::int64_t dim = std::int64_t{1} << n;
  const PauliSum rai = lowering_op(cfg.K).adjoint();
  PauliSum pair(n);
  for (int a = 0; a < 3; ++a) {
    PauliSum ra = embed(rai, a, cfg);
    pair += ra * ra;
  }
  SingletBasis basis;
  basis.k_max = (1 << (cfg.K - 1)) - 1;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(0) = 1.0;
  basis.vectors.push_back(v);
  for (int k = 1; k <= basis.k_max; ++k) {
    v = pair.apply(v);
    const double nrm = v.norm();
    if (nrm <= 0) throw std::runtime_error("build_singlet_basis: null state");
    v /= nrm;
    basis.vectors.push_back(v);
  }
  return basis;
}

PauliSum total_number_op(const TruncationConfig& cfg) {
  PauliSum out(cfg.n_qubits());
  for (int a = 0; a < 3; ++a) out += embed(number_op(cfg.K), a, cfg);
  return out;
}

}  // namespace su2mm
