#include "su2mm/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace su2mm {

namespace {

// Polynomial differentiation matrix on arbitrary distinct nodes.
// (D1)_ij = a_i / (a_j (z_i - z_j)) for i != j, diagonal sum 1/(z_i - z_k),
// with a_j = prod_{k != j} (z_j - z_k) handled in log space.
Eigen::MatrixXd diff_matrix(const Eigen::VectorXd& z) {
  const int M = static_cast<int>(z.size());
  Eigen::VectorXd loga(M);
  Eigen::VectorXd sign(M);
  for (int j = 0; j < M; ++j) {
    double ls = 0;
    double sg = 1;
    for (int k = 0; k < M; ++k) {
      if (k == j) continue;
      const double d = z(j) - z(k);
      ls += std::log(std::abs(d));
      sg *= d > 0 ? 1.0 : -1.0;
    }
    loga(j) = ls;
    sign(j) = sg;
  }
  Eigen::MatrixXd D(M, M);
  for (int i = 0; i < M; ++i) {
    double diag = 0;
    for (int j = 0; j < M; ++j) {
      if (i == j) continue;
      D(i, j) = sign(i) / sign(j) * std::exp(loga(i) - loga(j)) / (z(i) - z(j));
      diag += 1.0 / (z(i) - z(j));
    }
    D(i, i) = diag;
  }
  return D;
}

// Clenshaw-Curtis weights for cos(pi j / N) nodes on [-1, 1].
Eigen::VectorXd cc_weights(int N) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(N + 1);
  Eigen::VectorXd theta(N + 1);
  for (int j = 0; j <= N; ++j) theta(j) = std::numbers::pi * j / N;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(N - 1);
  if (N % 2 == 0) {
    w(0) = w(N) = 1.0 / (N * N - 1.0);
    for (int k = 1; k < N / 2; ++k)
      for (int j = 1; j < N; ++j)
        v(j - 1) -= 2.0 * std::cos(2.0 * k * theta(j)) / (4.0 * k * k - 1.0);
    for (int j = 1; j < N; ++j) v(j - 1) -= std::cos(N * theta(j)) / (N * N - 1.0);
  } else {
    w(0) = w(N) = 1.0 / (N * N);
    for (int k = 1; k <= (N - 1) / 2; ++k)
      for (int j = 1; j < N; ++j)
        v(j - 1) -= 2.0 * std::cos(2.0 * k * theta(j)) / (4.0 * k * k - 1.0);
  }
  for (int j = 1; j < N; ++j) w(j) = 2.0 * v(j - 1) / N;
  return w;
}

}  // namespace

double vacuum_radial(double r, double m) {
  return 2.0 * std::pow(m, 0.75) * std::pow(std::numbers::pi, -0.25) * r *
         std::exp(-0.5 * m * r * r);
}

SpectralGrid build_grid(double L, int n_grid) {
  if (n_grid < 16) throw std::invalid_argument("build_grid: n_grid must be >= 16");
  if (L <= 0) throw std::invalid_argument("build_grid: L must be positive");
  const int N = n_grid;
  SpectralGrid g;
  g.L = L;
  g.n_grid = n_grid;
  g.z.resize(N + 1);
  for (int j = 0; j <= N; ++j)
    g.z(j) = 0.5 * (1.0 + std::cos(std::numbers::pi * j / N));
  g.z(0) = 1.0;
  g.z(N) = 0.0;
  g.r.resize(N + 1);
  g.r(0) = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= N; ++j) g.r(j) = L * std::atanh(g.z(j));
  g.D1 = diff_matrix(g.z);
  Eigen::VectorXd invp(N + 1);
  for (int j = 0; j <= N; ++j) invp(j) = (1.0 - g.z(j) * g.z(j)) / L;
  g.D2r = invp.asDiagonal() * g.D1 * invp.asDiagonal() * g.D1;
  // quadrature in r: CC weights on [-1,1] scaled to [0,1], times dr/dz
  Eigen::VectorXd wz = cc_weights(N) * 0.5;
  g.quad_w = Eigen::VectorXd::Zero(N + 1);
  for (int j = 1; j <= N; ++j) g.quad_w(j) = wz(j) * L / (1.0 - g.z(j) * g.z(j));
  return g;
}

SpectrumResult solve_spectrum(const SpectralGrid& grid, double m, double lambda,
                              int ell, int n_states) {
  const int N = grid.n_grid;
  const int M = N - 1;  // interior nodes j = 1..N-1
  Eigen::MatrixXd A(M, M);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) A(i, j) = -0.5 * grid.D2r(i + 1, j + 1);
  for (int i = 0; i < M; ++i) {
    const double r = grid.r(i + 1);
    double V = 0.5 * m * m * r * r + lambda / 64.0 * r * r * r * r;
    if (ell > 0) V += ell * (ell + 1) / (2.0 * r * r);
    A(i, i) += V;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("solve_spectrum: eigensolver failed (L=" +
                             std::to_string(grid.L) + ", n_grid=" + std::to_string(N) + ")");

  std::vector<int> order(M);
  for (int i = 0; i < M; ++i) order[i] = i;
  const auto& ev = es.eigenvalues();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ev(a).real() < ev(b).real(); });

  const int ns = std::min(n_states, M);
  SpectrumResult res;
  res.lambda = lambda;
  res.m = m;
  res.ell = ell;
  res.energies.resize(ns);
  res.r.resize(M);
  res.eigenfunctions.resize(M, ns);
  res.overlaps.resize(ns);

  // interior nodes come out with r descending; expose ascending
  for (int i = 0; i < M; ++i) res.r(i) = grid.r(N - 1 - i);
  Eigen::VectorXd w(M);
  for (int i = 0; i < M; ++i) w(i) = grid.quad_w(N - 1 - i);
  Eigen::VectorXd uvac(M);
  for (int i = 0; i < M; ++i) uvac(i) = vacuum_radial(res.r(i), m);

  for (int s = 0; s < ns; ++s) {
    const int idx = order[s];
    if (std::abs(ev(idx).imag()) > 1e-8 * std::max(1.0, std::abs(ev(idx).real())))
      throw std::runtime_error("solve_spectrum: complex eigenvalue encountered");
    res.energies(s) = ev(idx).real();
    Eigen::VectorXd u(M);
    for (int i = 0; i < M; ++i) u(i) = es.eigenvectors().col(idx)(M - 1 - i).real();
    const double nrm = std::sqrt((w.array() * u.array().square()).sum());
    u /= nrm;
    const double c = (w.array() * u.array() * uvac.array()).sum();
    if (c < 0) u = -u;  // fix overall sign against the vacuum
    res.eigenfunctions.col(s) = u;
    res.overlaps(s) = c * c;
  }
  return res;
}

}  // namespace su2mm
