#pragma once

#include <Eigen/Dense>

namespace su2mm {

/// Chebyshev collocation grid for the radial problem on r in [0, inf).
///
/// The half-line is compactified by z = tanh(r/L). Collocation nodes are the
/// Chebyshev-Gauss-Lobatto points cos(pi j / n_grid) mapped affinely onto the
/// unit interval, z_j = (1 + cos(pi j / n_grid))/2, j = 0..n_grid, so z runs
/// from 1 (r = inf) down to 0 (r = 0). D1 is the exact polynomial
/// differentiation matrix on these nodes; the radial second derivative is
/// D2r = diag(1/p) D1 diag(1/p) D1 with p = L/(1 - z^2). The rows/columns at
/// z = 1 and z = 0 are dropped when solving (decay and u(0) = 0 conditions).
struct SpectralGrid {
  double L = 3.0;
  int n_grid = 120;
  Eigen::VectorXd z;        // all nodes, j = 0..n_grid (descending)
  Eigen::VectorXd r;        // L atanh(z); r(0) is +inf and never used
  Eigen::MatrixXd D1;       // first derivative in z on all nodes
  Eigen::MatrixXd D2r;      // second derivative in r on all nodes
  Eigen::VectorXd quad_w;   // Clenshaw-Curtis weights in r (0 at endpoints)
};

SpectralGrid build_grid(double L, int n_grid);

/// Lowest eigenpairs of -1/2 d^2/dr^2 + l(l+1)/(2 r^2) + V(r) with
/// V = m^2 r^2 / 2 + lambda r^4 / 64, plus overlaps of each eigenfunction
/// with the radial reduction of the free vacuum.
struct SpectrumResult {
  Eigen::VectorXd energies;        // ascending
  Eigen::VectorXd r;               // interior nodes, ascending
  Eigen::MatrixXd eigenfunctions;  // column n = u_n at r (unit norm)
  Eigen::VectorXd overlaps;        // |c_n|^2
  double lambda = 0.0;
  double m = 1.0;
  int ell = 0;
};

SpectrumResult solve_spectrum(const SpectralGrid& grid, double m, double lambda,
                              int ell = 0, int n_states = 32);

/// Normalized radial reduction of the 3D free ground state,
/// u_vac(r) = 2 m^{3/4} pi^{-1/4} r exp(-m r^2 / 2).
double vacuum_radial(double r, double m);

}  // namespace su2mm
