#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "su2mm/pauli.hpp"
#include "su2mm/spectral.hpp"

namespace su2mm {

/// Full dense Hermitian eigendecomposition of a PauliSum (n_qubits <= cap).
/// The Hamiltonians built here are real symmetric; a complex Hermitian input
/// falls back to the complex solver.
struct EigenSystem {
  Eigen::VectorXd energies;
  Eigen::MatrixXcd vectors;  // column n = eigenvector n
};

EigenSystem exact_diag(const PauliSum& h, int qubit_cap = 14);

/// Loschmidt echo samples M(t) on a uniform time grid.
struct EchoSeries {
  Eigen::VectorXd times;
  Eigen::VectorXd values;
  Eigen::VectorXd errors;  // optional, empty when exact
  std::string source;      // provenance tag
};

/// M(t) = |sum_n w_n exp(-i E_n t)|^2 for spectral weights w_n = |c_n|^2.
EchoSeries echo_from_spectrum(const Eigen::VectorXd& energies,
                              const Eigen::VectorXd& weights,
                              const Eigen::VectorXd& times,
                              const std::string& source);

/// Echo of the truncated model from exact diagonalization, vacuum reference.
/// The free-evolution factor is a global phase on the vacuum and is dropped.
EchoSeries echo_exact_truncated(const PauliSum& h, const Eigen::VectorXd& times);

/// Echo of the untruncated radial problem from the spectral solver.
EchoSeries echo_exact_radial(const SpectrumResult& spec, const Eigen::VectorXd& times);

Eigen::VectorXd uniform_times(double T, double dt);

/// Discrete Fourier transform magnitudes of an echo series.
struct EchoSpectrum {
  Eigen::VectorXd omega;      // bin frequencies 2 pi k / (N dt)
  Eigen::VectorXd magnitude;  // |sum_j M_j exp(i omega t_j)|
  double domega = 0.0;        // frequency resolution 2 pi / T
};

EchoSpectrum echo_fft(const EchoSeries& series);

struct SpectralPeak {
  double omega;
  double magnitude;
};

/// Local maxima below the Nyquist frequency, excluding the DC bin, at least
/// rel_thresh of the tallest nonzero-frequency local maximum. Sorted by
/// descending magnitude, ties broken toward lower frequency.
std::vector<SpectralPeak> find_peaks(const EchoSpectrum& spectrum,
                                     double rel_thresh = 0.05);

}  // namespace su2mm
