#include "su2mm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace su2mm {

EigenSystem exact_diag(const PauliSum& h, int qubit_cap) {
  const Eigen::MatrixXcd H = h.to_dense(qubit_cap);
  EigenSystem sys;
  if (H.imag().cwiseAbs().maxCoeff() < 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.real());
    if (es.info() != Eigen::Success) throw std::runtime_error("exact_diag failed");
    sys.energies = es.eigenvalues();
    sys.vectors = es.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("exact_diag failed");
    sys.energies = es.eigenvalues();
    sys.vectors = es.eigenvectors();
  }
  return sys;
}

EchoSeries echo_from_spectrum(const Eigen::VectorXd& energies,
                              const Eigen::VectorXd& weights,
                              const Eigen::VectorXd& times,
                              const std::string& source) {
  EchoSeries s;
  s.times = times;
  s.values.resize(times.size());
  s.source = source;
  for (Eigen::Index i = 0; i < times.size(); ++i) {
    Complex amp{0, 0};
    for (Eigen::Index n = 0; n < energies.size(); ++n)
      amp += weights(n) * std::exp(Complex{0, -energies(n) * times(i)});
    s.values(i) = std::norm(amp);
  }
  return s;
}

EchoSeries echo_exact_truncated(const PauliSum& h, const Eigen::VectorXd& times) {
  // Only the vacuum row of the eigenvector matrix is needed: w_n = |<vac|E_n>|^2.
  const Eigen::MatrixXcd H = h.to_dense();
  Eigen::VectorXd energies;
  Eigen::VectorXd w;
  if (H.imag().cwiseAbs().maxCoeff() < 1e-12) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.real());
    energies = es.eigenvalues();
    w = es.eigenvectors().row(0).transpose().cwiseAbs2();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    energies = es.eigenvalues();
    w = es.eigenvectors().row(0).transpose().cwiseAbs2();
  }
  return echo_from_spectrum(energies, w, times, "exact_truncated");
}

EchoSeries echo_exact_radial(const SpectrumResult& spec, const Eigen::VectorXd& times) {
  return echo_from_spectrum(spec.energies, spec.overlaps, times, "exact_radial");
}

Eigen::VectorXd uniform_times(double T, double dt) {
  const int n = static_cast<int>(std::round(T / dt)) + 1;
  Eigen::VectorXd t(n);
  for (int i = 0; i < n; ++i) t(i) = i * dt;
  return t;
}

EchoSpectrum echo_fft(const EchoSeries& series) {
  const Eigen::Index N = series.values.size();
  if (N < 4) throw std::invalid_argument("echo_fft: need at least 4 samples");
  const double dt = series.times(1) - series.times(0);
  for (Eigen::Index i = 1; i < N; ++i)
    if (std::abs(series.times(i) - series.times(i - 1) - dt) > 1e-9 * dt)
      throw std::invalid_argument("echo_fft: non-uniform time grid");
  EchoSpectrum sp;
  sp.omega.resize(N);
  sp.magnitude.resize(N);
  sp.domega = 2.0 * std::numbers::pi / (series.times(N - 1) - series.times(0));
  for (Eigen::Index k = 0; k < N; ++k) {
    sp.omega(k) = 2.0 * std::numbers::pi * k / (N * dt);
    Complex acc{0, 0};
    for (Eigen::Index j = 0; j < N; ++j)
      acc += series.values(j) *
             std::exp(Complex{0, 2.0 * std::numbers::pi * k * j / static_cast<double>(N)});
    sp.magnitude(k) = std::abs(acc);
  }
  return sp;
}

std::vector<SpectralPeak> find_peaks(const EchoSpectrum& spectrum, double rel_thresh) {
  const Eigen::Index half = spectrum.omega.size() / 2;
  std::vector<SpectralPeak> raw;
  for (Eigen::Index i = 1; i < half; ++i) {
    if (spectrum.magnitude(i) > spectrum.magnitude(i - 1) &&
        spectrum.magnitude(i) > spectrum.magnitude(i + 1))
      raw.push_back({spectrum.omega(i), spectrum.magnitude(i)});
  }
  if (raw.empty()) return raw;
  double gmax = 0;
  for (const auto& p : raw) gmax = std::max(gmax, p.magnitude);
  std::vector<SpectralPeak> out;
  for (const auto& p : raw)
    if (p.magnitude >= rel_thresh * gmax) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const SpectralPeak& a, const SpectralPeak& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    return a.omega < b.omega;
  });
  return out;
}

}  // namespace su2mm
