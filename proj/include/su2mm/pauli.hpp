#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace su2mm {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A tensor product of single-qubit Pauli letters, packed two bits per qubit
/// (qubit q occupies bits [2q, 2q+2)). The coefficient lives in PauliSum.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits) : n_(check_n(n_qubits)) {}
  PauliString(int n_qubits, std::uint64_t packed) : bits_(packed), n_(check_n(n_qubits)) {}

  /// Parse e.g. "IZXY"; position 0 is qubit 0.
  static PauliString from_letters(std::string_view letters);
  static PauliString single(int n_qubits, int qubit, Pauli p);

  int n_qubits() const { return n_; }
  std::uint64_t key() const { return bits_; }

  Pauli letter(int q) const { return static_cast<Pauli>((bits_ >> (2 * q)) & 3u); }
  void set_letter(int q, Pauli p) {
    bits_ = (bits_ & ~(std::uint64_t{3} << (2 * q))) |
            (static_cast<std::uint64_t>(p) << (2 * q));
  }

  int weight() const;
  std::string str() const;

  /// Bitmask of qubits whose letter flips a computational-basis bit (X or Y).
  std::uint64_t flip_mask() const;
  /// Bitmask of qubits contributing a (-1)^{bit} phase (Y or Z).
  std::uint64_t phase_mask() const;
  int y_count() const;

  bool operator==(const PauliString& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  static int check_n(int n) {
    if (n < 0 || n > 32) throw std::invalid_argument("PauliString: bad qubit count");
    return n;
  }
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// True iff the strings commute: an even number of positions hold distinct
/// non-identity letters.
bool commutes(const PauliString& p, const PauliString& q);

/// Sparse weighted sum of Pauli strings on a fixed register.
///
/// Terms are stored in a hash map keyed by the packed letter code; iteration
/// order for serialization and reproducibility is lexicographic on the letter
/// string. Coefficients with |c| < prune_tolerance are dropped after each
/// normalization pass.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits, double prune_tolerance = 1e-12);

  static PauliSum identity(int n_qubits, Complex coeff = 1.0);
  static PauliSum single(int n_qubits, int qubit, Pauli p, Complex coeff = 1.0);

  int n_qubits() const { return n_; }
  double prune_tolerance() const { return tol_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coefficient(const PauliString& p) const;
  void add_term(const PauliString& p, Complex c);

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(Complex s);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }

  /// Operator product with per-qubit Pauli multiplication phases.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;

  double max_imag_coeff() const;
  bool is_hermitian(double tol = 1e-12) const { return max_imag_coeff() < tol; }
  int max_weight() const;
  /// Coefficient of the all-identity string (the trace part).
  Complex identity_coeff() const;

  /// Terms sorted lexicographically by letter string.
  std::vector<std::pair<PauliString, Complex>> sorted_terms() const;

  /// Dense matrix on 2^n amplitudes; basis index bit q == qubit q.
  Eigen::MatrixXcd to_dense(int qubit_cap = 14) const;

  /// <psi|A|psi>, term by term, without densifying A.
  Complex expectation(const Eigen::VectorXcd& psi) const;

  /// A|psi>.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;

  /// One term per line: "coeff_re coeff_im LETTERS", lexicographically sorted.
  std::string serialize() const;
  static PauliSum deserialize(const std::string& text);

  void prune();

 private:
  int n_;
  double tol_;
  std::unordered_map<std::uint64_t, Complex> terms_;
};

}  // namespace su2mm
