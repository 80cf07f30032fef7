#include "su2mm/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>

namespace su2mm {

char pauli_char(Pauli p) {
  static constexpr char tbl[4] = {'I', 'X', 'Y', 'Z'};
  return tbl[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("bad Pauli letter: ") + c);
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString s(static_cast<int>(letters.size()));
  for (int q = 0; q < s.n_; ++q) s.set_letter(q, pauli_from_char(letters[q]));
  return s;
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  PauliString s(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) throw std::out_of_range("PauliString::single: qubit");
  s.set_letter(qubit, p);
  return s;
}

int PauliString::weight() const {
  int w = 0;
  for (int q = 0; q < n_; ++q)
    if (letter(q) != Pauli::I) ++w;
  return w;
}

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (int q = 0; q < n_; ++q) s[q] = pauli_char(letter(q));
  return s;
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t m = 0;
  for (int q = 0; q < n_; ++q) {
    Pauli p = letter(q);
    if (p == Pauli::X || p == Pauli::Y) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::uint64_t PauliString::phase_mask() const {
  std::uint64_t m = 0;
  for (int q = 0; q < n_; ++q) {
    Pauli p = letter(q);
    if (p == Pauli::Y || p == Pauli::Z) m |= std::uint64_t{1} << q;
  }
  return m;
}

int PauliString::y_count() const {
  int c = 0;
  for (int q = 0; q < n_; ++q)
    if (letter(q) == Pauli::Y) ++c;
  return c;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument("commutes: qubit-count mismatch");
  int anti = 0;
  for (int k = 0; k < p.n_qubits(); ++k) {
    Pauli a = p.letter(k), b = q.letter(k);
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

namespace {

// single-qubit products: out letter and phase exponent of i for a*b
struct Prod {
  std::uint8_t letter;
  std::uint8_t ipow;
};

constexpr Prod kProd[4][4] = {
    // b:  I        X        Y        Z
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},  // a = I
    {{1, 0}, {0, 0}, {3, 1}, {2, 3}},  // a = X   (XY = iZ, XZ = -iY)
    {{2, 0}, {3, 3}, {0, 0}, {1, 1}},  // a = Y   (YX = -iZ, YZ = iX)
    {{3, 0}, {2, 1}, {1, 3}, {0, 0}},  // a = Z   (ZX = iY, ZY = -iX)
};

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliSum::PauliSum(int n_qubits, double prune_tolerance)
    : n_(n_qubits), tol_(prune_tolerance) {
  if (n_qubits < 0 || n_qubits > 32) throw std::invalid_argument("PauliSum: bad qubit count");
  if (prune_tolerance < 0) throw std::invalid_argument("PauliSum: negative tolerance");
}

PauliSum PauliSum::identity(int n_qubits, Complex coeff) {
  PauliSum s(n_qubits);
  s.add_term(PauliString(n_qubits), coeff);
  return s;
}

PauliSum PauliSum::single(int n_qubits, int qubit, Pauli p, Complex coeff) {
  PauliSum s(n_qubits);
  s.add_term(PauliString::single(n_qubits, qubit, p), coeff);
  return s;
}

Complex PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p.key());
  return it == terms_.end() ? Complex{0, 0} : it->second;
}

void PauliSum::add_term(const PauliString& p, Complex c) {
  if (p.n_qubits() != n_) throw std::invalid_argument("PauliSum::add_term: qubit-count mismatch");
  auto [it, inserted] = terms_.try_emplace(p.key(), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < tol_) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.n_ != n_) throw std::invalid_argument("PauliSum::+=: qubit-count mismatch");
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < tol_) terms_.erase(it);
  }
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  if (o.n_ != n_) throw std::invalid_argument("PauliSum::-=: qubit-count mismatch");
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -c);
    if (!inserted) it->second -= c;
    if (std::abs(it->second) < tol_) terms_.erase(it);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(Complex s) {
  for (auto& [k, c] : terms_) c *= s;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PauliSum::*: qubit-count mismatch");
  PauliSum out(a.n_, std::max(a.tol_, b.tol_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      std::uint64_t kout = 0;
      int ipow = 0;
      for (int q = 0; q < a.n_; ++q) {
        const auto pa = (ka >> (2 * q)) & 3u;
        const auto pb = (kb >> (2 * q)) & 3u;
        const Prod pr = kProd[pa][pb];
        kout |= std::uint64_t{pr.letter} << (2 * q);
        ipow += pr.ipow;
      }
      const Complex c = ca * cb * kIPow[ipow & 3];
      auto [it, inserted] = out.terms_.try_emplace(kout, c);
      if (!inserted) it->second += c;
    }
  }
  out.prune();
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_, tol_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, std::conj(c));
  return out;
}

double PauliSum::max_imag_coeff() const {
  double m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, PauliString(n_, k).weight());
  return w;
}

Complex PauliSum::identity_coeff() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Complex{0, 0} : it->second;
}

std::vector<std::pair<PauliString, Complex>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliString, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(PauliString(n_, k), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.str() < b.first.str(); });
  return out;
}

Eigen::MatrixXcd PauliSum::to_dense(int qubit_cap) const {
  if (n_ > qubit_cap)
    throw std::length_error("PauliSum::to_dense: qubit count exceeds cap");
  const std::int64_t dim = std::int64_t{1} << n_;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [k, c] : terms_) {
    const PauliString p(n_, k);
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t pm = p.phase_mask();
    const Complex base = c * kIPow[p.y_count() & 3];
    for (std::int64_t j = 0; j < dim; ++j) {
      const double sign = std::popcount(static_cast<std::uint64_t>(j) & pm) % 2 ? -1.0 : 1.0;
      M(static_cast<std::int64_t>(j ^ static_cast<std::int64_t>(flip)), j) += base * sign;
    }
  }
  return M;
}

Complex PauliSum::expectation(const Eigen::VectorXcd& psi) const {
  const std::int64_t dim = std::int64_t{1} << n_;
  if (psi.size() != dim)
    throw std::invalid_argument("PauliSum::expectation: dimension mismatch");
  Complex acc{0, 0};
  for (const auto& [k, c] : terms_) {
    const PauliString p(n_, k);
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t pm = p.phase_mask();
    const Complex base = c * kIPow[p.y_count() & 3];
    Complex term{0, 0};
    for (std::int64_t j = 0; j < dim; ++j) {
      const double sign = std::popcount(static_cast<std::uint64_t>(j) & pm) % 2 ? -1.0 : 1.0;
      term += std::conj(psi(j ^ static_cast<std::int64_t>(flip))) * sign * psi(j);
    }
    acc += base * term;
  }
  return acc;
}

Eigen::VectorXcd PauliSum::apply(const Eigen::VectorXcd& psi) const {
  const std::int64_t dim = std::int64_t{1} << n_;
  if (psi.size() != dim)
    throw std::invalid_argument("PauliSum::apply: dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (const auto& [k, c] : terms_) {
    const PauliString p(n_, k);
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t pm = p.phase_mask();
    const Complex base = c * kIPow[p.y_count() & 3];
    for (std::int64_t j = 0; j < dim; ++j) {
      const double sign = std::popcount(static_cast<std::uint64_t>(j) & pm) % 2 ? -1.0 : 1.0;
      out(j ^ static_cast<std::int64_t>(flip)) += base * sign * psi(j);
    }
  }
  return out;
}

std::string PauliSum::serialize() const {
  std::string out;
  char buf[128];
  for (const auto& [p, c] : sorted_terms()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %s\n", c.real(), c.imag(), p.str().c_str());
    out += buf;
  }
  return out;
}

PauliSum PauliSum::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  PauliSum out(0);
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double re, im;
    std::string letters;
    if (!(ls >> re >> im >> letters))
      throw std::runtime_error("PauliSum::deserialize: bad line: " + line);
    if (first) {
      out = PauliSum(static_cast<int>(letters.size()));
      first = false;
    }
    out.add_term(PauliString::from_letters(letters), Complex{re, im});
  }
  return out;
}

void PauliSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

}  // namespace su2mm
