#include "q2lab/pauli.hpp"

#include <array>
#include <stdexcept>

namespace q2lab {

namespace {

// Exponent of i contributed by the ordered single-letter product a*b,
// with letters as (x, z) pairs.  Cyclic products (XY, YZ, ZX) give +i,
// anticyclic give -i, everything else is phase-free.
int letter_phase_exponent(int ax, int az, int bx, int bz) {
  if ((ax == 0 && az == 0) || (bx == 0 && bz == 0)) return 0;
  if (ax == bx && az == bz) return 0;
  // code letters as X=1, Y=2, Z=3 for the cyclic test
  auto code = [](int x, int z) { return x ? (z ? 2 : 1) : 3; };
  int a = code(ax, az), b = code(bx, bz);
  // cyclic successor: X->Y->Z->X
  return (b - a + 3) % 3 == 1 ? 1 : 3;
}

const Eigen::Matrix2cd& letter_matrix(char l) {
  static const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd X = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd Y =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Eigen::Matrix2cd Z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (l) {
    case 'I': return I;
    case 'X': return X;
    case 'Y': return Y;
    default: return Z;
  }
}

}  // namespace

PauliString::PauliString(int n_qubits) {
  if (n_qubits <= 0) throw std::domain_error("PauliString needs at least one qubit");
  x_.assign(n_qubits, 0);
  z_.assign(n_qubits, 0);
}

PauliString PauliString::parse(const std::string& letters) {
  if (letters.empty()) throw ParseError("empty Pauli label");
  PauliString p(static_cast<int>(letters.size()));
  for (size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case 'I': break;
      case 'X': p.x_[i] = 1; break;
      case 'Y': p.x_[i] = 1; p.z_[i] = 1; break;
      case 'Z': p.z_[i] = 1; break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, letters[i]) +
                         "' at position " + std::to_string(i));
    }
  }
  return p;
}

PauliString PauliString::from_bits(std::vector<uint8_t> x_bits,
                                   std::vector<uint8_t> z_bits, int phase_exponent) {
  if (x_bits.size() != z_bits.size() || x_bits.empty())
    throw std::invalid_argument("x/z bit vectors must be non-empty and equal length");
  PauliString p;
  p.x_ = std::move(x_bits);
  p.z_ = std::move(z_bits);
  for (auto& b : p.x_) b = b ? 1 : 0;
  for (auto& b : p.z_) b = b ? 1 : 0;
  p.phase_ = ((phase_exponent % 4) + 4) % 4;
  return p;
}

Complex PauliString::phase() const {
  static const std::array<Complex, 4> ph = {Complex(1, 0), Complex(0, 1),
                                            Complex(-1, 0), Complex(0, -1)};
  return ph[phase_];
}

char PauliString::letter(int pos) const {
  if (x_[pos])
    return z_[pos] ? 'Y' : 'X';
  return z_[pos] ? 'Z' : 'I';
}

std::string PauliString::letters() const {
  std::string s(x_.size(), 'I');
  for (size_t i = 0; i < x_.size(); ++i) s[i] = letter(static_cast<int>(i));
  return s;
}

std::string PauliString::str() const {
  static const std::array<const char*, 4> pre = {"+", "+i", "-", "-i"};
  return pre[phase_] + letters();
}

bool PauliString::is_identity_letters() const {
  for (size_t i = 0; i < x_.size(); ++i)
    if (x_[i] || z_[i]) return false;
  return true;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (n_qubits() != rhs.n_qubits())
    throw std::invalid_argument("Pauli product needs equal qubit counts (" +
                                std::to_string(n_qubits()) + " vs " +
                                std::to_string(rhs.n_qubits()) + ")");
  PauliString out;
  out.x_.resize(x_.size());
  out.z_.resize(z_.size());
  int e = phase_ + rhs.phase_;
  for (size_t i = 0; i < x_.size(); ++i) {
    e += letter_phase_exponent(x_[i], z_[i], rhs.x_[i], rhs.z_[i]);
    out.x_[i] = x_[i] ^ rhs.x_[i];
    out.z_[i] = z_[i] ^ rhs.z_[i];
  }
  out.phase_ = e % 4;
  return out;
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  if (n_qubits() != rhs.n_qubits())
    throw std::invalid_argument("commutation test needs equal qubit counts");
  int s = 0;
  for (size_t i = 0; i < x_.size(); ++i)
    s += x_[i] * rhs.z_[i] + z_[i] * rhs.x_[i];
  return s % 2 == 0;
}

PauliString PauliString::dual() const {
  PauliString out = *this;
  for (auto& b : out.z_) b ^= 1;
  return out;
}

std::string PauliString::square_binary() const {
  // per letter: I:00, Z:01, Y:10, X:11  (b1 = x, b2 = x xor z)
  std::string s;
  s.reserve(2 * x_.size());
  for (size_t i = 0; i < x_.size(); ++i) {
    s += x_[i] ? '1' : '0';
    s += (x_[i] ^ z_[i]) ? '1' : '0';
  }
  return s;
}

PauliString PauliString::from_square_binary(const std::string& bits) {
  if (bits.empty() || bits.size() % 2 != 0)
    throw ParseError("square binary needs an even, non-zero number of bits");
  PauliString p(static_cast<int>(bits.size() / 2));
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != '0' && bits[i] != '1')
      throw ParseError("invalid binary digit at position " + std::to_string(i));
  for (size_t q = 0; q < bits.size() / 2; ++q) {
    int b1 = bits[2 * q] - '0';
    int b2 = bits[2 * q + 1] - '0';
    p.x_[q] = static_cast<uint8_t>(b1);
    p.z_[q] = static_cast<uint8_t>(b1 ^ b2);
  }
  return p;
}

Eigen::MatrixXcd PauliString::to_matrix(int max_qubits) const {
  if (n_qubits() > max_qubits)
    throw std::length_error("dense realization capped at " +
                            std::to_string(max_qubits) + " qubits");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  // qubit 1 (rightmost letter) is the major Kronecker factor: wrap the
  // accumulator with one letter at a time, leftmost letter innermost
  for (int pos = 0; pos < n_qubits(); ++pos) {
    const Eigen::Matrix2cd& l = letter_matrix(letter(pos));
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = l(r, c) * m;
    m = std::move(next);
  }
  return phase() * m;
}

PauliString PauliString::with_phase_exponent(int e) const {
  PauliString out = *this;
  out.phase_ = ((e % 4) + 4) % 4;
  return out;
}

std::vector<PauliString> xstate_generating_set(int q) {
  if (q < 1) throw std::domain_error("X-state generating set needs q >= 1");
  std::vector<PauliString> out;
  const int width = q + 1;
  for (int label = 1; label < (1 << width); ++label) {
    bool a_type = (label >> q) & 1;  // leading bit
    std::string letters(q, 'I');
    for (int pos = 0; pos < q; ++pos) {
      int bit = (label >> (q - 1 - pos)) & 1;
      letters[pos] = a_type ? (bit ? 'X' : 'Y') : (bit ? 'Z' : 'I');
    }
    if (!a_type && label == 0) continue;
    out.push_back(PauliString::parse(letters));
  }
  return out;
}

Eigen::Matrix4cd GeneratorInfo::matrix() const {
  return weight * string.to_matrix();
}

GeneratorBasis::GeneratorBasis() {
  struct Row {
    int index;
    const char* letters;       // unsigned string
    const char* letter_label;  // verbatim dictionary label
    const char* round_binary;
    const char* dirac_label;
    char dirac_class;
    const char* bivector;
    const char* quaternion;
  };
  // Dictionary rows; letter-label signs and the quaternion column are
  // metadata tied to Dirac conventions and the ZZ-center choice, not algebra.
  static const Row rows[] = {
      {2, "IZ", "IZ", "0010", "gamma_4", 'V', "G30", "i"},
      {3, "ZI", "ZI", "0101", "Sigma_3", 'T', "G03", "-i"},
      {4, "ZZ", "ZZ", "0111", "A_3", 'A', "G33", "±1"},
      {5, "IX", "IX", "1000", "gamma_5", 'P', "G10", "K"},
      {6, "IY", "IY", "1010", "alpha_5", 'A', "G20", "Ki"},
      {7, "ZX", "ZX", "1101", "alpha_3", 'T', "G13", "-Ki"},
      {8, "ZY", "ZY", "1111", "gamma_3", 'V', "G23", "-K"},
      {9, "XI", "XI", "1011", "Sigma_1", 'T', "G01", "-Kk"},
      {10, "YI", "YI", "1110", "Sigma_2", 'T', "G02", "-Kj"},
      {11, "XZ", "XZ", "1001", "A_1", 'A', "G31", "Kj"},
      {12, "YZ", "YZ", "1100", "A_2", 'A', "G32", "Kk"},
      {13, "XX", "XX", "0011", "alpha_1", 'T', "G11", "-k"},
      {14, "YY", "-YY", "0100", "gamma_2", 'V', "G22", "k"},
      {15, "YX", "YX", "0110", "alpha_2", 'T', "G12", "-j"},
      {16, "XY", "XY", "0001", "gamma_1", 'V', "G21", "j"},
  };
  for (const Row& r : rows) {
    GeneratorInfo g;
    g.index = r.index;
    g.string = PauliString::parse(r.letters);
    g.weight = g.string.letters().find('I') != std::string::npos ? 0.5 : 0.25;
    g.letter_label = r.letter_label;
    g.square_binary = g.string.square_binary();
    g.round_binary = r.round_binary;
    g.dirac_label = r.dirac_label;
    g.dirac_class = r.dirac_class;
    g.bivector_label = r.bivector;
    g.quaternion_label = r.quaternion;
    entries_.push_back(std::move(g));
  }
}

const GeneratorInfo& GeneratorBasis::by_index(int o_index) const {
  if (o_index < kFirstIndex || o_index > kLastIndex)
    throw std::out_of_range("generator index must lie in 2..16");
  return entries_[o_index - kFirstIndex];
}

int GeneratorBasis::index_of_letters(const std::string& letters) const {
  for (const auto& g : entries_)
    if (g.string.letters() == letters) return g.index;
  throw std::out_of_range("no generator with letters " + letters);
}

std::optional<std::pair<Complex, int>> GeneratorBasis::commutator(int a, int b) const {
  const GeneratorInfo& ga = by_index(a);
  const GeneratorInfo& gb = by_index(b);
  if (ga.string.commutes_with(gb.string)) return std::nullopt;
  PauliString prod = ga.string * gb.string;
  int c = index_of_letters(prod.letters());
  const GeneratorInfo& gc = by_index(c);
  Complex coeff = 2.0 * ga.weight * gb.weight / gc.weight * prod.phase();
  return std::make_pair(coeff, c);
}

const GeneratorBasis& generator_basis() {
  static const GeneratorBasis basis;
  return basis;
}

}  // namespace q2lab
