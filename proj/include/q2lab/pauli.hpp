#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace q2lab {

using Complex = std::complex<double>;

/// Thrown when a label or binary string cannot be parsed; the message names
/// the offending position.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Phase-tracked tensor product of single-qubit Pauli letters.
///
/// Letters are stored per string position as an (x, z) bit pair:
/// (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.  Position 0 is the leftmost letter,
/// which belongs to the highest qubit index ("XZ" acts with X on qubit 2 and
/// Z on qubit 1).  The dense realization places qubit 1 (the rightmost
/// letter) as the major Kronecker factor, so "IZ" -> diag(1, 1, -1, -1).
///
/// The phase is a power of i stored as an exponent mod 4, so the full group
/// {+1, +i, -1, -i} is tracked exactly through multiplication.
class PauliString {
 public:
  /// Identity string on n qubits.
  explicit PauliString(int n_qubits);

  /// Parses a letter label such as "XZ" or "IIY".  The result has phase +1.
  static PauliString parse(const std::string& letters);

  /// Builds a string from explicit bits; vectors are position-indexed
  /// (entry 0 = leftmost letter = highest qubit).
  static PauliString from_bits(std::vector<uint8_t> x_bits,
                               std::vector<uint8_t> z_bits,
                               int phase_exponent = 0);

  int n_qubits() const { return static_cast<int>(x_.size()); }

  /// Phase as an exponent of i, in {0,1,2,3}.
  int phase_exponent() const { return phase_; }
  Complex phase() const;

  /// Bits by string position (0 = leftmost letter).
  bool x_bit(int pos) const { return x_[pos] != 0; }
  bool z_bit(int pos) const { return z_[pos] != 0; }
  const std::vector<uint8_t>& x_bits() const { return x_; }
  const std::vector<uint8_t>& z_bits() const { return z_; }

  /// Letter at a string position, one of 'I', 'X', 'Y', 'Z'.
  char letter(int pos) const;

  /// Letter label without the phase, e.g. "XZ".
  std::string letters() const;

  /// Label with phase prefix, e.g. "+XZ", "-iYY".
  std::string str() const;

  bool is_identity_letters() const;

  /// Exact product; phases multiply and per-letter products contribute
  /// powers of i.  Throws std::invalid_argument on length mismatch.
  PauliString operator*(const PauliString& rhs) const;

  /// Symplectic commutation test: true iff sum_q (a.x*b.z + a.z*b.x) is even.
  bool commutes_with(const PauliString& rhs) const;

  /// I<->Z, X<->Y exchange on every letter (complements every z bit);
  /// an involution.  Phase is unchanged.
  PauliString dual() const;

  /// Per-qubit 2-bit code concatenated leftmost qubit first:
  /// I:00, Z:01, Y:10, X:11.  "XX" -> "1111".
  std::string square_binary() const;

  /// Inverse of square_binary(); throws ParseError on odd length or a
  /// character other than 0/1.
  static PauliString from_square_binary(const std::string& bits);

  /// Dense matrix of size 2^n including the phase factor.  Throws
  /// std::length_error when n_qubits exceeds the cap.
  Eigen::MatrixXcd to_matrix(int max_qubits = kDefaultMatrixCap) const;

  PauliString with_phase_exponent(int e) const;

  bool operator==(const PauliString& rhs) const = default;

  static constexpr int kDefaultMatrixCap = 10;

 private:
  PauliString() = default;
  int phase_ = 0;                // exponent of i, mod 4
  std::vector<uint8_t> x_, z_;   // position-indexed, 0 = leftmost letter
};

/// D/A-type generating strings of the q-qubit X-state algebra, read off the
/// (q+1)-bit labels 1..2^{q+1}-1: a leading 0 maps the remaining bits as
/// 0:I, 1:Z; a leading 1 maps them as 0:Y, 1:X.
/// q=2 yields {IZ, ZI, ZZ, YY, YX, XY, XX}.  Throws std::domain_error for q < 1.
std::vector<PauliString> xstate_generating_set(int q);

/// One row of the two-qubit generator dictionary.
struct GeneratorInfo {
  int index = 0;                 // 2..16
  PauliString string{2};         // unsigned letter string
  double weight = 0.0;           // 1/2 for single-letter, 1/4 for two-letter
  std::string letter_label;      // verbatim dictionary label (may carry a sign)
  std::string square_binary;     // e.g. "0100"
  std::string round_binary;      // e.g. "0101"
  std::string dirac_label;       // e.g. "Sigma_3"
  char dirac_class = '?';        // 'V', 'T', 'A' or 'P'
  std::string bivector_label;    // e.g. "G03"
  std::string quaternion_label;  // e.g. "-i"; fixed under the ZZ-center convention

  /// weight * string as a dense 4x4 matrix.
  Eigen::Matrix4cd matrix() const;
};

/// The ordered fifteen-entry dictionary O_2..O_16 for the two-qubit system.
class GeneratorBasis {
 public:
  GeneratorBasis();

  static constexpr int kFirstIndex = 2;
  static constexpr int kLastIndex = 16;
  static constexpr int kCount = 15;

  const GeneratorInfo& by_index(int o_index) const;
  const std::vector<GeneratorInfo>& entries() const { return entries_; }

  /// Index of the generator whose unsigned letter string matches, or throws.
  int index_of_letters(const std::string& letters) const;

  /// Normalized commutator [w_a A, w_b B] expressed as coeff * (w_c C).
  /// Returns nullopt when the strings commute; otherwise the coefficient is
  /// (2 w_a w_b / w_c) * (+-i).
  std::optional<std::pair<Complex, int>> commutator(int a, int b) const;

 private:
  std::vector<GeneratorInfo> entries_;  // ordered by index
};

/// Shared singleton; the dictionary is immutable.
const GeneratorBasis& generator_basis();

}  // namespace q2lab
