#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace q2lab {

/// Sign times a base unit of the active table.
struct SignedUnit {
  int sign = +1;  // +1 or -1
  int unit = 0;   // index into CayleyTable::units
  auto operator<=>(const SignedUnit&) const = default;
};

/// Finite multiplication table over signed hypercomplex units.
class CayleyTable {
 public:
  std::string name;
  std::vector<std::string> units;      // base unit names such as {"1","i","j","k"}
  std::vector<SignedUnit> elements;    // ordered element list of the table

  int size() const { return static_cast<int>(elements.size()); }
  const SignedUnit& product(int r, int c) const { return products_[r * size() + c]; }

  std::string unit_name(const SignedUnit& u) const;
  /// Index of a signed unit in the element list, or -1.
  int element_index(const SignedUnit& u) const;
  std::string element_name(int idx) const { return unit_name(elements[idx]); }

  /// Builds the product matrix from a unit-level multiplication rule.
  using UnitRule = SignedUnit (*)(int, int);
  static CayleyTable build(std::string name, std::vector<std::string> units,
                           std::vector<std::string> element_names, UnitRule rule);

  SignedUnit parse_element(const std::string& name) const;

 private:
  std::vector<SignedUnit> products_;
};

/// Quaternion group Q_8: ±(1, i, j, k), 8x8.
CayleyTable q8_table();
/// Co-quaternion (dihedral D_4) group: ±(1, k, Ki, Kj), 8x8.
CayleyTable coquaternion_table();
/// Complex quaternions ±(1, i, j, k, K, Ki, Kj, Kk), 16x16.
CayleyTable complex_quaternion_table();
/// The C_2 x C_4 subgroup ±(1, k, K, Kk) (upper diagonal block of the
/// complex-quaternion table).
CayleyTable c2c4_table();
/// Octonion units ±(1, i, j, k, p, q, r, s) multiplied via the seven oriented
/// triples (irj), (jpk), (kqi), (psi), (qsj), (rsk), (pqr); 16x16 and not
/// associative.
CayleyTable octonion_table();

/// Group-axiom audit.  For non-associative tables the witness names a triple
/// with (ab)c != a(bc).
struct GroupReport {
  bool closed = false;
  bool has_identity = false;
  bool has_inverses = false;
  bool associative = false;
  std::array<std::string, 3> associativity_witness{};
  bool passes() const { return closed && has_identity && has_inverses && associative; }
};

GroupReport verify_group(const CayleyTable& t);

/// Number of elements whose square is -1 (the count of -1 on the diagonal).
int negative_square_count(const CayleyTable& t);

/// Exact-factorization audit for the order-16 table: {1, e} is an order-2
/// subgroup and every element splits uniquely as (1 or e) * q with q in the
/// order-8 subtable.  Returns an error description or nullopt.
std::optional<std::string> factorization_check(const CayleyTable& g16,
                                               const std::string& order2_element,
                                               const CayleyTable& g8);

/// Maps Q_8 onto 2x2 matrices via (i, j, k) -> -i(sigma_x, sigma_y, sigma_z)
/// and checks all 64 products against the table.
struct PauliHomReport {
  bool products_match = false;           // all 64
  bool squares_map_to_minus_identity = false;  // images of i, j, k
};
PauliHomReport pauli_homomorphism_check();

/// Integer octonion in the basis (1, i, j, k, p, q, r, s); exact arithmetic.
using OctonionInt = std::array<long long, 8>;
OctonionInt octonion_multiply(const OctonionInt& a, const OctonionInt& b);
long long octonion_norm2(const OctonionInt& a);

}  // namespace q2lab
