#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "q2lab/pauli.hpp"

namespace q2lab {

/// Nonzero point of PG(n, 2), stored as the bit pattern of its coordinate
/// vector (n+1 bits, bit 0 = last coordinate).
struct PGPoint {
  uint32_t bits = 0;
  auto operator<=>(const PGPoint&) const = default;
};

/// Unordered 3-point line {a, b, c} with a ^ b = c, kept sorted.
struct Line {
  std::array<uint32_t, 3> pts{};
  auto operator<=>(const Line&) const = default;
  bool contains(uint32_t p) const {
    return pts[0] == p || pts[1] == p || pts[2] == p;
  }
};

/// Point count of PG(n, m): (m^{n+1}-1)/(m-1), or n+1 for m = 1.
long long pg_point_count(int n, int m);

/// All 3-point lines of PG(n, 2) for 1 <= n <= 6 (7 lines for n=2, 35 for n=3).
std::vector<Line> pg_lines(int n);

/// PG(n,2) = PG(n-1,2) + EG(n,2): returns {point count of PG(n-1,2), 2^n}.
std::pair<long long, long long> eg_decomposition(int n);

/// Two-qubit generator attached to a PG(3,2) point via the square-bracket
/// binary (the 4 coordinate bits are the per-letter codes).
PauliString point_to_pauli(uint32_t point);
uint32_t pauli_to_point(const PauliString& p);

enum class LineClass { commuting, cyclic };

/// commuting iff the three attached generators mutually commute (pairwise
/// products equal the third up to ±1); cyclic iff they mutually anticommute
/// (products carry ±i).  Mixed lines cannot occur; malformed triples throw.
LineClass pauli_line_classify(const Line& line);

/// The self-dual 15-point/15-line incidence structure whose lines are the
/// mutually commuting triples of PG(3,2).
struct Doily {
  std::vector<Line> lines;                 // the 15 commuting lines
  std::vector<Line> cyclic_lines;          // the other 20
  int lines_through(uint32_t point) const;  // 3 for every point
};

Doily build_doily();

/// 5-point sets meeting every doily line exactly once (pairwise
/// anticommuting generators); there are 6.
std::vector<std::array<uint32_t, 5>> find_ovoids(const Doily& d);

/// 3x3 point array whose rows and columns are all doily lines.
struct Grid {
  std::array<std::array<uint32_t, 3>, 3> cells{};
  std::vector<uint32_t> points() const;  // sorted, 9 entries
};

/// The 10 grids of the doily (distinct 9-point sets, one row/column
/// decomposition each).
std::vector<Grid> find_grids(const Doily& d);

/// 5 pairwise disjoint PG(3,2) lines covering all 15 points; 56 in total.
std::vector<std::array<Line, 5>> find_spreads();

/// Signed unit of the complex-quaternion basis {1, i, j, k, K, Ki, Kj, Kk}.
struct QuaternionUnit {
  int sign = 1;    // ±1
  bool K = false;  // carries the independent imaginary factor
  int q = 0;       // 0:1, 1:i, 2:j, 3:k
  std::string str() const;
  auto operator<=>(const QuaternionUnit&) const = default;
};

/// Round-bracket labelling (txyz) <-> signed complex-quaternion unit:
/// (0100) <-> k, (0010) <-> i, (0001) <-> j, (1000) <-> K, with conjugates on
/// complemented bits, (0111) <-> -1 and (1111) <-> -K.  The all-zero label is
/// rejected.  Products of labels match bitwise sums up to sign.
class QuaternionLabelling {
 public:
  QuaternionLabelling();
  QuaternionUnit unit(uint32_t label) const;    // throws std::domain_error on 0
  uint32_t label(const QuaternionUnit& u) const;  // inverse on the 15 units

 private:
  std::array<QuaternionUnit, 16> units_{};
};

}  // namespace q2lab
