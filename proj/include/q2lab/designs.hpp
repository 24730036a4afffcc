#pragma once

#include <optional>
#include <string>
#include <vector>

#include "q2lab/geometry.hpp"

namespace q2lab {

/// Balanced-incomplete-block parameters (varieties, blocks, replication,
/// block size, pair balance).  Valid sets satisfy v*r = b*k and
/// lambda*(v-1) = r*(k-1).
struct DesignParams {
  long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
  bool identities_hold() const {
    return v * r == b * k && lambda * (v - 1) == r * (k - 1);
  }
};

/// Triple-system parameters for 2q in {1, 2, ...} qubits-steps:
/// v = 2^{2q}-1, b = v(2^{2q-1}-1)/3, r = 2^{2q-1}-1, k = 3, lambda = 1.
/// The argument is 2q so half-integer steps stay integral.
DesignParams qubit_design_params(int two_q);

/// General PG(n, m) design with k = m+1, lambda = 1 (pairs for m = 1).
DesignParams general_params(int n, int m);

/// Historical tabulated (v, b, r) rows for 2q = 1..7.  The 2q = 6 row's block
/// count disagrees with the formula (641 printed vs 651 computed); kept so the
/// discrepancy is reported rather than silently matched.
struct TabulatedDesignRow {
  int two_q;
  long long v, b, r;
};
const std::vector<TabulatedDesignRow>& tabulated_design_rows();

/// Steiner triple system 2-(v,3,1) whose blocks are the PG(n,2) lines,
/// n in {2, 3}.
std::vector<Line> steiner_from_pg(int n);

/// A resolution: parallel classes of pairwise disjoint blocks covering all
/// points, every block used exactly once.
struct Resolution {
  std::vector<std::array<Line, 5>> classes;
};

/// Resolves the 35 blocks of the PG(3,2) Steiner system into 7 spreads
/// (first solution in lexicographic spread order).  Throws std::logic_error
/// if the backtracking fails, which would indicate a bug.
Resolution kirkman_resolve();

/// Independent certificate checker: partition of all 35 blocks, per-class
/// exact cover of the 15 points, global pair coverage exactly 1.
/// Returns an error description, or nullopt when the schedule is valid.
std::optional<std::string> check_resolution_certificate(const Resolution& r);

}  // namespace q2lab
