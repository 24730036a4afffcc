#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "q2lab/pauli.hpp"

namespace q2lab {

/// One cell of the normalized commutator table: zero or
/// coeff_magnitude * (phase_sign * i) * O_target.
struct CommutatorCell {
  bool zero = true;
  double magnitude = 0.0;  // 1 or 1/4
  int phase_sign = 0;      // +1 or -1 (coefficient is phase_sign * i * magnitude)
  int target = 0;          // generator index 2..16

  /// Rendering like "i*O6", "-i/4*O2" or "0".
  std::string str() const;
};

/// 15x15 table of [O_a, O_b] over the ordered basis O_2..O_16.
class CommutatorTable {
 public:
  static CommutatorTable build();

  const CommutatorCell& cell(int a, int b) const;  // generator indices 2..16
  int zeros_in_row(int a) const;                   // counts the diagonal too

 private:
  std::array<std::array<CommutatorCell, GeneratorBasis::kCount>,
             GeneratorBasis::kCount>
      cells_{};
};

enum class SubalgebraKind { fano7, su3_8, so5_10 };

/// A commutator-closed subset of the fifteen generators.
struct SubalgebraSet {
  std::vector<int> members;  // sorted generator indices
  SubalgebraKind kind = SubalgebraKind::fano7;
  int center = 0;            // fano7 only
  bool entangling = false;   // fano7 only: center acts on both spins
};

enum class CenterClass { entangling, non_entangling };

/// entangling iff both letters of the center are non-identity.
CenterClass classify_center(int center_index);

/// The fifteen Fano sets: each generator plus its six commuting companions.
std::vector<SubalgebraSet> find_fano_sets();

/// Exhaustive enumeration of commutator-closed k-subsets, k in {7, 8, 10},
/// in lexicographic member order.  Throws std::domain_error otherwise.
std::vector<SubalgebraSet> find_closed_sets(int k);

/// A formal real linear combination of weighted basis strings; the terms use
/// unit-square letter strings (not the 1/2- or 1/4-weighted generators).
struct PauliCombination {
  std::vector<std::pair<double, PauliString>> terms;

  Eigen::Matrix4cd matrix() const;
  std::string str() const;  // e.g. "1/2 (XX - YY)"
};

/// The two mutually commuting pseudo-spin triplets of a Fano set:
/// t±_j = (g_j ± c·g_j)/2 over the three companion pairs {g, c·g}.
/// Triplet entries are ordered so that [t_1, t_2] = 2i t_3 cyclically.
struct PseudoSpinSplit {
  std::array<PauliCombination, 3> plus;   // squares to (II + center)/2
  std::array<PauliCombination, 3> minus;  // squares to (II - center)/2
};

/// Throws std::domain_error unless s is a fano7 set.
PseudoSpinSplit pseudo_spin_split(const SubalgebraSet& s);

}  // namespace q2lab
