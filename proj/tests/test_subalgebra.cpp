#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "q2lab/subalgebra.hpp"

using namespace q2lab;

namespace {

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

// Dense-matrix commutator oracle, independent of the symplectic route:
// returns -1 for zero, otherwise the 0-based slot of the target generator.
std::array<std::array<int, 15>, 15> dense_target_oracle() {
  const GeneratorBasis& basis = generator_basis();
  std::array<Eigen::Matrix4cd, 15> mats;
  for (int i = 0; i < 15; ++i) mats[i] = basis.by_index(i + 2).matrix();
  std::array<std::array<int, 15>, 15> out{};
  for (int a = 0; a < 15; ++a)
    for (int b = 0; b < 15; ++b) {
      Eigen::Matrix4cd comm = mats[a] * mats[b] - mats[b] * mats[a];
      out[a][b] = -1;
      if (comm.norm() < 1e-14) continue;
      for (int c = 0; c < 15; ++c) {
        Complex coeff = (mats[c].adjoint() * comm).trace() /
                        (mats[c].adjoint() * mats[c]).trace();
        if ((comm - coeff * mats[c]).norm() < 1e-12) {
          out[a][b] = c;
          break;
        }
      }
      REQUIRE(out[a][b] >= 0);  // the algebra closes
    }
  return out;
}

}  // namespace

TEST_CASE("commutator table reproduces all 225 cells") {
  CommutatorTable t = CommutatorTable::build();
  for (int a = 2; a <= 16; ++a) {
    auto cells = split(fixtures::kCommutatorRows[a - 2]);
    REQUIRE(cells.size() == 15);
    for (int b = 2; b <= 16; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(t.cell(a, b).str() == cells[b - 2]);
    }
  }
}

TEST_CASE("table structure: zeroes, antisymmetry, closure") {
  CommutatorTable t = CommutatorTable::build();
  for (int a = 2; a <= 16; ++a) {
    CHECK(t.zeros_in_row(a) == 7);
    for (int b = 2; b <= 16; ++b) {
      const auto& ab = t.cell(a, b);
      const auto& ba = t.cell(b, a);
      CHECK(ab.zero == ba.zero);
      if (!ab.zero) {
        CHECK(ab.target == ba.target);
        CHECK(ab.magnitude == ba.magnitude);
        CHECK(ab.phase_sign == -ba.phase_sign);
        CHECK(ab.target >= 2);
        CHECK(ab.target <= 16);
        CHECK((ab.magnitude == 1.0 || ab.magnitude == 0.25));
      }
    }
  }
}

TEST_CASE("fano sets") {
  auto sets = find_fano_sets();
  REQUIRE(sets.size() == 15);
  const GeneratorBasis& basis = generator_basis();

  std::map<std::string, std::set<std::string>> companions;
  for (const auto& s : sets) {
    REQUIRE(s.members.size() == 7);
    std::set<std::string> names;
    for (int m : s.members)
      if (m != s.center) names.insert(basis.by_index(m).string.letters());
    companions[basis.by_index(s.center).string.letters()] = names;

    // closure and centrality
    for (int a : s.members)
      for (int b : s.members) {
        auto r = basis.commutator(a, b);
        if (r)
          CHECK(std::find(s.members.begin(), s.members.end(), r->second) !=
                s.members.end());
        if (a == s.center) CHECK_FALSE(r.has_value());
      }
    // Clifford closure: members multiply into the set up to phase
    for (int a : s.members)
      for (int b : s.members) {
        PauliString prod =
            basis.by_index(a).string * basis.by_index(b).string;
        if (prod.is_identity_letters()) continue;
        CHECK(std::find_if(s.members.begin(), s.members.end(), [&](int m) {
                return basis.by_index(m).string.letters() == prod.letters();
              }) != s.members.end());
      }
  }
  CHECK(companions["ZZ"] ==
        std::set<std::string>{"IZ", "ZI", "XX", "YY", "XY", "YX"});
  CHECK(companions["ZI"] ==
        std::set<std::string>{"IX", "IY", "IZ", "ZX", "ZY", "ZZ"});
}

TEST_CASE("center classification") {
  CHECK(classify_center(2) == CenterClass::non_entangling);   // IZ
  CHECK(classify_center(4) == CenterClass::entangling);       // ZZ
  int ent = 0, non = 0;
  for (int c = 2; c <= 16; ++c)
    (classify_center(c) == CenterClass::entangling ? ent : non)++;
  CHECK(ent == 9);
  CHECK(non == 6);
}

TEST_CASE("closed subset enumeration with dense oracle cross-check") {
  auto oracle = dense_target_oracle();

  // independent brute force over all C(15,k) subsets
  auto brute_count = [&](int k) {
    int count = 0;
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int depth, int start) -> void {
      if (depth == k) {
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            int t = oracle[idx[i]][idx[j]];
            if (t >= 0 &&
                std::find(idx.begin(), idx.end(), t) == idx.end())
              return;
          }
        ++count;
        return;
      }
      for (int c = start; c < 15; ++c) {
        idx[depth] = c;
        self(self, depth + 1, c + 1);
      }
    };
    rec(rec, 0, 0);
    return count;
  };

  auto sets7 = find_closed_sets(7);
  auto sets8 = find_closed_sets(8);
  auto sets10 = find_closed_sets(10);
  CHECK(static_cast<int>(sets7.size()) == brute_count(7));
  CHECK(static_cast<int>(sets8.size()) == brute_count(8));
  CHECK(static_cast<int>(sets10.size()) == brute_count(10));

  // frozen census: 15 Fano sets, no 8-sets, six 10-sets
  CHECK(sets7.size() == 15);
  CHECK(sets8.size() == 0);
  CHECK(sets10.size() == 6);

  // the size-7 enumeration is exactly the fano family
  auto fano = find_fano_sets();
  std::set<std::vector<int>> a, b;
  for (const auto& s : sets7) a.insert(s.members);
  for (const auto& s : fano) {
    auto m = s.members;
    std::sort(m.begin(), m.end());
    b.insert(m);
  }
  CHECK(a == b);

  // both explicit ten-generator examples are present
  std::set<std::vector<int>> tens;
  for (const auto& s : sets10) tens.insert(s.members);
  CHECK(tens.count({2, 3, 5, 6, 11, 12, 13, 14, 15, 16}) == 1);
  CHECK(tens.count({2, 3, 7, 8, 9, 10, 13, 14, 15, 16}) == 1);

  // no member of a 10-set commutes with all nine others
  for (const auto& s : sets10)
    for (int c : s.members) {
      bool central = true;
      for (int g : s.members)
        if (g != c && oracle[c - 2][g - 2] >= 0) central = false;
      CHECK_FALSE(central);
    }

  CHECK_THROWS_AS(find_closed_sets(9), std::domain_error);
}

TEST_CASE("pseudo-spin splits") {
  auto fano = find_fano_sets();
  const GeneratorBasis& basis = generator_basis();
  Eigen::Matrix4cd I4 = Eigen::Matrix4cd::Identity();

  for (const auto& s : fano) {
    PseudoSpinSplit split = pseudo_spin_split(s);
    Eigen::Matrix4cd C = basis.by_index(s.center).string.to_matrix();

    for (int sign : {+1, -1}) {
      const auto& t = sign > 0 ? split.plus : split.minus;
      Eigen::Matrix4cd proj = (I4 + static_cast<double>(sign) * C) / 2.0;
      Eigen::Matrix4cd m[3] = {t[0].matrix(), t[1].matrix(), t[2].matrix()};
      // su(2)-type commutation scaled by the projector, cyclically
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        CHECK((m[i] * m[j] - m[j] * m[i] - Complex(0, 2) * m[k]).norm() < 1e-12);
        CHECK((m[i] * m[i] - proj).norm() < 1e-12);
      }
    }
    // cross-triplet commutators vanish
    for (const auto& p : split.plus)
      for (const auto& q : split.minus) {
        Eigen::Matrix4cd a = p.matrix(), b = q.matrix();
        CHECK((a * b - b * a).norm() < 1e-12);
      }
  }

  // the ZZ split carries the stated combinations
  auto zz = std::find_if(fano.begin(), fano.end(),
                         [](const SubalgebraSet& s) { return s.center == 4; });
  REQUIRE(zz != fano.end());
  PseudoSpinSplit split = pseudo_spin_split(*zz);
  auto render = [](const std::array<PauliCombination, 3>& t) {
    std::set<std::string> out;
    for (const auto& c : t) out.insert(c.str());
    return out;
  };
  CHECK(render(split.plus) ==
        std::set<std::string>{"1/2 (IZ + ZI)", "1/2 (XX - YY)", "1/2 (XY + YX)"});
  CHECK(render(split.minus) ==
        std::set<std::string>{"1/2 (IZ - ZI)", "1/2 (XX + YY)", "1/2 (XY - YX)"});

  // the ZI split is the projected single-spin triple
  auto zi = std::find_if(fano.begin(), fano.end(),
                         [](const SubalgebraSet& s) { return s.center == 3; });
  PseudoSpinSplit zsplit = pseudo_spin_split(*zi);
  CHECK(render(zsplit.plus) ==
        std::set<std::string>{"1/2 (IX + ZX)", "1/2 (IY + ZY)", "1/2 (IZ + ZZ)"});

  SubalgebraSet bogus;
  bogus.kind = SubalgebraKind::so5_10;
  CHECK_THROWS_AS(pseudo_spin_split(bogus), std::domain_error);
}
