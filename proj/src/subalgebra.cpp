#include "q2lab/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q2lab {

std::string CommutatorCell::str() const {
  if (zero) return "0";
  std::string s = phase_sign < 0 ? "-i" : "i";
  if (magnitude != 1.0) s += "/4";
  return s + "*O" + std::to_string(target);
}

CommutatorTable CommutatorTable::build() {
  const GeneratorBasis& basis = generator_basis();
  CommutatorTable t;
  for (int a = GeneratorBasis::kFirstIndex; a <= GeneratorBasis::kLastIndex; ++a) {
    for (int b = GeneratorBasis::kFirstIndex; b <= GeneratorBasis::kLastIndex; ++b) {
      auto r = basis.commutator(a, b);
      CommutatorCell& c = t.cells_[a - 2][b - 2];
      if (!r) continue;
      c.zero = false;
      c.magnitude = std::abs(r->first);
      c.phase_sign = r->first.imag() > 0 ? 1 : -1;
      c.target = r->second;
    }
  }
  return t;
}

const CommutatorCell& CommutatorTable::cell(int a, int b) const {
  if (a < 2 || a > 16 || b < 2 || b > 16)
    throw std::out_of_range("generator index must lie in 2..16");
  return cells_[a - 2][b - 2];
}

int CommutatorTable::zeros_in_row(int a) const {
  int n = 0;
  for (int b = 2; b <= 16; ++b)
    if (cell(a, b).zero) ++n;
  return n;
}

CenterClass classify_center(int center_index) {
  const auto& g = generator_basis().by_index(center_index);
  return g.string.letters().find('I') == std::string::npos
             ? CenterClass::entangling
             : CenterClass::non_entangling;
}

std::vector<SubalgebraSet> find_fano_sets() {
  const GeneratorBasis& basis = generator_basis();
  std::vector<SubalgebraSet> out;
  for (int c = 2; c <= 16; ++c) {
    SubalgebraSet s;
    s.kind = SubalgebraKind::fano7;
    s.center = c;
    s.entangling = classify_center(c) == CenterClass::entangling;
    for (int g = 2; g <= 16; ++g)
      if (g == c || !basis.commutator(c, g)) s.members.push_back(g);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// target table over 0-based generator slots; -1 where the commutator vanishes
std::array<std::array<int, 15>, 15> target_table() {
  std::array<std::array<int, 15>, 15> t{};
  const GeneratorBasis& basis = generator_basis();
  for (int a = 2; a <= 16; ++a)
    for (int b = 2; b <= 16; ++b) {
      auto r = basis.commutator(a, b);
      t[a - 2][b - 2] = r ? r->second - 2 : -1;
    }
  return t;
}

void closed_subset_search(const std::array<std::array<int, 15>, 15>& targ,
                          std::vector<int>& cur, int next, int k,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int cand = next; cand < 15; ++cand) {
    // prune: a commutator target below the lexicographic frontier can never
    // be added later, so it must already be in the set
    bool ok = true;
    for (int m : cur) {
      int t = targ[m][cand];
      if (t >= 0 && t <= cand && std::find(cur.begin(), cur.end(), t) == cur.end() &&
          t != cand) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(cand);
    closed_subset_search(targ, cur, cand + 1, k, out);
    cur.pop_back();
  }
}

bool is_closed(const std::array<std::array<int, 15>, 15>& targ,
               const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      int t = targ[s[i]][s[j]];
      if (t >= 0 && std::find(s.begin(), s.end(), t) == s.end()) return false;
    }
  return true;
}

}  // namespace

std::vector<SubalgebraSet> find_closed_sets(int k) {
  if (k != 7 && k != 8 && k != 10)
    throw std::domain_error("closed-set search supports sizes 7, 8 and 10");
  auto targ = target_table();
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  closed_subset_search(targ, cur, 0, k, raw);

  std::vector<SubalgebraSet> out;
  for (auto& s : raw) {
    if (!is_closed(targ, s)) continue;
    SubalgebraSet set;
    for (int m : s) set.members.push_back(m + 2);
    if (k == 7) {
      set.kind = SubalgebraKind::fano7;
      for (int c : set.members) {
        bool central = true;
        for (int g : set.members)
          if (g != c && generator_basis().commutator(c, g)) {
            central = false;
            break;
          }
        if (central) {
          set.center = c;
          set.entangling = classify_center(c) == CenterClass::entangling;
          break;
        }
      }
    } else {
      set.kind = k == 8 ? SubalgebraKind::su3_8 : SubalgebraKind::so5_10;
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(),
            [](const SubalgebraSet& a, const SubalgebraSet& b) {
              return a.members < b.members;
            });
  return out;
}

Eigen::Matrix4cd PauliCombination::matrix() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (const auto& [w, p] : terms) m += w * p.to_matrix();
  return m;
}

std::string PauliCombination::str() const {
  std::string s = "1/2 (";
  for (size_t i = 0; i < terms.size(); ++i) {
    double w = terms[i].first * 2.0;  // render relative to the 1/2 prefactor
    if (i == 0)
      s += w < 0 ? "-" : "";
    else
      s += w < 0 ? " - " : " + ";
    s += terms[i].second.letters();
  }
  return s + ")";
}

PseudoSpinSplit pseudo_spin_split(const SubalgebraSet& s) {
  if (s.kind != SubalgebraKind::fano7 || s.center == 0)
    throw std::domain_error("pseudo-spin split needs a fano7 set");
  const GeneratorBasis& basis = generator_basis();
  const PauliString c = basis.by_index(s.center).string;

  // companions pair as {g, c*g}; keep the lexicographically smaller letters
  // of each pair as representative
  std::vector<PauliString> reps;
  std::vector<std::string> seen;
  for (int idx : s.members) {
    if (idx == s.center) continue;
    PauliString g = basis.by_index(idx).string;
    PauliString partner = c * g;
    std::string gl = g.letters(), pl = partner.letters();
    std::string key = std::min(gl, pl);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    reps.push_back(gl <= pl ? g : basis.by_index(basis.index_of_letters(pl)).string);
  }
  std::sort(reps.begin(), reps.end(), [](const PauliString& a, const PauliString& b) {
    return a.letters() < b.letters();
  });

  auto combo = [&](const PauliString& g, int sign) {
    PauliCombination pc;
    PauliString cg = c * g;
    double w = 0.5 * sign * (cg.phase_exponent() == 2 ? -1.0 : 1.0);
    pc.terms.push_back({0.5, g});
    pc.terms.push_back({w, cg.with_phase_exponent(0)});
    return pc;
  };

  PseudoSpinSplit split;
  for (int i = 0; i < 3; ++i) {
    split.plus[i] = combo(reps[i], +1);
    split.minus[i] = combo(reps[i], -1);
  }

  // orient each triplet so that [t1, t2] = 2i t3
  auto orient = [](std::array<PauliCombination, 3>& t) {
    Eigen::Matrix4cd m1 = t[0].matrix(), m2 = t[1].matrix(), m3 = t[2].matrix();
    Eigen::Matrix4cd comm = m1 * m2 - m2 * m1;
    if ((comm - Complex(0, 2) * m3).norm() > 1e-9) std::swap(t[1], t[2]);
  };
  orient(split.plus);
  orient(split.minus);
  return split;
}

}  // namespace q2lab
