#include "q2lab/designs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace q2lab {

DesignParams qubit_design_params(int two_q) {
  if (two_q < 1) throw std::domain_error("qubit_design_params needs 2q >= 1");
  DesignParams p;
  long long pow2q = 1ll << two_q;        // 2^{2q}
  long long pow2q1 = 1ll << (two_q - 1); // 2^{2q-1}
  p.v = pow2q - 1;
  p.r = pow2q1 - 1;
  p.b = p.v * p.r / 3;
  p.k = 3;
  p.lambda = 1;
  return p;
}

DesignParams general_params(int n, int m) {
  if (n < 1 || m < 1) throw std::domain_error("general_params needs n, m >= 1");
  DesignParams p;
  if (m == 1) {
    p.v = n + 1;
    p.k = 2;
    p.r = n;
    p.b = static_cast<long long>(n) * (n + 1) / 2;
    p.lambda = 1;
    return p;
  }
  auto ipow = [](long long base, int e) {
    long long v = 1;
    while (e-- > 0) v *= base;
    return v;
  };
  long long mn = ipow(m, n), mn1 = ipow(m, n + 1);
  p.v = (mn1 - 1) / (m - 1);
  p.b = (mn - 1) * (mn1 - 1) / ((static_cast<long long>(m - 1) * (m - 1)) * (m + 1));
  p.r = (mn - 1) / (m - 1);
  p.k = m + 1;
  p.lambda = 1;
  return p;
}

const std::vector<TabulatedDesignRow>& tabulated_design_rows() {
  static const std::vector<TabulatedDesignRow> rows = {
      {1, 1, 0, 0},      {2, 3, 1, 1},       {3, 7, 7, 3},
      {4, 15, 35, 7},    {5, 31, 155, 15},   {6, 63, 641, 31},
      {7, 127, 2667, 63},
  };
  return rows;
}

std::vector<Line> steiner_from_pg(int n) {
  if (n != 2 && n != 3) throw std::domain_error("steiner_from_pg supports n in {2, 3}");
  return pg_lines(n);
}

Resolution kirkman_resolve() {
  auto spreads = find_spreads();
  std::vector<Line> lines = pg_lines(3);
  std::map<Line, int> line_idx;
  for (size_t i = 0; i < lines.size(); ++i) line_idx[lines[i]] = static_cast<int>(i);

  std::vector<uint64_t> masks;
  for (const auto& s : spreads) {
    uint64_t m = 0;
    for (const Line& l : s) m |= 1ull << line_idx[l];
    masks.push_back(m);
  }
  const uint64_t full = (1ull << 35) - 1;

  std::vector<int> chosen;
  auto rec = [&](auto&& self, uint64_t used, size_t start) -> bool {
    if (chosen.size() == 7) return used == full;
    for (size_t i = start; i < spreads.size(); ++i) {
      if (masks[i] & used) continue;
      chosen.push_back(static_cast<int>(i));
      if (self(self, used | masks[i], i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, 0))
    throw std::logic_error("no Kirkman resolution found; spread search is broken");

  Resolution r;
  for (int i : chosen) r.classes.push_back(spreads[i]);
  return r;
}

std::optional<std::string> check_resolution_certificate(const Resolution& r) {
  if (r.classes.size() != 7) return "expected 7 parallel classes";
  std::set<Line> used;
  std::map<std::pair<uint32_t, uint32_t>, int> pair_count;
  for (const auto& cls : r.classes) {
    std::set<uint32_t> covered;
    for (const Line& l : cls) {
      if ((l.pts[0] ^ l.pts[1]) != l.pts[2]) return "block is not a PG line";
      if (!used.insert(l).second) return "block appears twice";
      for (uint32_t p : l.pts) {
        if (p < 1 || p > 15) return "point out of range";
        if (!covered.insert(p).second) return "point repeated within a class";
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          auto key = std::minmax(l.pts[i], l.pts[j]);
          pair_count[{key.first, key.second}]++;
        }
    }
    if (covered.size() != 15) return "class does not cover all 15 points";
  }
  if (used.size() != 35) return "not all 35 blocks used";
  for (uint32_t a = 1; a <= 15; ++a)
    for (uint32_t b = a + 1; b <= 15; ++b)
      if (pair_count[{a, b}] != 1) return "pair coverage differs from 1";
  return std::nullopt;
}

}  // namespace q2lab
