#include "q2lab/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace q2lab {

long long pg_point_count(int n, int m) {
  if (n < 0 || m < 1) throw std::domain_error("pg_point_count needs n >= 0, m >= 1");
  if (m == 1) return n + 1;
  long long num = 1;
  for (int i = 0; i < n + 1; ++i) num *= m;
  return (num - 1) / (m - 1);
}

std::vector<Line> pg_lines(int n) {
  if (n < 1 || n > 6) throw std::domain_error("pg_lines supports 1 <= n <= 6");
  const uint32_t npts = (1u << (n + 1)) - 1;
  std::set<Line> lines;
  for (uint32_t a = 1; a <= npts; ++a)
    for (uint32_t b = a + 1; b <= npts; ++b) {
      uint32_t c = a ^ b;
      std::array<uint32_t, 3> t = {a, b, c};
      std::sort(t.begin(), t.end());
      lines.insert(Line{t});
    }
  return {lines.begin(), lines.end()};
}

std::pair<long long, long long> eg_decomposition(int n) {
  if (n < 1) throw std::domain_error("eg_decomposition needs n >= 1");
  return {pg_point_count(n - 1, 2), 1ll << n};
}

PauliString point_to_pauli(uint32_t point) {
  if (point == 0 || point > 15)
    throw std::domain_error("PG(3,2) points are the nonzero 4-bit patterns");
  std::string bits(4, '0');
  for (int i = 0; i < 4; ++i)
    if (point & (1u << (3 - i))) bits[i] = '1';
  return PauliString::from_square_binary(bits);
}

uint32_t pauli_to_point(const PauliString& p) {
  if (p.n_qubits() != 2) throw std::domain_error("expected a two-qubit string");
  std::string bits = p.square_binary();
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    if (bits[i] == '1') v |= 1u << (3 - i);
  return v;
}

LineClass pauli_line_classify(const Line& line) {
  if ((line.pts[0] ^ line.pts[1]) != line.pts[2])
    throw std::invalid_argument("not a PG line: points do not sum to zero");
  PauliString a = point_to_pauli(line.pts[0]);
  PauliString b = point_to_pauli(line.pts[1]);
  PauliString c = point_to_pauli(line.pts[2]);
  int ncomm = int(a.commutes_with(b)) + int(b.commutes_with(c)) + int(a.commutes_with(c));
  if (ncomm == 3) return LineClass::commuting;
  if (ncomm == 0) return LineClass::cyclic;
  throw std::logic_error("mixed commutation on a line");
}

int Doily::lines_through(uint32_t point) const {
  int n = 0;
  for (const Line& l : lines)
    if (l.contains(point)) ++n;
  return n;
}

Doily build_doily() {
  Doily d;
  for (const Line& l : pg_lines(3)) {
    if (pauli_line_classify(l) == LineClass::commuting)
      d.lines.push_back(l);
    else
      d.cyclic_lines.push_back(l);
  }
  return d;
}

std::vector<std::array<uint32_t, 5>> find_ovoids(const Doily& d) {
  std::vector<std::array<uint32_t, 5>> out;
  std::array<uint32_t, 5> pick{};
  // meets every doily line exactly once <=> 5 points, no two collinear
  auto collinear = [&](uint32_t a, uint32_t b) {
    for (const Line& l : d.lines)
      if (l.contains(a) && l.contains(b)) return true;
    return false;
  };
  auto rec = [&](auto&& self, int depth, uint32_t start) -> void {
    if (depth == 5) {
      for (const Line& l : d.lines) {
        int hits = 0;
        for (uint32_t p : pick) hits += l.contains(p);
        if (hits != 1) return;
      }
      out.push_back(pick);
      return;
    }
    for (uint32_t p = start; p <= 15; ++p) {
      bool ok = true;
      for (int i = 0; i < depth; ++i)
        if (collinear(pick[i], p)) { ok = false; break; }
      if (!ok) continue;
      pick[depth] = p;
      self(self, depth + 1, p + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

std::vector<uint32_t> Grid::points() const {
  std::vector<uint32_t> p;
  for (const auto& row : cells)
    for (uint32_t v : row) p.push_back(v);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Grid> find_grids(const Doily& d) {
  const auto& L = d.lines;
  std::vector<Grid> out;
  std::set<std::vector<uint32_t>> seen;
  const int n = static_cast<int>(L.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::ranges::any_of(L[i].pts, [&](uint32_t p) { return L[j].contains(p); }))
        continue;
      for (int k = j + 1; k < n; ++k) {
        std::set<uint32_t> pts(L[i].pts.begin(), L[i].pts.end());
        pts.insert(L[j].pts.begin(), L[j].pts.end());
        pts.insert(L[k].pts.begin(), L[k].pts.end());
        if (pts.size() != 9) continue;
        // columns: three further doily lines inside the point set, disjoint
        std::vector<Line> inner;
        for (const Line& l : L)
          if (l != L[i] && l != L[j] && l != L[k] &&
              std::ranges::all_of(l.pts, [&](uint32_t p) { return pts.count(p) > 0; }))
            inner.push_back(l);
        if (inner.size() != 3) continue;
        std::set<uint32_t> cpts;
        for (const Line& l : inner) cpts.insert(l.pts.begin(), l.pts.end());
        if (cpts.size() != 9) continue;
        std::vector<uint32_t> key(pts.begin(), pts.end());
        if (!seen.insert(key).second) continue;
        Grid g;
        std::array<Line, 3> rows = {L[i], L[j], L[k]};
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c)
            for (uint32_t p : rows[r].pts)
              if (inner[c].contains(p)) g.cells[r][c] = p;
        out.push_back(g);
      }
    }
  return out;
}

std::vector<std::array<Line, 5>> find_spreads() {
  std::vector<Line> lines = pg_lines(3);
  std::vector<std::array<Line, 5>> out;
  std::array<Line, 5> pick{};
  auto rec = [&](auto&& self, int depth, size_t start, uint32_t used) -> void {
    if (depth == 5) {
      out.push_back(pick);
      return;
    }
    for (size_t i = start; i < lines.size(); ++i) {
      uint32_t mask = 0;
      for (uint32_t p : lines[i].pts) mask |= 1u << p;
      if (mask & used) continue;
      pick[depth] = lines[i];
      self(self, depth + 1, i + 1, used | mask);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::string QuaternionUnit::str() const {
  static const char* qn[] = {"1", "i", "j", "k"};
  std::string s = sign < 0 ? "-" : "";
  if (K) s += "K";
  if (!K || q != 0) s += qn[q];
  return s;
}

QuaternionLabelling::QuaternionLabelling() {
  // base triplet (xyz): (100)->k, (010)->i, (001)->j; complements negate
  auto base = [](uint32_t v) -> QuaternionUnit {
    switch (v) {
      case 0b000: return {+1, false, 0};
      case 0b100: return {+1, false, 3};
      case 0b010: return {+1, false, 1};
      case 0b001: return {+1, false, 2};
      case 0b011: return {-1, false, 3};
      case 0b101: return {-1, false, 1};
      case 0b110: return {-1, false, 2};
      default: return {-1, false, 0};  // 111 -> -1
    }
  };
  for (uint32_t label = 0; label < 16; ++label) {
    QuaternionUnit u = base(label & 7);
    u.K = (label & 8) != 0;
    units_[label] = u;
  }
}

QuaternionUnit QuaternionLabelling::unit(uint32_t label) const {
  if (label == 0 || label > 15)
    throw std::domain_error("round-bracket labels are the nonzero 4-bit patterns");
  return units_[label];
}

uint32_t QuaternionLabelling::label(const QuaternionUnit& u) const {
  for (uint32_t l = 1; l < 16; ++l)
    if (units_[l] == u) return l;
  throw std::domain_error("unit " + u.str() + " is not in the labelled set");
}

}  // namespace q2lab
