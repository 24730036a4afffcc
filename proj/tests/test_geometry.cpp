#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "q2lab/geometry.hpp"
#include "q2lab/hypercomplex.hpp"
#include "q2lab/subalgebra.hpp"

using namespace q2lab;

TEST_CASE("point counting") {
  CHECK(pg_point_count(3, 2) == 15);
  CHECK(pg_point_count(2, 3) == 13);
  CHECK(pg_point_count(0, 2) == 1);
  CHECK(pg_point_count(0, 7) == 1);
  CHECK(pg_point_count(4, 4) == 341);
  CHECK(pg_point_count(2, 1) == 3);
  for (int n = 1; n <= 6; ++n) CHECK(pg_point_count(n, 2) == (1ll << (n + 1)) - 1);
}

TEST_CASE("line enumeration") {
  CHECK(pg_lines(2).size() == 7);
  auto lines = pg_lines(3);
  CHECK(lines.size() == 35);

  // every pair of distinct points lies on exactly one line
  for (uint32_t a = 1; a <= 15; ++a)
    for (uint32_t b = a + 1; b <= 15; ++b) {
      int n = 0;
      for (const Line& l : lines)
        if (l.contains(a) && l.contains(b)) ++n;
      CHECK(n == 1);
    }
  // 7 lines through each point
  for (uint32_t p = 1; p <= 15; ++p) {
    int n = 0;
    for (const Line& l : lines)
      if (l.contains(p)) ++n;
    CHECK(n == 7);
  }
  CHECK_THROWS_AS(pg_lines(0), std::domain_error);
  CHECK_THROWS_AS(pg_lines(7), std::domain_error);
}

TEST_CASE("euclidean decomposition") {
  CHECK(eg_decomposition(3) == std::pair<long long, long long>{7, 8});
  CHECK(eg_decomposition(2) == std::pair<long long, long long>{3, 4});
  CHECK(eg_decomposition(4) == std::pair<long long, long long>{15, 16});
  for (int n = 1; n <= 6; ++n) {
    auto [prev, cube] = eg_decomposition(n);
    CHECK(prev + cube == pg_point_count(n, 2));
  }
}

TEST_CASE("point-generator bijection via square binaries") {
  CHECK(point_to_pauli(0b0100).letters() == "ZI");
  CHECK(point_to_pauli(0b0001).letters() == "IZ");
  CHECK(point_to_pauli(0b1111).letters() == "XX");
  for (uint32_t p = 1; p <= 15; ++p) CHECK(pauli_to_point(point_to_pauli(p)) == p);
  CHECK_THROWS_AS(point_to_pauli(0), std::domain_error);
}

TEST_CASE("line classification") {
  auto line_of = [](const char* a, const char* b) {
    uint32_t pa = pauli_to_point(PauliString::parse(a));
    uint32_t pb = pauli_to_point(PauliString::parse(b));
    std::array<uint32_t, 3> pts = {pa, pb, pa ^ pb};
    std::sort(pts.begin(), pts.end());
    return Line{pts};
  };
  CHECK(pauli_line_classify(line_of("IZ", "ZI")) == LineClass::commuting);
  CHECK(pauli_line_classify(line_of("IX", "IY")) == LineClass::cyclic);

  // order independence
  Line l = line_of("IZ", "ZI");
  std::swap(l.pts[0], l.pts[2]);
  Line l2{{l.pts[0], l.pts[1], l.pts[2]}};
  CHECK(pauli_line_classify(l2) == LineClass::commuting);

  CHECK_THROWS_AS(pauli_line_classify(Line{{1, 2, 4}}), std::invalid_argument);

  int commuting = 0, cyclic = 0;
  auto lines = pg_lines(3);
  for (const Line& line : lines)
    (pauli_line_classify(line) == LineClass::commuting ? commuting : cyclic)++;
  CHECK(commuting == 15);
  CHECK(cyclic == 20);

  // per point: 3 commuting + 4 cyclic
  for (uint32_t p = 1; p <= 15; ++p) {
    int c = 0, y = 0;
    for (const Line& line : lines)
      if (line.contains(p))
        (pauli_line_classify(line) == LineClass::commuting ? c : y)++;
    CHECK(c == 3);
    CHECK(y == 4);
  }

  // commuting lines: pairwise products are the third up to ±1;
  // cyclic lines carry ±i
  for (const Line& line : lines) {
    PauliString a = point_to_pauli(line.pts[0]);
    PauliString b = point_to_pauli(line.pts[1]);
    PauliString c = point_to_pauli(line.pts[2]);
    PauliString prod = a * b;
    CHECK(prod.letters() == c.letters());
    if (pauli_line_classify(line) == LineClass::commuting)
      CHECK(prod.phase_exponent() % 2 == 0);
    else
      CHECK(prod.phase_exponent() % 2 == 1);
  }
}

TEST_CASE("doily") {
  Doily d = build_doily();
  CHECK(d.lines.size() == 15);
  CHECK(d.cyclic_lines.size() == 20);
  for (uint32_t p = 1; p <= 15; ++p) CHECK(d.lines_through(p) == 3);
  for (const Line& l : d.lines)
    CHECK(pauli_line_classify(l) == LineClass::commuting);
}

TEST_CASE("ovoids") {
  Doily d = build_doily();
  auto ovoids = find_ovoids(d);
  CHECK(ovoids.size() == 6);
  for (const auto& o : ovoids) {
    for (size_t i = 0; i < o.size(); ++i)
      for (size_t j = i + 1; j < o.size(); ++j)
        CHECK_FALSE(point_to_pauli(o[i]).commutes_with(point_to_pauli(o[j])));
    for (const Line& l : d.lines) {
      int hits = 0;
      for (uint32_t p : o) hits += l.contains(p);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("grids and the sign-parity property") {
  Doily d = build_doily();
  auto grids = find_grids(d);
  CHECK(grids.size() == 10);
  for (const Grid& g : grids) {
    CHECK(g.points().size() == 9);
    // rows and columns are doily lines: 6 lines in total inside the grid
    std::set<Line> used;
    for (int r = 0; r < 3; ++r) {
      std::array<uint32_t, 3> row = g.cells[r];
      std::sort(row.begin(), row.end());
      std::array<uint32_t, 3> col = {g.cells[0][r], g.cells[1][r], g.cells[2][r]};
      std::sort(col.begin(), col.end());
      for (auto pts : {row, col}) {
        Line l{pts};
        CHECK(std::find(d.lines.begin(), d.lines.end(), l) != d.lines.end());
        used.insert(l);
      }
    }
    CHECK(used.size() == 6);

    // products of the three generators along every row/column are ±identity
    // with an odd number of minus signs among the six lines
    int minus = 0;
    auto line_sign = [](std::array<uint32_t, 3> pts) {
      Eigen::Matrix4cd m = point_to_pauli(pts[0]).to_matrix() *
                           point_to_pauli(pts[1]).to_matrix() *
                           point_to_pauli(pts[2]).to_matrix();
      if ((m - Eigen::Matrix4cd::Identity()).norm() < 1e-12) return +1;
      REQUIRE((m + Eigen::Matrix4cd::Identity()).norm() < 1e-12);
      return -1;
    };
    for (int r = 0; r < 3; ++r) {
      if (line_sign(g.cells[r]) < 0) ++minus;
      if (line_sign({g.cells[0][r], g.cells[1][r], g.cells[2][r]}) < 0) ++minus;
    }
    CHECK(minus % 2 == 1);
  }
}

TEST_CASE("spreads") {
  auto spreads = find_spreads();
  CHECK(spreads.size() == 56);
  for (const auto& s : spreads) {
    std::set<uint32_t> pts;
    for (const Line& l : s) pts.insert(l.pts.begin(), l.pts.end());
    CHECK(pts.size() == 15);
  }
}

TEST_CASE("duality is translation by the all-Z string") {
  // On two qubits the z-bit complement equals right-multiplication by ZZ up
  // to phase, which is what makes the median pairings of the ZZ-center
  // figure work.
  const GeneratorBasis& basis = generator_basis();
  PauliString zz = PauliString::parse("ZZ");
  for (const auto& g : basis.entries()) {
    PauliString dg = g.string.dual();
    PauliString gz = g.string * zz;
    CHECK(dg.letters() == gz.letters());
  }

  // the ZZ-center fano set maps onto itself, pairing each companion g with
  // d(g) so that g · d(g) = ±ZZ
  auto fano = find_fano_sets();
  auto s = std::find_if(fano.begin(), fano.end(),
                        [](const SubalgebraSet& f) { return f.center == 4; });
  REQUIRE(s != fano.end());
  std::set<std::string> members;
  for (int m : s->members) members.insert(basis.by_index(m).string.letters());
  for (int m : s->members) {
    if (m == s->center) continue;
    PauliString g = basis.by_index(m).string;
    PauliString dg = g.dual();
    CHECK(members.count(dg.letters()) == 1);
    PauliString prod = g * dg;
    CHECK(prod.letters() == "ZZ");
    CHECK(prod.phase_exponent() % 2 == 0);  // ±1, never ±i
  }
}

TEST_CASE("round-bracket quaternion labelling") {
  QuaternionLabelling ql;
  CHECK(ql.unit(0b0100).str() == "k");
  CHECK(ql.unit(0b0010).str() == "i");
  CHECK(ql.unit(0b0001).str() == "j");
  CHECK(ql.unit(0b1000).str() == "K");
  CHECK(ql.unit(0b1111).str() == "-K");
  CHECK(ql.unit(0b0111).str() == "-1");
  CHECK_THROWS_AS(ql.unit(0), std::domain_error);

  for (uint32_t l = 1; l <= 15; ++l) CHECK(ql.label(ql.unit(l)) == l);

  // multiplication corresponds to binary addition up to sign, via the
  // complex-quaternion Cayley table
  CayleyTable cq = complex_quaternion_table();
  auto to_su = [&](const QuaternionUnit& u) {
    return SignedUnit{u.sign, 4 * (u.K ? 1 : 0) + u.q};
  };
  for (uint32_t a = 1; a <= 15; ++a)
    for (uint32_t b = 1; b <= 15; ++b) {
      SignedUnit pa = to_su(ql.unit(a)), pb = to_su(ql.unit(b));
      SignedUnit prod = cq.product(cq.element_index(pa), cq.element_index(pb));
      if ((a ^ b) == 0) {
        CHECK(prod.unit == 0);  // square lands on ±1
      } else {
        SignedUnit expect = to_su(ql.unit(a ^ b));
        CHECK(prod.unit == expect.unit);  // equality up to sign
      }
    }

  // k·i = j with the (0100)(0010) -> (0110) labels
  SignedUnit k = to_su(ql.unit(0b0100)), i = to_su(ql.unit(0b0010));
  CayleyTable& t = cq;
  SignedUnit ki = t.product(t.element_index(k), t.element_index(i));
  CHECK(t.unit_name(ki) == "j");
  CHECK(ql.unit(0b0110).q == ki.unit);  // -j: same unit up to sign

  // dictionary agreement: round labels map to the tabulated quaternion names
  for (const auto& g : generator_basis().entries()) {
    if (g.index == 4) continue;  // the center's ±1 sign is conventional
    uint32_t label = 0;
    for (char ch : g.round_binary) label = label * 2 + (ch - '0');
    CHECK(ql.unit(label).str() == g.quaternion_label);
  }
}
