#include "q2lab/hypercomplex.hpp"

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace q2lab {

namespace {

// ----- complex-quaternion unit algebra -----
// unit index = 4*K + q with q in 0..3 = (1, i, j, k); K commutes, K^2 = -1.
// i*j = k cyclically.
struct QU {
  int sign, K, q;
};

QU qmul_base(int qa, int qb) {
  if (qa == 0) return {+1, 0, qb};
  if (qb == 0) return {+1, 0, qa};
  if (qa == qb) return {-1, 0, 0};
  // cyclic i(1) -> j(2) -> k(3) -> i(1)
  int succ = qa % 3 + 1;
  int third = 6 - qa - qb;
  return {qb == succ ? +1 : -1, 0, third};
}

SignedUnit cq_rule(int a, int b) {
  int Ka = a / 4, qa = a % 4, Kb = b / 4, qb = b % 4;
  QU r = qmul_base(qa, qb);
  int K = Ka + Kb;
  int sign = r.sign;
  if (K == 2) {
    K = 0;
    sign = -sign;
  }
  return {sign, 4 * K + r.q};
}

// ----- octonion unit algebra -----
// units 0..7 = (1, i, j, k, p, q, r, s); oriented triples define products.
struct OctRules {
  // rule[a][b] = signed unit index for imaginary a != b
  int unit[8][8] = {};
  int sign[8][8] = {};
  OctRules() {
    const int tri[7][3] = {{1, 6, 2}, {2, 4, 3}, {3, 5, 1}, {4, 7, 1},
                           {5, 7, 2}, {6, 7, 3}, {4, 5, 6}};
    for (const auto& t : tri) {
      const int cyc[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
      for (const auto& c : cyc) {
        unit[c[0]][c[1]] = c[2];
        sign[c[0]][c[1]] = +1;
        unit[c[1]][c[0]] = c[2];
        sign[c[1]][c[0]] = -1;
      }
    }
  }
};

const OctRules& oct_rules() {
  static const OctRules r;
  return r;
}

SignedUnit oct_rule(int a, int b) {
  if (a == 0) return {+1, b};
  if (b == 0) return {+1, a};
  if (a == b) return {-1, 0};
  return {oct_rules().sign[a][b], oct_rules().unit[a][b]};
}

const std::vector<std::string> kCqUnits = {"1",  "i",  "j",  "k",
                                           "K", "Ki", "Kj", "Kk"};
const std::vector<std::string> kOctUnits = {"1", "i", "j", "k", "p", "q", "r", "s"};

}  // namespace

std::string CayleyTable::unit_name(const SignedUnit& u) const {
  return (u.sign < 0 ? "-" : "") + units[u.unit];
}

int CayleyTable::element_index(const SignedUnit& u) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == u) return i;
  return -1;
}

SignedUnit CayleyTable::parse_element(const std::string& name) const {
  SignedUnit u;
  std::string s = name;
  if (!s.empty() && s[0] == '-') {
    u.sign = -1;
    s = s.substr(1);
  }
  for (size_t i = 0; i < units.size(); ++i)
    if (units[i] == s) {
      u.unit = static_cast<int>(i);
      return u;
    }
  throw std::invalid_argument("unknown unit name: " + name);
}

CayleyTable CayleyTable::build(std::string name, std::vector<std::string> units,
                               std::vector<std::string> element_names, UnitRule rule) {
  CayleyTable t;
  t.name = std::move(name);
  t.units = std::move(units);
  for (const auto& en : element_names) t.elements.push_back(t.parse_element(en));
  t.products_.resize(t.elements.size() * t.elements.size());
  for (int r = 0; r < t.size(); ++r)
    for (int c = 0; c < t.size(); ++c) {
      const SignedUnit &a = t.elements[r], &b = t.elements[c];
      SignedUnit p = rule(a.unit, b.unit);
      p.sign *= a.sign * b.sign;
      t.products_[r * t.size() + c] = p;
    }
  return t;
}

CayleyTable q8_table() {
  return CayleyTable::build("Q8", kCqUnits,
                            {"1", "k", "-1", "-k", "i", "j", "-i", "-j"}, &cq_rule);
}

CayleyTable coquaternion_table() {
  return CayleyTable::build(
      "co-quaternion", kCqUnits,
      {"1", "k", "-1", "-k", "Ki", "Kj", "-Ki", "-Kj"}, &cq_rule);
}

CayleyTable complex_quaternion_table() {
  return CayleyTable::build(
      "complex-quaternion", kCqUnits,
      {"1", "k", "-1", "-k", "K", "-K", "Kk", "-Kk", "i", "j", "-i", "-j", "Ki",
       "-Ki", "Kj", "-Kj"},
      &cq_rule);
}

CayleyTable c2c4_table() {
  return CayleyTable::build("C2xC4", kCqUnits,
                            {"1", "k", "-1", "-k", "K", "-K", "Kk", "-Kk"}, &cq_rule);
}

CayleyTable octonion_table() {
  return CayleyTable::build(
      "octonion", kOctUnits,
      {"1", "i", "j", "k", "p", "q", "r", "s", "-1", "-i", "-j", "-k", "-p", "-q",
       "-r", "-s"},
      &oct_rule);
}

GroupReport verify_group(const CayleyTable& t) {
  GroupReport rep;
  const int n = t.size();

  rep.closed = true;
  for (int a = 0; a < n && rep.closed; ++a)
    for (int b = 0; b < n; ++b)
      if (t.element_index(t.product(a, b)) < 0) {
        rep.closed = false;
        break;
      }
  if (!rep.closed) return rep;

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (t.product(e, x) != t.elements[x] || t.product(x, e) != t.elements[x]) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  rep.has_identity = id >= 0;

  if (rep.has_identity) {
    rep.has_inverses = true;
    for (int x = 0; x < n; ++x) {
      bool found = false;
      for (int y = 0; y < n; ++y)
        if (t.product(x, y) == t.elements[id] && t.product(y, x) == t.elements[id]) {
          found = true;
          break;
        }
      if (!found) {
        rep.has_inverses = false;
        break;
      }
    }
  }

  rep.associative = true;
  for (int a = 0; a < n && rep.associative; ++a)
    for (int b = 0; b < n && rep.associative; ++b)
      for (int c = 0; c < n; ++c) {
        SignedUnit ab_c = t.product(t.element_index(t.product(a, b)), c);
        SignedUnit a_bc = t.product(a, t.element_index(t.product(b, c)));
        if (ab_c != a_bc) {
          rep.associative = false;
          rep.associativity_witness = {t.element_name(a), t.element_name(b),
                                       t.element_name(c)};
          break;
        }
      }
  return rep;
}

int negative_square_count(const CayleyTable& t) {
  SignedUnit minus_one{-1, 0};
  int n = 0;
  for (int x = 0; x < t.size(); ++x)
    if (t.product(x, x) == minus_one) ++n;
  return n;
}

std::optional<std::string> factorization_check(const CayleyTable& g16,
                                               const std::string& order2_element,
                                               const CayleyTable& g8) {
  SignedUnit e = g16.parse_element(order2_element);
  int ei = g16.element_index(e);
  if (ei < 0) return "factor element not in the table";
  if (g16.product(ei, ei) != SignedUnit{+1, 0}) return "factor element does not square to 1";

  // every element must decompose uniquely as c * q, c in {1, e}, q in g8
  for (int x = 0; x < g16.size(); ++x) {
    int decompositions = 0;
    for (const SignedUnit& c : {SignedUnit{+1, 0}, e}) {
      // q = c^{-1} x = c x (c is an involution)
      SignedUnit q = g16.product(g16.element_index(c), x);
      if (g8.element_index(q) >= 0) ++decompositions;
    }
    if (decompositions != 1)
      return "element " + g16.element_name(x) + " has " +
             std::to_string(decompositions) + " decompositions";
  }
  // the order-8 part must be closed (a subgroup, hence normal at index 2)
  for (int a = 0; a < g8.size(); ++a)
    for (int b = 0; b < g8.size(); ++b)
      if (g8.element_index(g8.product(a, b)) < 0) return "order-8 part not closed";
  return std::nullopt;
}

PauliHomReport pauli_homomorphism_check() {
  using Complex = std::complex<double>;
  using M2 = Eigen::Matrix2cd;
  const Complex im(0, 1);
  M2 I = M2::Identity();
  M2 X, Y, Z;
  X << 0, 1, 1, 0;
  Y << 0, -im, im, 0;
  Z << 1, 0, 0, -1;
  const M2 rep_unit[4] = {I, -im * X, -im * Y, -im * Z};

  CayleyTable t = q8_table();
  auto rep = [&](const SignedUnit& u) -> M2 {
    return static_cast<double>(u.sign) * rep_unit[u.unit];
  };

  PauliHomReport out;
  out.products_match = true;
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      M2 lhs = rep(t.elements[a]) * rep(t.elements[b]);
      if ((lhs - rep(t.product(a, b))).norm() > 1e-14) {
        out.products_match = false;
      }
    }
  out.squares_map_to_minus_identity = true;
  for (int u = 1; u <= 3; ++u)
    if ((rep_unit[u] * rep_unit[u] + I).norm() > 1e-14)
      out.squares_map_to_minus_identity = false;
  return out;
}

OctonionInt octonion_multiply(const OctonionInt& a, const OctonionInt& b) {
  OctonionInt w{};
  w[0] = a[0] * b[0];
  for (int i = 1; i < 8; ++i) {
    w[i] += a[0] * b[i] + a[i] * b[0];
    w[0] -= a[i] * b[i];
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      SignedUnit u = oct_rule(i, j);
      w[u.unit] += u.sign * a[i] * b[j];
    }
  return w;
}

long long octonion_norm2(const OctonionInt& a) {
  long long s = 0;
  for (long long v : a) s += v * v;
  return s;
}

}  // namespace q2lab
