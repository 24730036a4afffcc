#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "q2lab/designs.hpp"
#include "q2lab/evolution.hpp"
#include "q2lab/geometry.hpp"
#include "q2lab/hypercomplex.hpp"
#include "q2lab/json_io.hpp"
#include "q2lab/pauli.hpp"
#include "q2lab/subalgebra.hpp"
#include "q2lab/xstate.hpp"

namespace {

using OJson = nlohmann::ordered_json;
using namespace q2lab;

constexpr const char* kVersion = "0.1.0";

struct Output {
  std::string format = "plain";  // plain | csv | json
  std::string subcommand;
  std::vector<std::string> flags;
  std::optional<uint64_t> seed;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  OJson manifest() const {
    OJson m;
    m["subcommand"] = subcommand;
    m["flags"] = flags;
    if (seed) m["seed"] = *seed;
    m["version"] = kVersion;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    m["duration_ms"] = ms;
    return m;
  }

  void emit_json(const OJson& result) const {
    OJson doc;
    doc["manifest"] = manifest();
    doc["result"] = result;
    std::cout << doc.dump(2) << "\n";
  }
};

uint64_t default_seed() {
  if (const char* env = std::getenv("Q2LAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::string letters_of(int index) {
  return generator_basis().by_index(index).string.letters();
}

// ---------------------------------------------------------------- table ----

int run_table(const Output& out) {
  CommutatorTable t = CommutatorTable::build();
  if (out.format == "csv" || out.format == "plain") {
    const char* sep = out.format == "csv" ? "," : "\t";
    std::cout << "[.,.]";
    for (int b = 2; b <= 16; ++b) std::cout << sep << "O" << b;
    std::cout << "\n";
    for (int a = 2; a <= 16; ++a) {
      std::cout << "O" << a;
      for (int b = 2; b <= 16; ++b) std::cout << sep << t.cell(a, b).str();
      std::cout << "\n";
    }
    return 0;
  }
  OJson rows = OJson::array();
  for (int a = 2; a <= 16; ++a) {
    OJson row = OJson::array();
    for (int b = 2; b <= 16; ++b) {
      const CommutatorCell& c = t.cell(a, b);
      OJson cell;
      cell["text"] = c.str();
      if (!c.zero) {
        cell["magnitude"] = c.magnitude;
        cell["phase_sign"] = c.phase_sign;
        cell["target"] = c.target;
      }
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  OJson result;
  result["generators"] = OJson::array();
  for (int g = 2; g <= 16; ++g) result["generators"].push_back("O" + std::to_string(g));
  result["cells"] = rows;
  out.emit_json(result);
  return 0;
}

// --------------------------------------------------------- subalgebras ----

int run_subalgebras(const Output& out, int size) {
  std::vector<SubalgebraSet> sets = find_closed_sets(size);
  auto describe = [](const SubalgebraSet& s) {
    OJson j;
    OJson members = OJson::array();
    for (int m : s.members)
      members.push_back({{"index", m}, {"letters", letters_of(m)}});
    j["members"] = members;
    switch (s.kind) {
      case SubalgebraKind::fano7: j["kind"] = "fano7"; break;
      case SubalgebraKind::su3_8: j["kind"] = "su3_8"; break;
      case SubalgebraKind::so5_10: j["kind"] = "so5_10"; break;
    }
    if (s.kind == SubalgebraKind::fano7) {
      j["center"] = {{"index", s.center}, {"letters", letters_of(s.center)}};
      j["entangling"] = s.entangling;
    }
    return j;
  };
  if (out.format == "json") {
    OJson result;
    result["size"] = size;
    result["count"] = sets.size();
    result["sets"] = OJson::array();
    for (const auto& s : sets) result["sets"].push_back(describe(s));
    out.emit_json(result);
    return 0;
  }
  const char* sep = out.format == "csv" ? "," : "  ";
  std::cout << "closed " << size << "-sets: " << sets.size() << "\n";
  for (const auto& s : sets) {
    bool first = true;
    for (int m : s.members) {
      if (!first) std::cout << sep;
      std::cout << letters_of(m);
      first = false;
    }
    if (s.kind == SubalgebraKind::fano7)
      std::cout << sep << "center=" << letters_of(s.center) << sep
                << (s.entangling ? "entangling" : "non-entangling");
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- geometry ----

int run_geometry(const Output& out, int dim) {
  auto lines = pg_lines(dim);
  const long long points = pg_point_count(dim, 2);
  const bool full = dim == 3;

  OJson result;
  result["dimension"] = dim;
  result["points"] = points;
  result["lines"] = lines.size();

  OJson jlines = OJson::array();
  int commuting = 0, cyclic = 0;
  for (const Line& l : lines) {
    OJson jl;
    jl["points"] = {l.pts[0], l.pts[1], l.pts[2]};
    if (full) {
      bool comm = pauli_line_classify(l) == LineClass::commuting;
      (comm ? commuting : cyclic)++;
      jl["generators"] = {point_to_pauli(l.pts[0]).letters(),
                          point_to_pauli(l.pts[1]).letters(),
                          point_to_pauli(l.pts[2]).letters()};
      jl["class"] = comm ? "commuting" : "cyclic";
    }
    jlines.push_back(jl);
  }
  result["line_list"] = jlines;

  if (full) {
    result["commuting_lines"] = commuting;
    result["cyclic_lines"] = cyclic;
    Doily d = build_doily();
    auto ovoids = find_ovoids(d);
    auto grids = find_grids(d);
    auto spreads = find_spreads();
    result["doily_lines"] = d.lines.size();
    result["ovoids"] = ovoids.size();
    result["grids"] = grids.size();
    result["spreads"] = spreads.size();
    OJson jo = OJson::array();
    for (const auto& o : ovoids) {
      OJson pts = OJson::array();
      for (uint32_t p : o) pts.push_back(point_to_pauli(p).letters());
      jo.push_back(pts);
    }
    result["ovoid_list"] = jo;
  }

  if (out.format == "json") {
    out.emit_json(result);
    return 0;
  }
  std::cout << "PG(" << dim << ", 2): " << points << " points, " << lines.size()
            << " lines\n";
  if (full) {
    std::cout << "  commuting lines: " << commuting << "\n"
              << "  cyclic lines:    " << cyclic << "\n"
              << "  doily:  " << result["doily_lines"] << " lines\n"
              << "  ovoids: " << result["ovoids"] << "\n"
              << "  grids:  " << result["grids"] << "\n"
              << "  spreads: " << result["spreads"] << "\n";
    Doily d = build_doily();
    std::cout << "doily lines (mutually commuting triples):\n";
    for (const Line& l : d.lines)
      std::cout << "  " << point_to_pauli(l.pts[0]).letters() << " "
                << point_to_pauli(l.pts[1]).letters() << " "
                << point_to_pauli(l.pts[2]).letters() << "\n";
    std::cout << "ovoids (pairwise anticommuting five-point caps):\n";
    for (const auto& o : find_ovoids(d)) {
      std::cout << " ";
      for (uint32_t p : o) std::cout << " " << point_to_pauli(p).letters();
      std::cout << "\n";
    }
    std::cout << "grids (rows and columns are doily lines):\n";
    for (const Grid& g : find_grids(d)) {
      for (const auto& row : g.cells) {
        std::cout << "  ";
        for (uint32_t p : row) std::cout << point_to_pauli(p).letters() << " ";
        std::cout << "\n";
      }
      std::cout << "\n";
    }
  }
  if (out.format == "csv") {
    std::cout << "p1,p2,p3" << (full ? ",g1,g2,g3,class" : "") << "\n";
    for (const OJson& jl : result["line_list"]) {
      std::cout << jl["points"][0] << "," << jl["points"][1] << ","
                << jl["points"][2];
      if (full)
        std::cout << "," << jl["generators"][0].get<std::string>() << ","
                  << jl["generators"][1].get<std::string>() << ","
                  << jl["generators"][2].get<std::string>() << ","
                  << jl["class"].get<std::string>();
      std::cout << "\n";
    }
  }
  return 0;
}

// -------------------------------------------------------------- designs ----

int parse_two_q(const std::string& q) {
  // accepts "3", "5/2", "2.5"
  if (auto slash = q.find('/'); slash != std::string::npos) {
    int num = std::stoi(q.substr(0, slash));
    int den = std::stoi(q.substr(slash + 1));
    if (den != 2) throw std::invalid_argument("q must be a half-integer");
    return num;
  }
  if (q.find('.') != std::string::npos) {
    double v = std::stod(q);
    int two_q = static_cast<int>(std::lround(2 * v));
    if (std::abs(2 * v - two_q) > 1e-9)
      throw std::invalid_argument("q must be a half-integer");
    return two_q;
  }
  return 2 * std::stoi(q);
}

int run_designs(const Output& out, const std::string& q, int n, int m) {
  OJson rows = OJson::array();
  if (n > 0 && m > 0) {
    DesignParams p = general_params(n, m);
    OJson r{{"n", n},      {"m", m},      {"v", p.v},           {"b", p.b},
            {"r", p.r},    {"k", p.k},    {"lambda", p.lambda}, {"identities", p.identities_hold()}};
    rows.push_back(r);
  } else {
    std::vector<int> wanted;
    if (!q.empty())
      wanted.push_back(parse_two_q(q));
    else
      for (int two_q = 1; two_q <= 7; ++two_q) wanted.push_back(two_q);
    for (int two_q : wanted) {
      DesignParams p = qubit_design_params(two_q);
      OJson r;
      r["two_q"] = two_q;
      r["q"] = two_q % 2 == 0 ? std::to_string(two_q / 2)
                              : std::to_string(two_q) + "/2";
      r["v"] = p.v;
      r["b"] = p.b;
      r["r"] = p.r;
      r["k"] = p.k;
      r["lambda"] = p.lambda;
      for (const auto& row : tabulated_design_rows())
        if (row.two_q == two_q && row.b != p.b) {
          r["tabulated_b"] = row.b;
          r["discrepancy"] =
              "tabulated block count disagrees with the formula";
        }
      rows.push_back(r);
    }
  }

  if (out.format == "json") {
    OJson result;
    result["rows"] = rows;
    out.emit_json(result);
    return 0;
  }
  const char* sep = out.format == "csv" ? "," : "  ";
  std::cout << "q" << sep << "v" << sep << "b" << sep << "r" << sep << "note\n";
  for (const OJson& r : rows) {
    std::cout << (r.contains("q") ? r["q"].get<std::string>()
                                  : ("PG(" + std::to_string(n) + "," +
                                     std::to_string(m) + ")"))
              << sep << r["v"] << sep << r["b"] << sep << r["r"] << sep;
    if (r.contains("discrepancy"))
      std::cout << "formula " << r["b"] << " vs tabulated " << r["tabulated_b"];
    std::cout << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- kirkman ----

int run_kirkman(const Output& out) {
  Resolution r = kirkman_resolve();
  auto err = check_resolution_certificate(r);
  if (err) throw std::logic_error("certificate check failed: " + *err);

  if (out.format == "json") {
    OJson days = OJson::array();
    for (const auto& cls : r.classes) {
      OJson day = OJson::array();
      for (const Line& l : cls) {
        OJson triple = OJson::array();
        for (uint32_t p : l.pts) triple.push_back(p);
        day.push_back(triple);
      }
      days.push_back(day);
    }
    OJson result;
    result["classes"] = days;
    result["certificate"] = "valid";
    out.emit_json(result);
    return 0;
  }
  const char* sep = out.format == "csv" ? "," : "  ";
  int day = 0;
  for (const auto& cls : r.classes) {
    std::cout << "day " << ++day;
    for (const Line& l : cls)
      std::cout << sep << "(" << l.pts[0] << " " << l.pts[1] << " " << l.pts[2]
                << ")";
    std::cout << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- cayley ----

int run_cayley(const Output& out, const std::string& group) {
  CayleyTable t;
  if (group == "q8")
    t = q8_table();
  else if (group == "coq")
    t = coquaternion_table();
  else if (group == "cq16")
    t = complex_quaternion_table();
  else if (group == "oct")
    t = octonion_table();
  else
    throw std::invalid_argument("unknown group: " + group +
                                " (expected q8|coq|cq16|oct)");

  GroupReport rep = verify_group(t);
  if (out.format == "json") {
    OJson rows = OJson::array();
    for (int r = 0; r < t.size(); ++r) {
      OJson row = OJson::array();
      for (int c = 0; c < t.size(); ++c) row.push_back(t.unit_name(t.product(r, c)));
      rows.push_back(row);
    }
    OJson result;
    result["group"] = t.name;
    OJson elems = OJson::array();
    for (int i = 0; i < t.size(); ++i) elems.push_back(t.element_name(i));
    result["elements"] = elems;
    result["products"] = rows;
    result["negative_squares"] = negative_square_count(t);
    OJson axioms;
    axioms["closed"] = rep.closed;
    axioms["identity"] = rep.has_identity;
    axioms["inverses"] = rep.has_inverses;
    axioms["associative"] = rep.associative;
    if (!rep.associative)
      axioms["witness"] = {rep.associativity_witness[0], rep.associativity_witness[1],
                           rep.associativity_witness[2]};
    result["axioms"] = axioms;
    out.emit_json(result);
    return 0;
  }
  size_t w = 1;
  for (int r = 0; r < t.size(); ++r)
    for (int c = 0; c < t.size(); ++c)
      w = std::max(w, t.unit_name(t.product(r, c)).size());
  for (int r = 0; r < t.size(); ++r) {
    for (int c = 0; c < t.size(); ++c)
      std::cout << (out.format == "csv" ? (c ? "," : "") : " ")
                << (out.format == "csv"
                        ? t.unit_name(t.product(r, c))
                        : (std::string(w - t.unit_name(t.product(r, c)).size(),
                                       ' ') +
                           t.unit_name(t.product(r, c))));
    std::cout << "\n";
  }
  std::cout << "negative squares on the diagonal: " << negative_square_count(t)
            << "\n";
  std::cout << "axioms: closed=" << rep.closed << " identity=" << rep.has_identity
            << " inverses=" << rep.has_inverses
            << " associative=" << rep.associative;
  if (!rep.associative)
    std::cout << "  witness: (" << rep.associativity_witness[0] << ", "
              << rep.associativity_witness[1] << ", "
              << rep.associativity_witness[2] << ")";
  std::cout << "\n";
  return 0;
}

// --------------------------------------------------------------- evolve ----

int run_evolve(const Output& out, const std::string& spec_path, double T,
               int steps, bool report) {
  DriveSpec spec = load_drive_file(spec_path);
  if (steps == 0) steps = default_steps(T);

  RiccatiState z = spec.dimension() == 5 ? riccati_so5(spec, T, steps)
                                         : riccati_su4(spec, T, steps);
  Eigen::Matrix4cd U = dense_propagator(spec, T, steps);
  FactorDecomposition f = extract_factors(U);
  Eigen::Vector4cd z_extracted = z_block_components(f.z);

  OJson result;
  result["dimension"] = spec.dimension();
  result["T"] = T;
  result["steps"] = steps;
  auto cvec = [](const Eigen::VectorXcd& v) {
    OJson a = OJson::array();
    for (int i = 0; i < v.size(); ++i)
      a.push_back({{"re", v(i).real()}, {"im", v(i).imag()}});
    return a;
  };
  result["z"] = cvec(z.z);

  if (spec.dimension() == 5) {
    BlochVector m = stereographic(z);
    OJson ma = OJson::array();
    for (int i = 0; i < 5; ++i) ma.push_back(m.m(i).real());
    result["m"] = ma;
    BlochVector lin = bloch_evolve(spec, T, BlochVector::north_pole(5), steps);
    result["bloch_consistency_residual"] = (m.m - lin.m).norm();
  } else {
    BlochVector lin = bloch_evolve(spec, T, BlochVector::north_pole(6), steps);
    result["m"] = cvec(lin.m);
  }

  if (report) {
    OJson rep;
    rep["riccati_vs_extracted"] = (z.z - z_extracted).norm();
    rep["factor_reconstruction"] = (f.reconstruct() - U).norm();
    rep["unitarity"] =
        (U.adjoint() * U - Eigen::Matrix4cd::Identity()).norm();
    result["residuals"] = rep;
  }

  if (out.format == "json") {
    out.emit_json(result);
  } else {
    std::cout << "dimension " << spec.dimension() << ", T = " << T
              << ", steps = " << steps << "\n";
    std::cout << "z(T) =";
    for (int i = 0; i < 4; ++i)
      std::cout << "  " << z.z(i).real() << (z.z(i).imag() >= 0 ? "+" : "")
                << z.z(i).imag() << "i";
    std::cout << "\n";
    if (report) {
      std::cout << "riccati vs extracted: "
                << result["residuals"]["riccati_vs_extracted"].get<double>()
                << "\n";
      std::cout << "factor reconstruction: "
                << result["residuals"]["factor_reconstruction"].get<double>()
                << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- xstate ----

int run_xstate(const Output& out, const std::string& center,
               std::vector<double> g, bool with_discord) {
  int center_index = generator_basis().index_of_letters(center);
  std::array<double, 7> coeffs{};
  if (!g.empty()) {
    if (g.size() != 7)
      throw std::invalid_argument("--g needs exactly 7 coefficients");
    std::copy(g.begin(), g.end(), coeffs.begin());
  }
  Eigen::Matrix4cd rho = xstate_from_coeffs(center_index, coeffs);

  OJson result;
  result["center"] = center;
  OJson ops = OJson::array();
  for (const auto& p : xstate_operator_set(center_index)) ops.push_back(p.letters());
  result["operators"] = ops;
  result["g"] = coeffs;

  OJson mat = OJson::array();
  for (int r = 0; r < 4; ++r) {
    OJson row = OJson::array();
    for (int c = 0; c < 4; ++c)
      row.push_back({{"re", rho(r, c).real()}, {"im", rho(r, c).imag()}});
    mat.push_back(row);
  }
  result["rho"] = mat;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  OJson eigs = OJson::array();
  for (int i = 0; i < 4; ++i) eigs.push_back(es.eigenvalues()(i));
  result["eigenvalues"] = eigs;

  PptResult ppt = ppt_check(rho);
  result["ppt"] = {{"entangled", ppt.entangled},
                   {"min_eigenvalue", ppt.min_eigenvalue}};

  auto back = coeffs_from_state(rho, center_index);
  double resid = 0;
  for (int i = 0; i < 7; ++i) resid = std::max(resid, std::abs(back[i] - coeffs[i]));
  result["coefficient_roundtrip_residual"] = resid;

  if (with_discord) {
    DiscordResult d = discord(rho);
    result["discord"] = {{"value", d.discord},
                         {"theta", d.theta},
                         {"phi", d.phi},
                         {"mutual_information", d.mutual_information},
                         {"classical_correlation", d.classical_correlation}};
  }

  if (out.format == "json") {
    out.emit_json(result);
  } else {
    std::cout << "center " << center << "\n";
    std::cout << "eigenvalues:";
    for (int i = 0; i < 4; ++i) std::cout << " " << es.eigenvalues()(i);
    std::cout << "\nppt: " << (ppt.entangled ? "entangled" : "separable-compatible")
              << " (min eigenvalue " << ppt.min_eigenvalue << ")\n";
    if (with_discord)
      std::cout << "discord: " << result["discord"]["value"].get<double>()
                << " at theta = " << result["discord"]["theta"].get<double>()
                << "\n";
  }
  return 0;
}

// ---------------------------------------------------------- discord-scan ----

int run_discord_scan(const Output& out, int n, uint64_t seed, int threads) {
  ScanResult r = theta_extremum_scan(n, seed, threads);
  OJson result;
  result["n_samples"] = r.n_samples;
  result["seed"] = r.seed;
  result["count_at_half_pi"] = r.count_at_half_pi;
  result["fraction"] = r.fraction;
  result["worst_half_pi_gap"] = r.worst_half_pi_gap;
  result["theta_histogram"] = r.theta_histogram;
  if (out.format == "json") {
    out.emit_json(result);
  } else {
    std::cout << "n = " << r.n_samples << ", seed = " << r.seed << "\n"
              << "fraction with optimal theta at pi/2: " << r.fraction << "\n"
              << "worst discord excess when pinning theta = pi/2: "
              << r.worst_half_pi_gap << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit algebra, geometry and evolution toolkit"};
  app.require_subcommand(1);

  Output out;
  for (int i = 1; i < argc; ++i) out.flags.push_back(argv[i]);
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "15x15 commutator table");

  int size = 7;
  auto* subs = app.add_subcommand("subalgebras", "commutator-closed subsets");
  subs->add_option("--size", size, "subset size (7, 8 or 10)")
      ->capture_default_str();

  int dim = 3;
  auto* geom = app.add_subcommand("geometry", "PG(n,2) points, lines, doily");
  geom->add_option("--dim", dim, "projective dimension")->capture_default_str();

  std::string qarg;
  int dn = 0, dm = 0;
  auto* designs = app.add_subcommand("designs", "triple-system parameters");
  designs->add_option("--q", qarg, "qubit count (integer or half-integer)");
  designs->add_option("--n", dn, "projective dimension (with --m)");
  designs->add_option("--m", dm, "geometry order (with --n)");

  auto* kirkman = app.add_subcommand("kirkman", "resolve the 35 triples into 7 days");

  std::string group = "q8";
  auto* cayley = app.add_subcommand("cayley", "hypercomplex multiplication tables");
  cayley->add_option("--group", group, "q8|coq|cq16|oct")->capture_default_str();

  std::string spec_path;
  double T = 1.0;
  int steps = 0;
  bool report = false;
  auto* evolve = app.add_subcommand("evolve", "factorized unitary evolution");
  evolve->add_option("--spec", spec_path, "drive file (json)")->required();
  evolve->add_option("--T", T, "duration")->capture_default_str();
  evolve->add_option("--steps", steps, "integration steps (0 = default)");
  evolve->add_flag("--report", report, "include oracle residuals");

  std::string center = "ZZ";
  std::vector<double> gvals;
  bool with_discord = false;
  auto* xst = app.add_subcommand("xstate", "build and examine an X state");
  xst->add_option("--center", center, "center generator letters")
      ->capture_default_str();
  xst->add_option("--g", gvals, "seven expansion coefficients")->delimiter(',');
  xst->add_flag("--discord", with_discord, "also optimize the discord");

  int n_samples = 10000;
  uint64_t seed = default_seed();
  int threads = 1;
  auto* scan = app.add_subcommand("discord-scan", "optimal-theta statistics");
  scan->add_option("--n", n_samples, "number of sampled states")
      ->capture_default_str();
  scan->add_option("--seed", seed, "sampler seed");
  scan->add_option("--threads", threads, "worker threads")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table) {
      out.subcommand = "table";
      return run_table(out);
    }
    if (*subs) {
      out.subcommand = "subalgebras";
      return run_subalgebras(out, size);
    }
    if (*geom) {
      out.subcommand = "geometry";
      return run_geometry(out, dim);
    }
    if (*designs) {
      out.subcommand = "designs";
      return run_designs(out, qarg, dn, dm);
    }
    if (*kirkman) {
      out.subcommand = "kirkman";
      return run_kirkman(out);
    }
    if (*cayley) {
      out.subcommand = "cayley";
      return run_cayley(out, group);
    }
    if (*evolve) {
      out.subcommand = "evolve";
      return run_evolve(out, spec_path, T, steps, report);
    }
    if (*xst) {
      out.subcommand = "xstate";
      return run_xstate(out, center, gvals, with_discord);
    }
    if (*scan) {
      out.subcommand = "discord-scan";
      out.seed = seed;
      return run_discord_scan(out, n_samples, seed, threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
