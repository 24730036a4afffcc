#include "q2lab/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace q2lab {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kEigTol = 1e-10;

Eigen::Vector4d spectrum(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  return es.eigenvalues();
}

double entropy_bits(const Eigen::VectorXd& probs) {
  double s = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    const double p = probs(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

// eigenvalues of a Hermitian 2x2 given diagonal (a, d) and off-diagonal b
inline void eig2(double a, double d, Complex b, double& lo, double& hi) {
  const double mid = (a + d) / 2.0;
  const double disc = std::sqrt(std::max((a - d) * (a - d) / 4.0 + std::norm(b), 0.0));
  lo = mid - disc;
  hi = mid + disc;
}

double entropy2_bits(double a, double d, Complex b) {
  double lo, hi;
  eig2(a, d, b, lo, hi);
  double s = 0.0;
  for (double p : {lo, hi})
    if (p > 1e-15) s -= p * std::log2(p);
  return s;
}

}  // namespace

bool is_valid_state(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).norm() > kHermTol) return false;
  if (std::abs(rho.trace() - Complex(1, 0)) > kHermTol) return false;
  return spectrum(rho).minCoeff() >= -kEigTol;
}

void require_valid_state(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).norm() > kHermTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1, 0)) > kHermTol)
    throw std::invalid_argument("density matrix trace differs from 1");
  Eigen::Vector4d eigs = spectrum(rho);
  if (eigs.minCoeff() < -kEigTol)
    throw NotAStateError("matrix has a negative eigenvalue", eigs);
}

std::vector<PauliString> xstate_operator_set(int center_index) {
  const GeneratorBasis& basis = generator_basis();
  std::vector<PauliString> out;
  for (int g = GeneratorBasis::kFirstIndex; g <= GeneratorBasis::kLastIndex; ++g)
    if (g == center_index || !basis.commutator(center_index, g))
      out.push_back(basis.by_index(g).string);
  return out;
}

Eigen::Matrix4cd xstate_from_coeffs(int center_index, const std::array<double, 7>& g) {
  auto ops = xstate_operator_set(center_index);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
  for (size_t i = 0; i < ops.size(); ++i)
    rho += g[i] * Eigen::Matrix4cd(ops[i].to_matrix());
  rho /= 4.0;
  Eigen::Vector4d eigs = spectrum(rho);
  if (eigs.minCoeff() < -kEigTol)
    throw NotAStateError("coefficients do not describe a state", eigs);
  return rho;
}

std::array<double, 7> coeffs_from_state(const Eigen::Matrix4cd& rho, int center_index) {
  auto ops = xstate_operator_set(center_index);
  std::array<double, 7> g{};
  for (size_t i = 0; i < ops.size(); ++i)
    g[i] = (rho * Eigen::Matrix4cd(ops[i].to_matrix())).trace().real();
  return g;
}

Eigen::Vector4d xstate_eigenvalues(const Eigen::Matrix4cd& rho) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c && r + c != 3 && std::abs(rho(r, c)) > 1e-12)
        throw PatternError("matrix is not of the diagonal/anti-diagonal pattern");
  double a_lo, a_hi, b_lo, b_hi;
  eig2(rho(0, 0).real(), rho(3, 3).real(), rho(0, 3), a_lo, a_hi);
  eig2(rho(1, 1).real(), rho(2, 2).real(), rho(1, 2), b_lo, b_hi);
  Eigen::Vector4d out;
  out << a_hi, a_lo, b_hi, b_lo;
  return out;
}

Eigen::Matrix4cd partial_transpose_second(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          pt(2 * a + i, 2 * b + j) = rho(2 * a + j, 2 * b + i);
  return pt;
}

PptResult ppt_check(const Eigen::Matrix4cd& rho) {
  PptResult r;
  r.min_eigenvalue = spectrum(partial_transpose_second(rho)).minCoeff();
  r.entangled = r.min_eigenvalue < -kEigTol;
  return r;
}

double concurrence(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd yy = PauliString::parse("YY").to_matrix();
  Eigen::Matrix4cd R = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(R);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> measurement_frame(double theta,
                                                                double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  Eigen::Matrix2cd n;
  n << nz, Complex(nx, -ny), Complex(nx, ny), -nz;
  Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
  return {(I + n) / 2.0, (I - n) / 2.0};
}

namespace {

// measurement on the major factor: conditional entropy over outcomes as a
// function of the Bloch direction, with the 2x2 blocks precomputed
struct ConditionalEntropy {
  Eigen::Matrix2cd B00, B01, B10, B11;

  explicit ConditionalEntropy(const Eigen::Matrix4cd& rho)
      : B00(rho.block<2, 2>(0, 0)),
        B01(rho.block<2, 2>(0, 2)),
        B10(rho.block<2, 2>(2, 0)),
        B11(rho.block<2, 2>(2, 2)) {}

  double operator()(double theta, double phi) const {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    double total = 0.0;
    for (int s : {+1, -1}) {
      const double p00 = (1.0 + s * nz) / 2.0;
      const double p11 = (1.0 - s * nz) / 2.0;
      const Complex p01 = Complex(s * nx, -s * ny) / 2.0;
      const Complex p10 = std::conj(p01);
      // Tr_A[(P x I) rho (P x I)] = sum_{ab} P_{ba} Block_{ab}
      Eigen::Matrix2cd M =
          p00 * B00 + p01 * B10 + p10 * B01 + p11 * B11;
      const double p = std::max(M.trace().real(), 1e-15);
      total += p * entropy2_bits(M(0, 0).real() / p, M(1, 1).real() / p, M(0, 1) / p);
    }
    return total;
  }
};

double golden_min(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

}  // namespace

DiscordResult discord(const Eigen::Matrix4cd& rho, const DiscordGrid& grid) {
  require_valid_state(rho);
  const ConditionalEntropy cond(rho);

  const double half_pi = std::numbers::pi / 2.0;
  const double dth = half_pi / (grid.n_theta - 1);
  const double dph = 2.0 * std::numbers::pi / grid.n_phi;

  double best = std::numeric_limits<double>::infinity();
  double bth = 0.0, bph = 0.0;
  for (int i = 0; i < grid.n_theta; ++i) {
    const double th = i * dth;
    for (int j = 0; j < grid.n_phi; ++j) {
      const double ph = j * dph;
      const double v = cond(th, ph);
      if (v < best) {
        best = v;
        bth = th;
        bph = ph;
      }
    }
  }
  for (int round = 0; round < grid.refine_rounds; ++round) {
    bth = golden_min([&](double t) { return cond(t, bph); },
                     std::max(0.0, bth - dth), std::min(half_pi, bth + dth),
                     grid.refine_tol);
    bph = golden_min([&](double p) { return cond(bth, p); }, bph - dph, bph + dph,
                     grid.refine_tol);
    best = cond(bth, bph);
  }

  // subsystem entropies: A = major factor, B = minor factor
  Eigen::Matrix2cd rhoA, rhoB;
  rhoA << rho.block<2, 2>(0, 0).trace(), rho.block<2, 2>(0, 2).trace(),
      rho.block<2, 2>(2, 0).trace(), rho.block<2, 2>(2, 2).trace();
  rhoB = rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2);

  const double SA = entropy2_bits(rhoA(0, 0).real(), rhoA(1, 1).real(), rhoA(0, 1));
  const double SB = entropy2_bits(rhoB(0, 0).real(), rhoB(1, 1).real(), rhoB(0, 1));
  Eigen::Vector4d eigs = spectrum(rho);
  const double SAB = entropy_bits(eigs);

  DiscordResult out;
  out.theta = bth;
  out.phi = bph;
  out.conditional_entropy = best;
  out.mutual_information = SA + SB - SAB;
  out.classical_correlation = SB - best;
  out.discord = out.mutual_information - out.classical_correlation;
  return out;
}

uint64_t SplitMix64::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

uint64_t SplitMix64::derive(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return g.next();
}

Eigen::Matrix4cd XState::matrix() const { return xstate_from_coeffs(center, g); }

namespace {

// deterministic orthonormal bases of the ±1 eigenspaces of the center string
std::pair<Eigen::Matrix<Complex, 4, 2>, Eigen::Matrix<Complex, 4, 2>>
center_eigenbases(const PauliString& center) {
  Eigen::Matrix4cd C = center.to_matrix();
  std::pair<Eigen::Matrix<Complex, 4, 2>, Eigen::Matrix<Complex, 4, 2>> out;
  for (int sign : {+1, -1}) {
    Eigen::Matrix4cd P =
        (Eigen::Matrix4cd::Identity() + static_cast<double>(sign) * C) / 2.0;
    auto& basis = sign > 0 ? out.first : out.second;
    int found = 0;
    for (int col = 0; col < 4 && found < 2; ++col) {
      Eigen::Vector4cd v = P.col(col);
      for (int k = 0; k < found; ++k) v -= basis.col(k).dot(v) * basis.col(k);
      if (v.norm() > 1e-8) basis.col(found++) = v / v.norm();
    }
  }
  return out;
}

Eigen::Matrix2cd rotated_block(double l1, double l2, SplitMix64& rng) {
  const double alpha = 0.5 * std::acos(rng.uniform(-1.0, 1.0));
  const double beta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  Eigen::Matrix2cd V;
  const Complex e(std::cos(beta), std::sin(beta));
  V << std::cos(alpha), -std::sin(alpha) * std::conj(e), std::sin(alpha) * e,
      std::cos(alpha);
  Eigen::Vector2cd lam(l1, l2);
  return V * lam.asDiagonal() * V.adjoint();
}

}  // namespace

XState random_xstate(uint64_t seed, int center_index) {
  SplitMix64 rng(seed);
  // uniform simplex point, sorted descending
  std::array<double, 4> lam{};
  double total = 0.0;
  for (double& l : lam) {
    l = -std::log(std::max(rng.uniform(), 1e-300));
    total += l;
  }
  for (double& l : lam) l /= total;
  std::sort(lam.begin(), lam.end(), std::greater<>());

  // extreme pair in one block (coin-flipped so the mean state is I/4),
  // middle pair in the other; the flip is a local unitary relabelling and
  // leaves the measurement statistics unchanged
  const bool extremes_first = rng.uniform() < 0.5;
  Eigen::Matrix2cd extreme = rotated_block(lam[0], lam[3], rng);
  Eigen::Matrix2cd middle = rotated_block(lam[1], lam[2], rng);
  const Eigen::Matrix2cd& blockA = extremes_first ? extreme : middle;
  const Eigen::Matrix2cd& blockB = extremes_first ? middle : extreme;

  const PauliString center = generator_basis().by_index(center_index).string;
  auto [basisP, basisM] = center_eigenbases(center);

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      rho += blockA(i, j) * (basisP.col(i) * basisP.col(j).adjoint());
      rho += blockB(i, j) * (basisM.col(i) * basisM.col(j).adjoint());
    }

  XState out;
  out.center = center_index;
  out.g = coeffs_from_state(rho, center_index);
  return out;
}

ScanResult theta_extremum_scan(int n_samples, uint64_t seed, int threads) {
  if (n_samples < 1) throw std::domain_error("scan needs at least one sample");
  threads = std::max(1, threads);
  const double half_pi = std::numbers::pi / 2.0;
  const int zz = generator_basis().index_of_letters("ZZ");

  std::vector<double> thetas(n_samples);
  std::vector<double> gaps(n_samples);
  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      XState xs = random_xstate(SplitMix64::derive(seed, i), zz);
      Eigen::Matrix4cd rho = xs.matrix();
      DiscordResult d = discord(rho);
      thetas[i] = d.theta;
      // excess discord when the latitude is pinned to pi/2
      ConditionalEntropy cond(rho);
      double pinned = cond(half_pi, d.phi);
      const int nphi = 128;
      for (int j = 0; j < nphi; ++j)
        pinned = std::min(pinned, cond(half_pi, j * 2.0 * std::numbers::pi / nphi));
      gaps[i] = std::max(0.0, pinned - d.conditional_entropy);
    }
  };
  if (threads == 1) {
    worker(0, n_samples);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (n_samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int b = t * chunk, e = std::min(n_samples, (t + 1) * chunk);
      if (b < e) pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }

  ScanResult out;
  out.n_samples = n_samples;
  out.seed = seed;
  out.theta_histogram.assign(64, 0);
  for (int i = 0; i < n_samples; ++i) {
    if (std::abs(thetas[i] - half_pi) <= 1e-3) ++out.count_at_half_pi;
    int bin = std::min(63, static_cast<int>(thetas[i] / half_pi * 64));
    out.theta_histogram[bin]++;
    out.worst_half_pi_gap = std::max(out.worst_half_pi_gap, gaps[i]);
  }
  out.fraction = static_cast<double>(out.count_at_half_pi) / n_samples;
  return out;
}

}  // namespace q2lab
