#include "q2lab/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace q2lab {

namespace {

constexpr double kChartBound = 1e6;

const Eigen::Matrix2cd& sigma(int i) {
  static const Eigen::Matrix2cd X = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd Y =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Eigen::Matrix2cd Z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (i) {
    case 1: return X;
    case 2: return Y;
    default: return Z;
  }
}

// fixed-step classical RK4 over a complex state vector
template <typename Rhs>
Eigen::VectorXcd rk4(const Rhs& f, Eigen::VectorXcd y, double T, int steps) {
  const double h = T / steps;
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * h;
    Eigen::VectorXcd k1 = f(t0, y);
    Eigen::VectorXcd k2 = f(t0 + h / 2, y + (h / 2) * k1);
    Eigen::VectorXcd k3 = f(t0 + h / 2, y + (h / 2) * k2);
    Eigen::VectorXcd k4 = f(t0 + h, y + h * k3);
    y += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!y.allFinite() || y.norm() > kChartBound)
      throw ChartError("Riccati coordinate left the chart (|z| > 1e6); integrate "
                       "a shorter interval and re-chart from there");
  }
  return y;
}

Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& M, double factor) {
  // exp(i * factor * M) for Hermitian M via spectral decomposition
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  Eigen::VectorXcd ph(M.rows());
  for (int i = 0; i < M.rows(); ++i)
    ph(i) = std::exp(Complex(0, factor * es.eigenvalues()(i)));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double DriveCoefficient::at(double t) const {
  double v = constant;
  for (const SinusoidTerm& s : sinusoids)
    v += s.amplitude * std::cos(s.angular_frequency * t + s.phase);
  return v;
}

DriveSpec::DriveSpec(int dimension) : dim_(dimension) {
  if (dimension != 5 && dimension != 6)
    throw std::domain_error("drive dimension must be 5 or 6");
  const int n = dim_ * (dim_ - 1) / 2;
  coef_.resize(n);
  set_.assign(n, 0);
}

int DriveSpec::slot(int mu, int nu) const {
  if (mu < 1 || mu > dim_ || nu < 1 || nu > dim_ || mu == nu)
    throw std::out_of_range("drive indices must satisfy 1 <= nu < mu <= dimension");
  if (mu < nu) std::swap(mu, nu);
  return (mu - 2) * (mu - 1) / 2 + (nu - 1);
}

void DriveSpec::set(int mu, int nu, DriveCoefficient c) {
  const bool swapped = mu < nu;
  const int s = slot(mu, nu);
  if (set_[s]) throw std::invalid_argument("duplicate drive coefficient");
  if (swapped) {
    c.constant = -c.constant;
    for (auto& term : c.sinusoids) term.amplitude = -term.amplitude;
  }
  coef_[s] = std::move(c);
  set_[s] = 1;
}

bool DriveSpec::is_set(int mu, int nu) const { return set_[slot(mu, nu)] != 0; }

const DriveCoefficient& DriveSpec::coefficient(int mu, int nu) const {
  if (mu < nu) throw std::invalid_argument("coefficient() expects mu > nu");
  return coef_[slot(mu, nu)];
}

double DriveSpec::F(int mu, int nu, double t) const {
  if (mu == nu) return 0.0;
  const double v = coef_[slot(mu, nu)].at(t);
  return mu > nu ? v : -v;
}

Eigen::MatrixXd DriveSpec::F_matrix(double t) const {
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int mu = 2; mu <= dim_; ++mu)
    for (int nu = 1; nu < mu; ++nu) {
      F(mu - 1, nu - 1) = this->F(mu, nu, t);
      F(nu - 1, mu - 1) = -F(mu - 1, nu - 1);
    }
  return F;
}

int default_steps(double T) {
  return std::max(1, static_cast<int>(std::ceil(4096.0 * std::abs(T))));
}

Eigen::Matrix4cd hamiltonian_from_F(const DriveSpec& spec, double t) {
  struct Term {
    int mu, nu;
    double sign;
    Eigen::Matrix4cd m;
  };
  static const std::vector<Term>& terms = [] {
    auto mat = [](const char* l) {
      return Eigen::Matrix4cd(PauliString::parse(l).to_matrix());
    };
    static std::vector<Term> v = {
        {2, 1, +1, mat("ZI")}, {3, 1, -1, mat("YI")}, {3, 2, +1, mat("XI")},
        {4, 1, -1, mat("XZ")}, {4, 2, -1, mat("YZ")}, {4, 3, -1, mat("ZZ")},
        {5, 1, +1, mat("XX")}, {5, 2, +1, mat("YX")}, {5, 3, +1, mat("ZX")},
        {5, 4, -1, mat("IY")},
        // dimension-6 extension
        {6, 5, +1, mat("IZ")}, {6, 4, +1, mat("IX")}, {6, 1, +1, mat("XY")},
        {6, 2, +1, mat("YY")}, {6, 3, +1, mat("ZY")},
    };
    return v;
  }();
  Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
  for (const Term& term : terms) {
    if (term.mu > spec.dimension()) continue;
    H += term.sign * spec.F(term.mu, term.nu, t) * term.m;
  }
  return H;
}

HamiltonianBlocks hamiltonian_blocks(const DriveSpec& spec, double t) {
  Eigen::Matrix4cd H = hamiltonian_from_F(spec, t);
  HamiltonianBlocks b;
  b.H1 = H.block<2, 2>(0, 0);
  b.H2 = H.block<2, 2>(2, 2);
  b.V = H.block<2, 2>(0, 2);
  return b;
}

Eigen::MatrixXcd dense_propagator(const std::function<Eigen::MatrixXcd(double)>& H,
                                  double T, int steps) {
  if (steps < 1) throw std::invalid_argument("dense_propagator needs steps >= 1");
  const double h = T / steps;
  // Gauss nodes and the commutator-free fourth-order weights
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0, c2 = 0.5 + std::sqrt(3.0) / 6.0;
  const double a1 = 0.25 + std::sqrt(3.0) / 6.0, a2 = 0.25 - std::sqrt(3.0) / 6.0;

  Eigen::MatrixXcd U;
  for (int k = 0; k < steps; ++k) {
    const double t0 = k * h;
    Eigen::MatrixXcd Ha = H(t0 + c1 * h);
    Eigen::MatrixXcd Hb = H(t0 + c2 * h);
    for (const auto* m : {&Ha, &Hb})
      if ((*m - m->adjoint()).norm() > 1e-9 * (1.0 + m->norm()))
        throw std::invalid_argument("sampled Hamiltonian is not Hermitian");
    if (k == 0) U = Eigen::MatrixXcd::Identity(Ha.rows(), Ha.cols());
    U = hermitian_exp(a2 * Ha + a1 * Hb, -h) * hermitian_exp(a1 * Ha + a2 * Hb, -h) * U;
  }
  if (!U.size()) throw std::invalid_argument("empty propagator");
  return U;
}

Eigen::Matrix4cd dense_propagator(const DriveSpec& spec, double T, int steps) {
  if (steps == 0) steps = default_steps(T);
  return dense_propagator(
      [&spec](double t) -> Eigen::MatrixXcd { return hamiltonian_from_F(spec, t); }, T,
      steps);
}

Eigen::Vector4d RiccatiState::real() const {
  if (z.imag().norm() > 1e-9)
    throw std::logic_error("Riccati coordinate is not real");
  return z.real();
}

namespace {

RiccatiState integrate_riccati(const DriveSpec& spec, double T, int steps,
                               bool full_su4) {
  if (steps == 0) steps = default_steps(T);
  const int dim = spec.dimension();
  auto rhs = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    Eigen::Vector4cd z = y;
    // plain (non-conjugated) square z_nu z_nu
    const Complex z2 = z(0) * z(0) + z(1) * z(1) + z(2) * z(2) + z(3) * z(3);
    Eigen::Vector4cd dz;
    Complex s{0, 0};
    for (int nu = 1; nu <= 4; ++nu) {
      Complex f5(spec.F(5, nu, t), 0);
      if (full_su4 && dim == 6) f5 += Complex(0, spec.F(6, nu, t));
      s += f5 * z(nu - 1);
    }
    for (int mu = 1; mu <= 4; ++mu) {
      Complex v = spec.F(5, mu, t) * (1.0 - z2);
      if (full_su4 && dim == 6) {
        v += Complex(0, -spec.F(6, mu, t)) * (1.0 + z2);
        v += Complex(0, -2.0 * spec.F(6, 5, t)) * z(mu - 1);
      }
      for (int nu = 1; nu <= 4; ++nu) v += 2.0 * spec.F(mu, nu, t) * z(nu - 1);
      v += 2.0 * s * z(mu - 1);
      dz(mu - 1) = v;
    }
    return dz;
  };
  RiccatiState out;
  out.z = rk4(rhs, Eigen::VectorXcd::Zero(4), T, steps);
  out.t = T;
  return out;
}

}  // namespace

RiccatiState riccati_so5(const DriveSpec& spec, double T, int steps) {
  if (spec.dimension() != 5)
    throw std::domain_error("riccati_so5 needs a dimension-5 drive");
  return integrate_riccati(spec, T, steps, false);
}

RiccatiState riccati_su4(const DriveSpec& spec, double T, int steps) {
  return integrate_riccati(spec, T, steps, true);
}

BlochVector BlochVector::north_pole(int dimension) {
  BlochVector m;
  m.m = Eigen::VectorXcd::Zero(dimension);
  m.m(dimension - 1) = 1.0;
  return m;
}

BlochVector stereographic(const RiccatiState& state) {
  Eigen::Vector4d z = state.real();
  const double z2 = z.squaredNorm();
  BlochVector m;
  m.m = Eigen::VectorXcd::Zero(5);
  for (int i = 0; i < 4; ++i) m.m(i) = -2.0 * z(i) / (1.0 + z2);
  m.m(4) = (1.0 - z2) / (1.0 + z2);
  return m;
}

Eigen::Vector4d stereographic_inverse(const BlochVector& m) {
  if (m.dimension() != 5) throw std::domain_error("inverse needs a 5-vector");
  if (m.m.imag().norm() > 1e-12) throw std::domain_error("inverse needs a real vector");
  const double m5 = m.m(4).real();
  if (m5 <= -1.0 + 1e-12)
    throw ChartError("stereographic pole m_5 = -1 has no finite preimage");
  Eigen::Vector4d z;
  for (int i = 0; i < 4; ++i) z(i) = -m.m(i).real() / (1.0 + m5);
  return z;
}

BlochVector bloch_evolve(const DriveSpec& spec, double T, const BlochVector& m0,
                         int steps) {
  if (m0.dimension() != spec.dimension())
    throw std::invalid_argument("Bloch vector dimension does not match the drive");
  if (steps == 0) steps = default_steps(T);
  auto rhs = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    return 2.0 * spec.F_matrix(t) * y;
  };
  BlochVector out;
  out.m = rk4(rhs, m0.m, T, steps);
  return out;
}

WeiNormanSU2 wei_norman_su2(const std::function<Eigen::Matrix2cd(double)>& H,
                            double T, int steps) {
  if (steps == 0) steps = default_steps(T);
  auto rhs = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    Eigen::Matrix2cd Ht = H(t);
    Ht -= Eigen::Matrix2cd::Identity() * (Ht.trace() / 2.0);  // phase filter
    const Complex hp = Ht(0, 1) / 2.0;
    const Complex hm = Ht(1, 0) / 2.0;
    const Complex hz = Ht(0, 0);
    const Complex z = y(0), v = y(1);
    const Complex i2(0, 2);
    Eigen::VectorXcd dy(3);
    dy(0) = -i2 * hp - i2 * hz * z + i2 * hm * z * z;
    dy(1) = i2 * v * (hz - 2.0 * hm * z) - i2 * hm;
    dy(2) = 2.0 * hz - 4.0 * hm * z;
    return dy;
  };
  Eigen::VectorXcd y = rk4(rhs, Eigen::VectorXcd::Zero(3), T, steps);
  WeiNormanSU2 out;
  out.z = y(0);
  out.w = std::conj(y(1));
  out.mu = y(2);
  return out;
}

Eigen::Matrix2cd wei_norman_reconstruct(const WeiNormanSU2& wn) {
  Eigen::Matrix2cd up = Eigen::Matrix2cd::Identity();
  up(0, 1) = wn.z;  // exp(z sigma_+/2) is I plus the nilpotent part
  Eigen::Matrix2cd lo = Eigen::Matrix2cd::Identity();
  lo(1, 0) = std::conj(wn.w);
  Eigen::Matrix2cd ph = Eigen::Matrix2cd::Zero();
  ph(0, 0) = std::exp(Complex(0, -0.5) * wn.mu);
  ph(1, 1) = std::exp(Complex(0, +0.5) * wn.mu);
  return up * lo * ph;
}

Eigen::Vector3d wei_norman_bloch(const Complex& z) {
  const double n = 1.0 + std::norm(z);
  return {-2.0 * z.real() / n, 2.0 * z.imag() / n, (1.0 - std::norm(z)) / n};
}

Eigen::Vector3d bloch_field(const Eigen::Matrix2cd& H) {
  Eigen::Matrix2cd Ht = H;
  Ht -= Eigen::Matrix2cd::Identity() * (Ht.trace() / 2.0);
  return {-Ht(0, 1).real(), Ht(0, 1).imag(), -Ht(0, 0).real()};
}

Eigen::Matrix4cd FactorDecomposition::reconstruct() const {
  Eigen::Matrix4cd up = Eigen::Matrix4cd::Identity();
  up.block<2, 2>(0, 2) = z;
  Eigen::Matrix4cd lo = Eigen::Matrix4cd::Identity();
  lo.block<2, 2>(2, 0) = w_dagger;
  Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
  d.block<2, 2>(0, 0) = C1;
  d.block<2, 2>(2, 2) = C2;
  return up * lo * d;
}

FactorDecomposition extract_factors(const Eigen::Matrix4cd& U) {
  FactorDecomposition f;
  const Eigen::Matrix2cd U11 = U.block<2, 2>(0, 0);
  const Eigen::Matrix2cd U12 = U.block<2, 2>(0, 2);
  const Eigen::Matrix2cd U21 = U.block<2, 2>(2, 0);
  const Eigen::Matrix2cd U22 = U.block<2, 2>(2, 2);
  if (std::abs(U22.determinant()) < 1e-12)
    throw ChartError("lower diagonal block is singular; the factorization chart "
                     "does not cover this unitary");
  f.C2 = U22;
  f.z = U12 * U22.inverse();
  f.C1 = U11 - f.z * U21;
  if (std::abs(f.C1.determinant()) < 1e-12)
    throw ChartError("upper effective block is singular");
  f.w_dagger = U21 * f.C1.inverse();
  return f;
}

Eigen::Matrix2cd w_dagger_from_z(const Eigen::Matrix2cd& z) {
  return -(Eigen::Matrix2cd::Identity() + z.adjoint() * z).inverse() * z.adjoint();
}

Eigen::Matrix4cd factorized_propagator(const DriveSpec& spec, double T, int steps) {
  if (steps == 0) steps = default_steps(T);
  const bool full = spec.dimension() == 6;
  // state layout: z (4), C1 (4), C2 (4) column-major
  auto rhs = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
    Eigen::Vector4cd z = y.segment<4>(0);
    Eigen::Matrix2cd C1, C2;
    C1 << y(4), y(6), y(5), y(7);
    C2 << y(8), y(10), y(9), y(11);

    const Complex z2 = z(0) * z(0) + z(1) * z(1) + z(2) * z(2) + z(3) * z(3);
    Complex s{0, 0};
    for (int nu = 1; nu <= 4; ++nu) {
      Complex f5(spec.F(5, nu, t), 0);
      if (full) f5 += Complex(0, spec.F(6, nu, t));
      s += f5 * z(nu - 1);
    }
    Eigen::Vector4cd dz;
    for (int mu = 1; mu <= 4; ++mu) {
      Complex v = spec.F(5, mu, t) * (1.0 - z2);
      if (full) {
        v += Complex(0, -spec.F(6, mu, t)) * (1.0 + z2);
        v += Complex(0, -2.0 * spec.F(6, 5, t)) * z(mu - 1);
      }
      for (int nu = 1; nu <= 4; ++nu) v += 2.0 * spec.F(mu, nu, t) * z(nu - 1);
      v += 2.0 * s * z(mu - 1);
      dz(mu - 1) = v;
    }

    HamiltonianBlocks b = hamiltonian_blocks(spec, t);
    Eigen::Matrix2cd zb = z_block_from_components(z);
    Eigen::Matrix2cd dC1 = Complex(0, -1) * (b.H1 - zb * b.V.adjoint()) * C1;
    Eigen::Matrix2cd dC2 = Complex(0, -1) * (b.H2 + b.V.adjoint() * zb) * C2;

    Eigen::VectorXcd dy(12);
    dy.segment<4>(0) = dz;
    dy(4) = dC1(0, 0);
    dy(5) = dC1(1, 0);
    dy(6) = dC1(0, 1);
    dy(7) = dC1(1, 1);
    dy(8) = dC2(0, 0);
    dy(9) = dC2(1, 0);
    dy(10) = dC2(0, 1);
    dy(11) = dC2(1, 1);
    return dy;
  };

  Eigen::VectorXcd y0 = Eigen::VectorXcd::Zero(12);
  y0(4) = y0(7) = y0(8) = y0(11) = 1.0;  // C1 = C2 = I
  Eigen::VectorXcd y = rk4(rhs, y0, T, steps);

  FactorDecomposition f;
  f.z = z_block_from_components(y.segment<4>(0));
  f.w_dagger = w_dagger_from_z(f.z);
  f.C1 << y(4), y(6), y(5), y(7);
  f.C2 << y(8), y(10), y(9), y(11);
  return f.reconstruct();
}

Eigen::Vector4cd z_block_components(const Eigen::Matrix2cd& zb) {
  Eigen::Vector4cd z;
  z(3) = zb.trace() / 2.0;
  for (int i = 1; i <= 3; ++i)
    z(i - 1) = (zb * sigma(i)).trace() / Complex(0, -2);
  return z;
}

Eigen::Matrix2cd z_block_from_components(const Eigen::Vector4cd& z) {
  Eigen::Matrix2cd zb = z(3) * Eigen::Matrix2cd::Identity();
  for (int i = 1; i <= 3; ++i) zb += Complex(0, -1) * z(i - 1) * sigma(i);
  return zb;
}

}  // namespace q2lab
