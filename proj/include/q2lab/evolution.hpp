#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "q2lab/pauli.hpp"

namespace q2lab {

/// Coordinate singularity: Riccati blow-up or a non-invertible lower
/// diagonal block during factor extraction.
struct ChartError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One sinusoid contribution amplitude * cos(angular_frequency * t + phase).
struct SinusoidTerm {
  double amplitude = 0.0;
  double angular_frequency = 0.0;
  double phase = 0.0;
};

/// A drive coefficient F_{mu nu}(t) = constant + sum of sinusoids.
struct DriveCoefficient {
  double constant = 0.0;
  std::vector<SinusoidTerm> sinusoids;
  double at(double t) const;
};

/// Antisymmetric time-dependent coefficient matrix F_{mu nu}(t) in angular
/// frequency units; dimension 5 (ten coefficients) or 6 (fifteen).
class DriveSpec {
 public:
  explicit DriveSpec(int dimension);

  int dimension() const { return dim_; }

  /// Sets F_{mu nu} for 1 <= nu < mu <= dimension (the antisymmetric partner
  /// is implied).  Re-setting a pair or passing mu == nu throws.
  void set(int mu, int nu, DriveCoefficient c);
  bool is_set(int mu, int nu) const;

  /// F_{mu nu}(t), antisymmetric, 1-based indices; unset entries are zero.
  double F(int mu, int nu, double t) const;

  /// Stored coefficient for mu > nu (zero-valued default when unset).
  const DriveCoefficient& coefficient(int mu, int nu) const;

  /// Dense antisymmetric matrix at time t.
  Eigen::MatrixXd F_matrix(double t) const;

 private:
  int dim_;
  std::vector<DriveCoefficient> coef_;  // upper-triangle storage
  std::vector<uint8_t> set_;
  int slot(int mu, int nu) const;
};

/// Default integration density: fixed-step 4th order, 4096 steps per unit time.
int default_steps(double T);

/// Drive Hamiltonian as a dense 4x4 Hermitian traceless matrix.  Dimension 5
/// gives the ten-term Spin(5) form; dimension 6 adds the F_{65}, F_{64} and
/// F_{6i} terms.
Eigen::Matrix4cd hamiltonian_from_F(const DriveSpec& spec, double t);

/// The same Hamiltonian in 2x2 blocks: H = [[H1, V], [V^dagger, H2]].
struct HamiltonianBlocks {
  Eigen::Matrix2cd H1, H2, V;
};
HamiltonianBlocks hamiltonian_blocks(const DriveSpec& spec, double t);

/// Time-ordered product of per-step exponentials sampled at the two Gauss
/// nodes of each step (commutator-free 4th-order scheme); exactly unitary up
/// to roundoff.  Throws std::invalid_argument when a sampled H is not
/// Hermitian.
Eigen::MatrixXcd dense_propagator(const std::function<Eigen::MatrixXcd(double)>& H,
                                  double T, int steps);

/// Convenience overload driving hamiltonian_from_F.
Eigen::Matrix4cd dense_propagator(const DriveSpec& spec, double T, int steps = 0);

/// Riccati coordinate at time t.
struct RiccatiState {
  Eigen::Vector4cd z = Eigen::Vector4cd::Zero();
  double t = 0.0;
  bool chart_valid = true;
  Eigen::Vector4d real() const;  // throws if z has imaginary parts
};

/// Integrates dz_mu/dt = F_{5mu}(1-z^2) + 2F_{mu nu}z_nu + 2F_{5nu}z_nu z_mu
/// from z(0) = 0; the solution stays real.  Throws ChartError on blow-up
/// (|z| beyond the chart bound) with advice to shorten the interval.
RiccatiState riccati_so5(const DriveSpec& spec, double T, int steps = 0);

/// Full four-complex-z flow (adds the -i F_{6mu}(1+z^2), mixed
/// F_{5nu}+iF_{6nu} and -2i F_{65} z_mu terms); reduces exactly to the
/// five-dimensional flow when every F_{6,*} vanishes.
RiccatiState riccati_su4(const DriveSpec& spec, double T, int steps = 0);

/// Bloch-type vector; real entries for dimension 5, complex for dimension 6.
struct BlochVector {
  Eigen::VectorXcd m;
  int dimension() const { return static_cast<int>(m.size()); }
  static BlochVector north_pole(int dimension);  // (0,...,0,1)
};

/// Inverse stereographic projection of a real 4-vector z onto the unit
/// 4-sphere: m_mu = -2 z_mu / (1+z^2), m_5 = (1-z^2)/(1+z^2).
BlochVector stereographic(const RiccatiState& z);

/// Closed-form inverse, valid for m_5 > -1.
Eigen::Vector4d stereographic_inverse(const BlochVector& m);

/// Integrates the linear form dm_mu/dt = 2 F_{mu nu} m_nu.
BlochVector bloch_evolve(const DriveSpec& spec, double T, const BlochVector& m0,
                         int steps = 0);

/// Scalar coordinates of the three-factor product
/// U = exp(z sigma_+/2) exp(conj(w) sigma_-/2) exp(-i mu sigma_z/2).
struct WeiNormanSU2 {
  Complex z{0, 0}, w{0, 0}, mu{0, 0};
};

/// Integrates the scalar system for a traceless 2x2 Hermitian drive
/// (a nonzero trace is filtered out before integration).
WeiNormanSU2 wei_norman_su2(const std::function<Eigen::Matrix2cd(double)>& H,
                            double T, int steps = 0);

/// Rebuilds the 2x2 product from the scalar coordinates.
Eigen::Matrix2cd wei_norman_reconstruct(const WeiNormanSU2& wn);

/// Unit Bloch vector attached to the Wei-Norman z:
/// m = (-2 Re z, 2 Im z, 1-|z|^2)/(1+|z|^2).
Eigen::Vector3d wei_norman_bloch(const Complex& z);

/// Field vector of the convention H = -B.sigma, so that the mapped Bloch
/// vector obeys dm/dt = -2 B x m.
Eigen::Vector3d bloch_field(const Eigen::Matrix2cd& H);

/// Exact block factorization of a 4x4 unitary:
/// U = (I + upper z)(I + lower w^dagger) diag(C1, C2) with
/// C2 = U22, z = U12 U22^{-1}, C1 = U11 - z U21, w^dagger = U21 C1^{-1}.
struct FactorDecomposition {
  Eigen::Matrix2cd z, w_dagger, C1, C2;
  Eigen::Matrix4cd reconstruct() const;
};

/// Throws ChartError when U22 (or the derived C1) is singular.
FactorDecomposition extract_factors(const Eigen::Matrix4cd& U);

/// For unitary problems the lower factor is a closed function of the upper:
/// w^dagger = -(I + z^dagger z)^{-1} z^dagger.
Eigen::Matrix2cd w_dagger_from_z(const Eigen::Matrix2cd& z);

/// Propagator rebuilt entirely from the coupled factor ODEs: the Riccati
/// flow for z, the unitarity relation for w, and the block equations
/// i C1' = (H1 - z V^dagger) C1, i C2' = (H2 + V^dagger z) C2.  Independent
/// of the time-ordered dense route.
Eigen::Matrix4cd factorized_propagator(const DriveSpec& spec, double T,
                                       int steps = 0);

/// Components (z_1, z_2, z_3, z_4) of a block of the form
/// z = z_4 I - i z_i sigma_i (any 2x2 block decomposes this way).
Eigen::Vector4cd z_block_components(const Eigen::Matrix2cd& zb);
Eigen::Matrix2cd z_block_from_components(const Eigen::Vector4cd& z);

}  // namespace q2lab
