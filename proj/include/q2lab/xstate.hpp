#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "q2lab/pauli.hpp"

namespace q2lab {

/// Construction produced a matrix with an eigenvalue below tolerance; the
/// offending spectrum rides along.
struct NotAStateError : std::runtime_error {
  explicit NotAStateError(const std::string& msg, Eigen::Vector4d eigs)
      : std::runtime_error(msg), eigenvalues(std::move(eigs)) {}
  Eigen::Vector4d eigenvalues;
};

struct PatternError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hermitian to 1e-12, unit trace to 1e-12, eigenvalues >= -1e-10.
bool is_valid_state(const Eigen::Matrix4cd& rho);
void require_valid_state(const Eigen::Matrix4cd& rho);

/// The center's fano7 operator set (center plus six commuting companions) as
/// unit-square letter strings, ordered by generator index.
std::vector<PauliString> xstate_operator_set(int center_index);

/// rho = (I + sum_i g_i X_i)/4 over the center's set; throws NotAStateError
/// when the result has an eigenvalue below -1e-10.
Eigen::Matrix4cd xstate_from_coeffs(int center_index, const std::array<double, 7>& g);

/// g_i = Tr[rho X_i]; inverse of xstate_from_coeffs on X-form states.
std::array<double, 7> coeffs_from_state(const Eigen::Matrix4cd& rho, int center_index);

/// Closed-form spectrum of the canonical X pattern (nonzero entries only on
/// the diagonal and anti-diagonal): the two 2x2 block spectra.  Throws
/// PatternError when rho is not of that sparsity pattern.
Eigen::Vector4d xstate_eigenvalues(const Eigen::Matrix4cd& rho);

/// Partial transpose over the second qubit (the minor tensor factor).
Eigen::Matrix4cd partial_transpose_second(const Eigen::Matrix4cd& rho);

struct PptResult {
  bool entangled = false;
  double min_eigenvalue = 0.0;
};

/// Two-qubit separability test: entangled iff the partial transpose has an
/// eigenvalue below -1e-10.
PptResult ppt_check(const Eigen::Matrix4cd& rho);

/// Wootters concurrence (used as an independent entanglement decision).
double concurrence(const Eigen::Matrix4cd& rho);

/// Rank-1 projector pair A_± = U Pi_± U^dagger for the Bloch direction
/// (theta, phi); the phase fiber is already removed by the two-angle form.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> measurement_frame(double theta,
                                                                double phi);

struct DiscordGrid {
  int n_theta = 64;   // over [0, pi/2]
  int n_phi = 128;    // over [0, 2 pi)
  int refine_rounds = 3;
  double refine_tol = 1e-7;
};

struct DiscordResult {
  double discord = 0.0;
  double theta = 0.0, phi = 0.0;       // optimal measurement angles
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double conditional_entropy = 0.0;    // at the optimum
};

/// Measurement on qubit A (the major tensor factor); entropies in bits.
/// Total mutual information minus the grid-maximized classical correlation.
DiscordResult discord(const Eigen::Matrix4cd& rho, const DiscordGrid& grid = {});

/// Deterministic splittable generator (splitmix64).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  static uint64_t derive(uint64_t seed, uint64_t index);

 private:
  uint64_t state_;
};

/// Seven expansion coefficients over a center's operator set.
struct XState {
  int center = 0;
  std::array<double, 7> g{};
  Eigen::Matrix4cd matrix() const;
};

/// Eigenvalues uniform on the probability simplex, sorted, the extreme pair
/// assigned to one block of the center's eigenbasis and the middle pair to
/// the other, then independent Haar block rotations with uniform off-diagonal
/// phases.  Always a valid state.
XState random_xstate(uint64_t seed, int center_index);

struct ScanResult {
  int n_samples = 0;
  uint64_t seed = 0;
  int count_at_half_pi = 0;       // optimal theta within 1e-3 of pi/2
  double fraction = 0.0;
  std::vector<int> theta_histogram;  // 64 bins over [0, pi/2]
  double worst_half_pi_gap = 0.0;    // max discord excess of forcing theta = pi/2
};

/// Samples ZZ-center X-states and scans the optimal measurement latitude.
/// Deterministic for a fixed seed, independent of the thread count.
ScanResult theta_extremum_scan(int n_samples, uint64_t seed, int threads = 1);

}  // namespace q2lab
