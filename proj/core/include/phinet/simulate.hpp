#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string_view>

#include <Eigen/Dense>

#include "phinet/netmodel.hpp"
#include "phinet/phi.hpp"

namespace phinet {

// Identifier of the random stream: 64-bit Mersenne Twister feeding the
// Marsaglia polar method for standard normals, uniforms built from the top
// 53 bits of each draw. Changing either part bumps the version.
inline constexpr std::string_view kNormalAlgorithm = "mt19937_64/marsaglia-polar/v1";

// Seed of the i-th independent stream derived from `base` (splitmix64 of
// base + i * golden gamma).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Standard normal generator with a pinned algorithm (see kNormalAlgorithm).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);
  double operator()();

 private:
  double uniform();  // in (-1, 1)

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

struct Trajectory {
  Eigen::MatrixXd series;  // T x n, row t is x[t]
  std::uint64_t seed = 0;
  int burn_in = 0;

  int steps() const { return static_cast<int>(series.rows()); }
};

// max(1000, ceil(20 / (1 - spectral_radius))).
int default_burn_in(const NetworkModel& model);

// x[0] = 0, x[t+1] = A x[t] + e[t], e[t] = L z[t] with Q = L L^T. Rows before
// `burn_in` are kept in the series but ignored by the estimators.
Trajectory sample_trajectory(const NetworkModel& model, int steps, std::uint64_t seed,
                             std::optional<int> burn_in = std::nullopt);

// Sample covariance of the post-burn-in states (mean removed), symmetrized.
// Requires at least 10 n retained states.
Eigen::MatrixXd empirical_covariance(const Trajectory& traj);

// Sample estimate of Cov(x[t], x[t+1]) over post-burn-in pairs.
Eigen::MatrixXd empirical_lag1_covariance(const Trajectory& traj);

struct EmpiricalPhi {
  PhiResult result;
  // Heuristic size of the finite-sample upward bias of the estimate, n^2 / N
  // for N retained states.
  double bias_bound = 0.0;
  std::size_t samples = 0;
};

// Phi from estimated covariances: the whole-system term uses the estimated
// Sigma(X0) and lag-one cross covariance; the parts restrict the estimated
// covariance and the model's diagonal weights.
EmpiricalPhi empirical_phi(const Trajectory& traj, const NetworkModel& model);

// CSV dump: header t,x_0,...,x_{n-1}; one row per step.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace phinet
