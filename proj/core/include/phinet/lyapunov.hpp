#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "phinet/netmodel.hpp"

namespace phinet {

struct SolverOptions {
  // Solvers refuse models whose spectral radius reaches 1 - critical_margin.
  double critical_margin = 1e-9;
};

struct StabilityReport {
  bool stable = false;
  double spectral_radius = 0.0;
};

enum class SolveMethod { kSymmetricClosedForm, kGeneralLinearSolve };

std::string_view to_string(SolveMethod method);

// Stationary covariance of x[t+1] = A x[t] + e[t]: the fixed point of
// S = A S A^T + Q. Means are zero by choice of coordinates, so no mean is
// carried.
struct StationaryCovariance {
  Eigen::MatrixXd sigma;
  // max |A S A^T + Q - S|
  double residual_norm = 0.0;
  SolveMethod method = SolveMethod::kGeneralLinearSolve;
};

// Max |eigenvalue| of a square matrix; uses the symmetric solver when `m` is
// exactly symmetric.
double spectral_radius(const Eigen::MatrixXd& m);

StabilityReport is_stable(const NetworkModel& model, const SolverOptions& options = {});

// Closed form S = (I - A^2)^{-1} sigma2 for symmetric A and noise sigma2 * I.
// Throws InvalidArgument when the model is not symmetric with isotropic noise,
// InstabilityError when it is not stable.
StationaryCovariance solve_symmetric(const NetworkModel& model, const SolverOptions& options = {});

// Solves (I - A kron A) vec(S) = vec(Q) densely. Any stable A and any positive
// definite Q. Memory grows as n^4, so this is meant for n up to ~60.
StationaryCovariance solve_general(const NetworkModel& model, const SolverOptions& options = {});

// solve_symmetric when its preconditions hold, solve_general otherwise.
StationaryCovariance solve_stationary(const NetworkModel& model, const SolverOptions& options = {});

double residual(const NetworkModel& model, const Eigen::MatrixXd& sigma);

// Acceptance bound on residual_norm for a solution `sigma`.
inline double residual_tolerance(const Eigen::MatrixXd& sigma) {
  return 1e-10 * (1.0 + sigma.cwiseAbs().maxCoeff());
}

}  // namespace phinet
