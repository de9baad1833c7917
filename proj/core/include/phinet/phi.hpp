#pragma once

#include <vector>

#include <Eigen/Dense>

#include "phinet/lyapunov.hpp"
#include "phinet/netmodel.hpp"

namespace phinet {

// Conditional covariances of the initial state given the next one, for the
// whole system and for each single-node part.
struct ConditionalCovariance {
  Eigen::MatrixXd whole;      // Sigma(X0 | X1)
  std::vector<double> parts;  // Sigma(M0^k | M1^k), one per node
};

struct PhiResult {
  double phi_nats = 0.0;
  double coupling = 0.0;
  double log_det_whole = 0.0;
  // ln of each part's conditional variance.
  std::vector<double> log_det_parts;
};

// ln det of a symmetric positive definite matrix. Uses Cholesky and falls
// back to the eigenvalue sum when it fails; an eigenvalue below -1e-10 (or any
// non-positive one) raises DegeneracyError.
double log_det_spd(const Eigen::MatrixXd& m);

// Sigma(X0|X1) = S - S A^T S^{-1} A S with S = Sigma(X0) = Sigma(X1).
Eigen::MatrixXd conditional_covariance_whole(const NetworkModel& model,
                                             const Eigen::MatrixXd& sigma);

// Node-restricted version: S_kk (1 - A_kk^2). Equals S_kk without self-loops.
double conditional_covariance_part(const NetworkModel& model, const Eigen::MatrixXd& sigma, int k);

ConditionalCovariance conditional_covariances(const NetworkModel& model,
                                              const Eigen::MatrixXd& sigma);

// Sigma(X|Y) = Sigma(X) - Sigma(X,Y) Sigma(Y)^{-1} Sigma(X,Y)^T, symmetrized.
Eigen::MatrixXd gaussian_conditional_covariance(const Eigen::MatrixXd& sigma_x,
                                                const Eigen::MatrixXd& cross_xy,
                                                const Eigen::MatrixXd& sigma_y);

// Differential entropy of an n-dimensional Gaussian with covariance `cov`,
// in nats: n/2 ln(2 pi e) + 1/2 ln det cov.
double conditional_entropy(const Eigen::MatrixXd& cov);
double conditional_entropy(double variance);

// Assembles phi = 1/2 [sum_k ln part_k - ln det whole].
PhiResult assemble_phi(const ConditionalCovariance& cond, double coupling);

// Averaged integrated information of one transition X0 -> X1 at stationarity,
// atomic partition, in nats.
PhiResult integrated_information(const NetworkModel& model, const SolverOptions& options = {});

// Shortcut for symmetric A, isotropic noise and no self-loops, where
// det Sigma(X0|X1) = sigma2^n and phi = 1/2 sum_k ln(S_kk / sigma2).
PhiResult phi_symmetric_fast(const NetworkModel& model, const SolverOptions& options = {});

}  // namespace phinet
