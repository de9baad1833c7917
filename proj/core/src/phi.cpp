#include "phinet/phi.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "phinet/errors.hpp"

namespace phinet {

namespace {

constexpr double kNegativeEigenTolerance = 1e-10;

const double kHalfLog2PiE = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e);

}  // namespace

double log_det_spd(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("log_det_spd needs a square matrix");
  if (m.size() == 0) return 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) {
    return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  if (ev.minCoeff() < -kNegativeEigenTolerance) {
    throw DegeneracyError("matrix has negative eigenvalue " + std::to_string(ev.minCoeff()));
  }
  if (!(ev.minCoeff() > 0.0)) throw DegeneracyError("matrix is singular");
  return ev.array().log().sum();
}

Eigen::MatrixXd gaussian_conditional_covariance(const Eigen::MatrixXd& sigma_x,
                                                const Eigen::MatrixXd& cross_xy,
                                                const Eigen::MatrixXd& sigma_y) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma_y);
  if (llt.info() != Eigen::Success) {
    throw CriticalityError("conditioning covariance is singular or not positive definite");
  }
  Eigen::MatrixXd out = sigma_x - cross_xy * llt.solve(cross_xy.transpose());
  out = 0.5 * (out + out.transpose()).eval();

  Eigen::LLT<Eigen::MatrixXd> check(out);
  if (check.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out, Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() > -kNegativeEigenTolerance)) {
      throw DegeneracyError("conditional covariance lost positive definiteness");
    }
  }
  return out;
}

Eigen::MatrixXd conditional_covariance_whole(const NetworkModel& model,
                                             const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != model.size() || sigma.cols() != model.size()) {
    throw InvalidArgument("covariance and model sizes differ");
  }
  // Sigma(X0, X1) = Sigma(X0) A^T.
  const Eigen::MatrixXd cross = sigma * model.effective().transpose();
  return gaussian_conditional_covariance(sigma, cross, sigma);
}

double conditional_covariance_part(const NetworkModel& model, const Eigen::MatrixXd& sigma, int k) {
  if (k < 0 || k >= model.size()) {
    throw InvalidArgument("node index " + std::to_string(k) + " out of range");
  }
  const double s = sigma(k, k);
  const double a = model.coupling() * model.adjacency().weights()(k, k);
  return s - s * a * (1.0 / s) * a * s;
}

ConditionalCovariance conditional_covariances(const NetworkModel& model,
                                              const Eigen::MatrixXd& sigma) {
  ConditionalCovariance out;
  out.whole = conditional_covariance_whole(model, sigma);
  out.parts.reserve(model.size());
  for (int k = 0; k < model.size(); ++k) {
    out.parts.push_back(conditional_covariance_part(model, sigma, k));
  }
  return out;
}

double conditional_entropy(const Eigen::MatrixXd& cov) {
  return static_cast<double>(cov.rows()) * kHalfLog2PiE + 0.5 * log_det_spd(cov);
}

double conditional_entropy(double variance) {
  if (!(variance > 0.0)) throw DegeneracyError("variance must be positive");
  return kHalfLog2PiE + 0.5 * std::log(variance);
}

PhiResult assemble_phi(const ConditionalCovariance& cond, double coupling) {
  PhiResult r;
  r.coupling = coupling;
  r.log_det_whole = log_det_spd(cond.whole);
  r.log_det_parts.reserve(cond.parts.size());
  for (double p : cond.parts) {
    if (!(p > 0.0)) throw DegeneracyError("part conditional variance is not positive");
    r.log_det_parts.push_back(std::log(p));
  }
  const double parts = std::accumulate(r.log_det_parts.begin(), r.log_det_parts.end(), 0.0);
  r.phi_nats = 0.5 * (parts - r.log_det_whole);
  return r;
}

PhiResult integrated_information(const NetworkModel& model, const SolverOptions& options) {
  const auto stationary = solve_stationary(model, options);
  return assemble_phi(conditional_covariances(model, stationary.sigma), model.coupling());
}

PhiResult phi_symmetric_fast(const NetworkModel& model, const SolverOptions& options) {
  const auto sigma2 = model.noise().isotropic_sigma2();
  if (!model.adjacency().symmetric() || !sigma2 || model.adjacency().has_self_loops()) {
    throw InvalidArgument(
        "phi_symmetric_fast requires symmetric A, isotropic noise and no self-loops");
  }
  const auto stationary = solve_symmetric(model, options);
  const int n = model.size();
  PhiResult r;
  r.coupling = model.coupling();
  r.log_det_whole = n * std::log(*sigma2);
  r.log_det_parts.reserve(n);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ratio = stationary.sigma(k, k) / *sigma2;
    r.log_det_parts.push_back(std::log(stationary.sigma(k, k)));
    sum += std::log(ratio);
  }
  r.phi_nats = 0.5 * sum;
  return r;
}

}  // namespace phinet
