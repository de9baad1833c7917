#include "phinet/lyapunov.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "phinet/errors.hpp"

namespace phinet {

namespace {

void require_stable(const NetworkModel& model, const SolverOptions& options) {
  const auto report = is_stable(model, options);
  if (!report.stable) {
    std::ostringstream msg;
    msg << "no stationary solution at g=" << model.coupling()
        << ": spectral radius " << report.spectral_radius << " >= 1 - " << options.critical_margin;
    throw InstabilityError(msg.str(), report.spectral_radius, model.coupling());
  }
}

StationaryCovariance finish(const NetworkModel& model, Eigen::MatrixXd sigma, SolveMethod method) {
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  StationaryCovariance out;
  out.residual_norm = residual(model, sigma);
  out.sigma = std::move(sigma);
  out.method = method;
  return out;
}

}  // namespace

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::kSymmetricClosedForm:
      return "symmetric-closed-form";
    case SolveMethod::kGeneralLinearSolve:
      return "general-linear-solve";
  }
  return "unknown";
}

double spectral_radius(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  if (m == m.transpose()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

StabilityReport is_stable(const NetworkModel& model, const SolverOptions& options) {
  StabilityReport r;
  // The template spectrum scales linearly with g; computing it on the template
  // keeps g = 0 and huge g on the same footing.
  r.spectral_radius = model.coupling() * spectral_radius(model.adjacency().weights());
  r.stable = r.spectral_radius < 1.0 - options.critical_margin;
  return r;
}

StationaryCovariance solve_symmetric(const NetworkModel& model, const SolverOptions& options) {
  if (!model.adjacency().symmetric()) {
    throw InvalidArgument("solve_symmetric requires a symmetric adjacency matrix");
  }
  const auto sigma2 = model.noise().isotropic_sigma2();
  if (!sigma2) {
    // (I - A^2)^{-1} Q solves the equation only when Q commutes with A.
    throw InvalidArgument("solve_symmetric requires isotropic noise sigma2 * I");
  }
  require_stable(model, options);

  const int n = model.size();
  const Eigen::MatrixXd a = model.effective();
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - a * a;
  Eigen::LLT<Eigen::MatrixXd> llt(lhs);
  if (llt.info() != Eigen::Success) {
    throw CriticalityError("I - A^2 is not positive definite");
  }
  Eigen::MatrixXd sigma = llt.solve(Eigen::MatrixXd::Identity(n, n)) * *sigma2;
  return finish(model, std::move(sigma), SolveMethod::kSymmetricClosedForm);
}

StationaryCovariance solve_general(const NetworkModel& model, const SolverOptions& options) {
  require_stable(model, options);

  const int n = model.size();
  const Eigen::MatrixXd a = model.effective();
  const Eigen::MatrixXd& q = model.noise().matrix();

  // vec(A S A^T) = (A kron A) vec(S) for column-major vec.
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n * n, n * n);
  system -= Eigen::kroneckerProduct(a, a);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw CriticalityError("Lyapunov system is singular: an eigenvalue product equals 1");
  }
  const Eigen::VectorXd vec_q = Eigen::Map<const Eigen::VectorXd>(q.data(), n * n);
  const Eigen::VectorXd vec_s = lu.solve(vec_q);
  Eigen::MatrixXd sigma = Eigen::Map<const Eigen::MatrixXd>(vec_s.data(), n, n);
  return finish(model, std::move(sigma), SolveMethod::kGeneralLinearSolve);
}

StationaryCovariance solve_stationary(const NetworkModel& model, const SolverOptions& options) {
  if (model.adjacency().symmetric() && model.noise().isotropic_sigma2()) {
    return solve_symmetric(model, options);
  }
  return solve_general(model, options);
}

double residual(const NetworkModel& model, const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != model.size() || sigma.cols() != model.size()) {
    throw InvalidArgument("covariance and model sizes differ");
  }
  const Eigen::MatrixXd a = model.effective();
  return (a * sigma * a.transpose() + model.noise().matrix() - sigma).cwiseAbs().maxCoeff();
}

}  // namespace phinet
