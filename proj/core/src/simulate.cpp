#include "phinet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "phinet/errors.hpp"
#include "phinet/lyapunov.hpp"

namespace phinet {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(seed) {}

double NormalStream::uniform() {
  // 53 random bits mapped onto (-1, 1).
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double NormalStream::operator()() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  double u = 0.0, v = 0.0, s = 0.0;
  do {
    u = uniform();
    v = uniform();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  return u * f;
}

int default_burn_in(const NetworkModel& model) {
  const double radius = is_stable(model).spectral_radius;
  const double mixing = radius < 1.0 ? std::ceil(20.0 / (1.0 - radius)) : 1e9;
  return static_cast<int>(std::max(1000.0, std::min(mixing, 1e9)));
}

Trajectory sample_trajectory(const NetworkModel& model, int steps, std::uint64_t seed,
                             std::optional<int> burn_in) {
  if (steps < 2) throw InvalidArgument("trajectory needs at least 2 steps");
  const auto stability = is_stable(model);
  if (!stability.stable) {
    throw InstabilityError("cannot sample an unstable model", stability.spectral_radius,
                           model.coupling());
  }
  Trajectory traj;
  traj.seed = seed;
  traj.burn_in = burn_in.value_or(default_burn_in(model));
  if (traj.burn_in < 0) throw InvalidArgument("burn-in must be non-negative");
  if (steps <= traj.burn_in) {
    throw InvalidArgument("trajectory length " + std::to_string(steps) +
                          " does not exceed burn-in " + std::to_string(traj.burn_in));
  }

  const int n = model.size();
  const Eigen::MatrixXd a = model.effective();
  const Eigen::MatrixXd chol = model.noise().matrix().llt().matrixL();

  traj.series.resize(steps, n);
  NormalStream normal(seed);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd z(n);
  Eigen::VectorXd next(n);
  traj.series.row(0) = x.transpose();
  for (int t = 1; t < steps; ++t) {
    for (int i = 0; i < n; ++i) z(i) = normal();
    next.noalias() = a * x;
    next.noalias() += chol * z;
    x.swap(next);
    traj.series.row(t) = x.transpose();
  }
  return traj;
}

namespace {

std::size_t retained(const Trajectory& traj) {
  return static_cast<std::size_t>(traj.steps() - traj.burn_in);
}

void require_samples(const Trajectory& traj) {
  const auto n = static_cast<std::size_t>(traj.series.cols());
  if (traj.steps() <= traj.burn_in || retained(traj) < 10 * n) {
    throw InvalidArgument("need at least 10 n states after burn-in for covariance estimates");
  }
}

}  // namespace

Eigen::MatrixXd empirical_covariance(const Trajectory& traj) {
  require_samples(traj);
  const auto kept = traj.series.bottomRows(static_cast<Eigen::Index>(retained(traj)));
  const Eigen::VectorXd mean = kept.colwise().mean().transpose();
  const double count = static_cast<double>(kept.rows());
  Eigen::MatrixXd cov = kept.transpose() * kept;
  cov -= count * mean * mean.transpose();
  cov /= count - 1.0;
  return 0.5 * (cov + cov.transpose());
}

Eigen::MatrixXd empirical_lag1_covariance(const Trajectory& traj) {
  require_samples(traj);
  const auto count = static_cast<Eigen::Index>(retained(traj));
  const auto kept = traj.series.bottomRows(count);
  const Eigen::VectorXd mean = kept.colwise().mean().transpose();
  const double pairs = static_cast<double>(count - 1);
  Eigen::MatrixXd cross = kept.topRows(count - 1).transpose() * kept.bottomRows(count - 1);
  cross -= pairs * mean * mean.transpose();
  return cross / (pairs - 1.0);
}

EmpiricalPhi empirical_phi(const Trajectory& traj, const NetworkModel& model) {
  if (traj.series.cols() != model.size()) {
    throw InvalidArgument("trajectory and model sizes differ");
  }
  const Eigen::MatrixXd sigma = empirical_covariance(traj);
  const Eigen::MatrixXd cross = empirical_lag1_covariance(traj);
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw DegeneracyError("estimated covariance is not positive definite");
  }

  ConditionalCovariance cond;
  cond.whole = gaussian_conditional_covariance(sigma, cross, sigma);
  cond.parts.reserve(model.size());
  for (int k = 0; k < model.size(); ++k) {
    cond.parts.push_back(conditional_covariance_part(model, sigma, k));
  }

  EmpiricalPhi out;
  out.result = assemble_phi(cond, model.coupling());
  out.samples = retained(traj);
  const double n = static_cast<double>(model.size());
  out.bias_bound = n * n / static_cast<double>(out.samples);
  return out;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const auto n = traj.series.cols();
  out << 't';
  for (Eigen::Index i = 0; i < n; ++i) out << ",x_" << i;
  out << '\n';
  const auto old_precision = out.precision(12);
  for (Eigen::Index t = 0; t < traj.series.rows(); ++t) {
    out << t;
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << traj.series(t, i);
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace phinet
