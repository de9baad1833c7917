#include "phinet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "phinet/errors.hpp"
#include "phinet/parallel.hpp"

namespace phinet {

namespace {

constexpr double kDedupRelTol = 1e-9;

void sort_spectrum(std::vector<double>& values) {
  std::sort(values.begin(), values.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  // Magnitudes equal up to rounding form one tie group, ordered by signed value.
  const double scale = values.empty() ? 0.0 : std::max(1.0, std::abs(values.front()));
  const double tol = kDedupRelTol * scale;
  for (auto first = values.begin(); first != values.end();) {
    auto last = first;
    while (last != values.end() && std::abs(*first) - std::abs(*last) <= tol) ++last;
    std::sort(first, last, std::greater<>());
    first = last;
  }
}

}  // namespace

std::vector<double> adjacency_spectrum(const AdjacencyMatrix& adjacency) {
  const auto& w = adjacency.weights();
  std::vector<double> values;
  values.reserve(adjacency.size());
  if (adjacency.symmetric()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
    for (double v : es.eigenvalues()) values.push_back(v);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(w, false);
    for (const auto& v : es.eigenvalues()) values.push_back(std::abs(v));
  }
  sort_spectrum(values);
  return values;
}

std::vector<double> critical_couplings(const AdjacencyMatrix& adjacency) {
  const auto spectrum = adjacency_spectrum(adjacency);
  const double scale = spectrum.empty() ? 0.0 : std::abs(spectrum.front());
  // Exact zeros come out of the eigensolver as round-off of order eps * scale.
  const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);

  std::vector<double> magnitudes;
  for (double v : spectrum)
    if (std::abs(v) > zero_tol) magnitudes.push_back(std::abs(v));
  if (magnitudes.empty()) throw NoCriticalityError("all template eigenvalues are zero");

  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  std::vector<double> out;
  for (double m : magnitudes) {
    const double g = 1.0 / m;
    if (out.empty() || std::abs(g - out.back()) > kDedupRelTol * std::abs(out.back())) {
      out.push_back(g);
    }
  }
  return out;
}

SpectralReport spectral_report(const AdjacencyMatrix& adjacency) {
  SpectralReport r;
  r.adjacency_eigenvalues = adjacency_spectrum(adjacency);
  try {
    r.critical_couplings = critical_couplings(adjacency);
    r.first_critical = r.critical_couplings.front();
  } catch (const NoCriticalityError&) {
    r.first_critical = std::numeric_limits<double>::infinity();
  }
  return r;
}

ModeProfile covariance_modes(const NetworkModel& model, const SolverOptions& options) {
  const auto stationary = solve_stationary(model, options);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(stationary.sigma, Eigen::EigenvaluesOnly);
  ModeProfile p;
  p.coupling = model.coupling();
  const auto& ev = es.eigenvalues();
  p.covariance_eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(p.covariance_eigenvalues.begin(), p.covariance_eigenvalues.end(), std::greater<>());
  if (p.covariance_eigenvalues.back() <= 0.0) {
    throw DegeneracyError("stationary covariance is not positive definite");
  }
  p.dominance_ratio = p.covariance_eigenvalues.size() > 1
                          ? p.covariance_eigenvalues[0] / p.covariance_eigenvalues[1]
                          : 1.0;
  return p;
}

std::vector<ModeProfile> dominance_curve(const NetworkModel& model, std::span<const double> grid,
                                         const SolverOptions& options) {
  for (double g : grid) {
    const auto report = is_stable(model.with_coupling(g), options);
    if (!report.stable) {
      std::ostringstream msg;
      msg << "grid point g=" << g << " has no stationary solution (spectral radius "
          << report.spectral_radius << ")";
      throw InstabilityError(msg.str(), report.spectral_radius, g);
    }
  }
  return parallel_map(grid.size(), [&](std::size_t i) {
    return covariance_modes(model.with_coupling(grid[i]), options);
  });
}

}  // namespace phinet
