#pragma once

#include <span>
#include <vector>

#include "phinet/lyapunov.hpp"
#include "phinet/netmodel.hpp"

namespace phinet {

// Template eigenvalues, sorted by magnitude descending with ties broken by
// signed value descending. Symmetric templates report signed real eigenvalues;
// general templates report the moduli of their complex eigenvalues.
std::vector<double> adjacency_spectrum(const AdjacencyMatrix& adjacency);

// Distinct couplings 1/|mu| over nonzero template eigenvalues, ascending.
// Magnitudes closer than 1e-9 (relative) are merged. Throws
// NoCriticalityError when every eigenvalue is zero.
std::vector<double> critical_couplings(const AdjacencyMatrix& adjacency);

struct SpectralReport {
  std::vector<double> adjacency_eigenvalues;
  std::vector<double> critical_couplings;  // empty for an all-zero spectrum
  double first_critical = 0.0;             // +inf when there is none
};

SpectralReport spectral_report(const AdjacencyMatrix& adjacency);

struct ModeProfile {
  double coupling = 0.0;
  std::vector<double> covariance_eigenvalues;  // descending
  double dominance_ratio = 1.0;                // leading / second, 1 for n = 1
};

// Eigen-decomposition of the stationary covariance at the model's coupling.
ModeProfile covariance_modes(const NetworkModel& model, const SolverOptions& options = {});

// covariance_modes at each grid coupling, in grid order. A grid point with no
// stationary solution raises InstabilityError carrying that coupling.
std::vector<ModeProfile> dominance_curve(const NetworkModel& model, std::span<const double> grid,
                                         const SolverOptions& options = {});

}  // namespace phinet
