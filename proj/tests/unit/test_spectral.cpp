#include <cmath>

#include <gtest/gtest.h>

#include "phinet/errors.hpp"
#include "phinet/spectral.hpp"
#include "support/oracles.hpp"

namespace phinet {
namespace {

TEST(AdjacencySpectrum, SortedByMagnitudeThenValue) {
  const auto s = adjacency_spectrum(paper_network(6));
  ASSERT_EQ(s.size(), 10u);
  EXPECT_NEAR(s[0], 2.0, 1e-12);
  EXPECT_NEAR(s[1], -2.0, 1e-12);
  EXPECT_NEAR(s[2], 1.618034, 1e-6);
  EXPECT_NEAR(s[3], 1.618034, 1e-6);
  EXPECT_NEAR(s[4], -1.618034, 1e-6);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GE(std::abs(s[i - 1]), std::abs(s[i]) - 1e-12);
}

TEST(AdjacencySpectrum, CompleteGraphAndSingleNode) {
  const auto s = adjacency_spectrum(paper_network(1));
  EXPECT_NEAR(s[0], 9.0, 1e-12);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_NEAR(s[i], -1.0, 1e-12);
  EXPECT_EQ(adjacency_spectrum(build_empty(1)), std::vector<double>{0.0});
}

TEST(AdjacencySpectrum, GeneralTemplatesReportModuli) {
  // Rotation-like block: eigenvalues +-0.5i.
  Eigen::Matrix2d a;
  a << 0, 0.5, -0.5, 0;
  const auto s = adjacency_spectrum(AdjacencyMatrix::from_weights(a));
  EXPECT_NEAR(s[0], 0.5, 1e-14);
  EXPECT_NEAR(s[1], 0.5, 1e-14);
}

TEST(CriticalCouplings, PublishedTable) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const auto actual = critical_couplings(paper_network(id));
    const auto expected = testing::published_poles(id);
    ASSERT_EQ(actual.size(), expected.size()) << id;
    for (std::size_t i = 0; i < actual.size(); ++i) {
      EXPECT_LE(testing::rel_err(actual[i], expected[i]), 1e-5) << id << " #" << i;
      if (i > 0) EXPECT_GT(actual[i], actual[i - 1]);
    }
  }
}

TEST(CriticalCouplings, AllZeroSpectrumThrows) {
  EXPECT_THROW(critical_couplings(build_empty(3)), NoCriticalityError);
  const auto report = spectral_report(build_empty(3));
  EXPECT_TRUE(report.critical_couplings.empty());
  EXPECT_TRUE(std::isinf(report.first_critical));
}

TEST(SpectralReport, FirstCriticalIsSmallest) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const auto r = spectral_report(paper_network(id));
    EXPECT_EQ(r.first_critical, r.critical_couplings.front());
    EXPECT_NEAR(r.first_critical * std::abs(r.adjacency_eigenvalues.front()), 1.0, 1e-12);
  }
}

TEST(SpectralReport, DensityOrdering) {
  double previous = 0.0;
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const double g = spectral_report(paper_network(id)).first_critical;
    EXPECT_GE(g, previous - 1e-12) << id;
    previous = g;
  }
}

TEST(CovarianceModes, CompleteGraph) {
  const auto p = covariance_modes(NetworkModel(paper_network(1), 0.1));
  EXPECT_NEAR(p.covariance_eigenvalues[0], 5.263157894736842, 1e-12);
  for (std::size_t i = 1; i < 10; ++i) EXPECT_NEAR(p.covariance_eigenvalues[i], 1.0101010101010101, 1e-12);
  EXPECT_NEAR(p.dominance_ratio, 5.2105263157894737, 1e-11);
}

TEST(CovarianceModes, ZeroCouplingAndCycle) {
  const auto flat = covariance_modes(NetworkModel(paper_network(4), 0.0, 2.5));
  for (double v : flat.covariance_eigenvalues) EXPECT_NEAR(v, 2.5, 1e-14);
  EXPECT_NEAR(flat.dominance_ratio, 1.0, 1e-14);

  const auto c10 = covariance_modes(NetworkModel(paper_network(6), 0.45));
  EXPECT_NEAR(c10.covariance_eigenvalues[0], 1.0 / (1.0 - 0.81), 1e-12);
  EXPECT_THROW(covariance_modes(NetworkModel(paper_network(6), 0.5)), InstabilityError);
}

TEST(CovarianceModes, SpectralLawAllNetworks) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const auto tmpl = paper_network(id);
    const auto mu = adjacency_spectrum(tmpl);
    const double g = 0.95 * critical_couplings(tmpl).front();
    const auto p = covariance_modes(NetworkModel(tmpl, g));
    std::vector<double> expected;
    for (double m : mu) expected.push_back(1.0 / (1.0 - g * g * m * m));
    std::sort(expected.begin(), expected.end(), std::greater<>());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_NEAR(p.covariance_eigenvalues[i], expected[i], 1e-10) << id;
    }
  }
}

TEST(DominanceCurve, CompleteGraphStrictlyIncreasing) {
  const std::vector<double> grid{0.05, 0.09, 0.1, 0.11};
  const auto curve = dominance_curve(NetworkModel(paper_network(1), 0.0), grid);
  ASSERT_EQ(curve.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g2 = grid[i] * grid[i];
    EXPECT_EQ(curve[i].coupling, grid[i]);
    EXPECT_NEAR(curve[i].dominance_ratio, (1 - g2) / (1 - 81 * g2), 1e-9);
    if (i > 0) EXPECT_GT(curve[i].dominance_ratio, curve[i - 1].dominance_ratio);
  }
}

TEST(DominanceCurve, SingleNodeIsFlat) {
  Eigen::MatrixXd w(1, 1);
  w(0, 0) = 0.0;
  const std::vector<double> grid{0.0, 1.0, 5.0};
  for (const auto& p : dominance_curve(NetworkModel(AdjacencyMatrix::from_weights(w), 0.0), grid)) {
    EXPECT_EQ(p.dominance_ratio, 1.0);
  }
}

TEST(DominanceCurve, LeadingModeDivergesNearFirstPole) {
  // Network 4: mu_max = 3, second |mu| = 2.47283.
  const NetworkModel model(paper_network(4), 0.0);
  const std::vector<double> grid{0.2, 0.3, 0.33, 0.333, 0.3333};
  const auto curve = dominance_curve(model, grid);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    EXPECT_GT(curve[i].covariance_eigenvalues[0], curve[i - 1].covariance_eigenvalues[0]);
    EXPECT_GT(curve[i].dominance_ratio, curve[i - 1].dominance_ratio);
  }
  // The rest stay bounded by the second mode's value at g* = 1/3.
  const double bound = 1.0 / (1.0 - std::pow(2.4728339 / 3.0, 2));
  EXPECT_GT(curve.back().covariance_eigenvalues[0], 1000.0);
  EXPECT_LT(curve.back().covariance_eigenvalues[1], bound);
}

TEST(DominanceCurve, UnstableGridPointIsIdentified) {
  const std::vector<double> grid{0.1, 0.2, 0.6};
  try {
    dominance_curve(NetworkModel(paper_network(6), 0.0), grid);
    FAIL() << "expected instability";
  } catch (const InstabilityError& e) {
    EXPECT_EQ(e.coupling(), 0.6);
  }
}

}  // namespace
}  // namespace phinet
