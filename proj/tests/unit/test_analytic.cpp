#include <cmath>

#include <gtest/gtest.h>

#include "phinet/analytic.hpp"
#include "phinet/errors.hpp"
#include "phinet/phi.hpp"
#include "phinet/spectral.hpp"
#include "support/oracles.hpp"

namespace phinet {
namespace {

constexpr double kPhiK10At01 = 1.80724111345695027680;

RationalFunction printed(int id) {
  const auto f = testing::printed_form(id);
  return RationalFunction::reduced(f.numerator, f.denominator);
}

const RationalFunction& reconstructed(int id) {
  static std::vector<RationalFunction> cache = [] {
    std::vector<RationalFunction> out;
    for (int i = 1; i <= kPaperNetworkCount; ++i) out.push_back(phi_rational(paper_network(i)));
    return out;
  }();
  return cache[id - 1];
}

TEST(FirstPrimes, Sequence) {
  EXPECT_EQ(first_primes(6), (std::vector<unsigned long>{2, 3, 5, 7, 11, 13}));
}

TEST(RationalFunctionReduced, CancelsAndNormalizes) {
  using P = Polynomial;
  const auto f = RationalFunction::reduced(P{2, -2} * P{3, 1}, P{2, -2} * P{3, 5});
  EXPECT_EQ(f.numerator, (P{3, 1}).normalized_at_zero());
  EXPECT_EQ(f.denominator, (P{3, 5}).normalized_at_zero());
  EXPECT_THROW(RationalFunction::reduced(P{2}, P{1}), InvalidArgument);
}

TEST(PhiRational, SingleNodeIsTrivial) {
  const auto f = phi_rational(build_empty(1));
  EXPECT_EQ(f.numerator, Polynomial{1});
  EXPECT_EQ(f.denominator, Polynomial{1});
  EXPECT_TRUE(denominator_poles(f).empty());
}

TEST(PhiRational, MatchesPublishedFormsExactly) {
  for (int id : {1, 3, 5, 6}) {
    EXPECT_EQ(reconstructed(id), printed(id)) << "network " << id;
  }
}

TEST(PhiRational, CompleteGraphForm) {
  const auto& f = reconstructed(1);
  EXPECT_EQ(f.numerator, Polynomial({1, -73}).pow(10));
  EXPECT_EQ(f.denominator, Polynomial({1, -82, 81}).pow(10));
}

TEST(PhiRational, PolesMatchSpectralPrediction) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const auto poles = denominator_poles(reconstructed(id));
    const auto spectral = critical_couplings(paper_network(id));
    ASSERT_EQ(poles.size(), spectral.size()) << id;
    for (std::size_t i = 0; i < poles.size(); ++i) {
      EXPECT_LE(std::abs(poles[i] - spectral[i]) / spectral[i], 1e-9) << id;
    }
  }
}

TEST(PhiRational, SamplePointsDoNotChangeResult) {
  for (int id : {1, 6}) {
    EXPECT_EQ(phi_rational(paper_network(id), 1, {.first_prime_index = 50}), reconstructed(id));
  }
}

TEST(PhiRational, IndependentOfNoiseScale) {
  EXPECT_EQ(phi_rational(paper_network(6), mpq_class(7, 3)), reconstructed(6));
}

TEST(PhiRational, RejectsUnsupportedTemplates) {
  Eigen::Matrix2d a;
  a << 0, 1, 0, 0;
  EXPECT_THROW(phi_rational(AdjacencyMatrix::from_weights(a)), InvalidArgument);
  Eigen::Matrix2d loop;
  loop << 1, 1, 1, 0;
  EXPECT_THROW(phi_rational(AdjacencyMatrix::from_weights(loop)), InvalidArgument);
}

TEST(Evaluate, ExactValueAtRationalCoupling) {
  const auto e = evaluate(reconstructed(1), mpq_class(1, 10));
  mpq_class expected = 1;
  for (int i = 0; i < 10; ++i) expected *= mpq_class(300, 209);
  EXPECT_EQ(e.ratio, expected);
  EXPECT_NEAR(e.phi_nats, kPhiK10At01, 1e-13);
}

TEST(Evaluate, PoleThrows) {
  try {
    evaluate(reconstructed(6), mpq_class(1, 2));
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_DOUBLE_EQ(e.location(), 0.5);
  }
}

// Midpoints of 25 equal cells of (0, 0.99 g*). Below g ~ 1e-3 phi itself is
// ~1e-7 and double rounding alone exceeds 1e-9 relative.
TEST(Evaluate, AgreesWithNumericPhi) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    const double g_star = critical_couplings(paper_network(id)).front();
    for (int i = 0; i < 25; ++i) {
      const double g = 0.99 * g_star * (i + 0.5) / 25.0;
      const double numeric = integrated_information(NetworkModel(paper_network(id), g)).phi_nats;
      const double exact = evaluate(reconstructed(id), mpq_class(g)).phi_nats;
      EXPECT_LE(std::abs(numeric - exact), 1e-9 * std::max(std::abs(exact), 1e-300) + 1e-15)
          << id << " g=" << g;
    }
  }
}

TEST(Json, RoundTrip) {
  for (int id : {1, 4}) {
    const auto& f = reconstructed(id);
    EXPECT_EQ(rational_function_from_json(to_json(f)), f);
  }
  EXPECT_EQ(to_json(reconstructed(6)).rfind("{\"variable\":\"g^2\",\"num\":[\"1\",\"-50\"", 0), 0u);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(rational_function_from_json("{"), ParseError);
  EXPECT_THROW(rational_function_from_json(R"({"variable":"g","num":["1"],"den":["1"]})"), ParseError);
  EXPECT_THROW(rational_function_from_json(R"({"variable":"g^2","num":["x"],"den":["1"]})"),
               ParseError);
}

TEST(ReconstructRational, RecoversKnownFunction) {
  // (1 + 2q) / (1 - 3q + q^2)
  const VectorSampler sampler = [](const mpq_class& q) -> std::optional<std::vector<mpq_class>> {
    const mpq_class d = 1 - 3 * q + q * q;
    if (d == 0) return std::nullopt;
    return std::vector<mpq_class>{mpq_class((1 + 2 * q) / d)};
  };
  const auto pieces = reconstruct_rational(sampler, 1, 8);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0].numerator, (Polynomial{1, 2}));
  EXPECT_EQ(pieces[0].denominator, (Polynomial{1, -3, 1}));
}

TEST(ReconstructRational, DegreeCapEnforced) {
  const VectorSampler sampler = [](const mpq_class& q) -> std::optional<std::vector<mpq_class>> {
    mpq_class d = 1;
    for (int i = 1; i <= 9; ++i) d *= 1 - i * q;
    if (d == 0) return std::nullopt;
    return std::vector<mpq_class>{mpq_class(1 / d)};
  };
  EXPECT_THROW(reconstruct_rational(sampler, 1, 4), ReconstructionError);
}

}  // namespace
}  // namespace phinet
