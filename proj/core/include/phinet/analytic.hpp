#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "phinet/netmodel.hpp"
#include "phinet/polynomial.hpp"

namespace phinet {

// phi(g) = 1/2 ln[N(q) / D(q)] with q = g^2. N and D are coprime and
// normalized so that N(0) = D(0) = 1.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  // Cancels common factors and rescales both sides to a unit constant term.
  // Throws InvalidArgument if N(0)/D(0) != 1.
  static RationalFunction reduced(const Polynomial& numerator, const Polynomial& denominator);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

// A ratio of polynomials without the unit-constant-term convention; used for
// the per-node pieces that make up RationalFunction.
struct RationalPiece {
  Polynomial numerator;
  Polynomial denominator;  // denominator(0) == 1
};

struct ReconstructionOptions {
  // Sample points are q = 1/p for consecutive primes p starting at this index
  // in the prime sequence (0 -> 2).
  std::size_t first_prime_index = 0;
};

// Sample callback: the values of several rational functions of q at one exact
// point, or nullopt when q is a pole of any of them.
using VectorSampler = std::function<std::optional<std::vector<mpq_class>>(const mpq_class& q)>;

// Rational interpolation with a degree bound doubled until two consecutive
// reconstructions agree. Each returned piece is in lowest terms. Throws
// ReconstructionError once the bound would exceed `degree_cap`.
std::vector<RationalPiece> reconstruct_rational(const VectorSampler& sampler,
                                                std::size_t components, int degree_cap,
                                                const ReconstructionOptions& options = {});

// Exact closed form of phi(g) for a symmetric template without self-loops
// under isotropic noise sigma2 * I.
RationalFunction phi_rational(const AdjacencyMatrix& adjacency, const mpq_class& sigma2 = 1,
                              const ReconstructionOptions& options = {});

struct RationalEvaluation {
  mpq_class ratio;   // N(g^2) / D(g^2)
  double phi_nats;   // 1/2 ln(ratio); NaN when ratio <= 0
};

// Throws PoleError when D(g^2) = 0.
RationalEvaluation evaluate(const RationalFunction& f, const mpq_class& g);

// Positive couplings g = sqrt(q) at the real positive roots of D, ascending,
// each refined to 1e-10 or better.
std::vector<double> denominator_poles(const RationalFunction& f);

// {"variable":"g^2","num":[...],"den":[...]} with exact rational strings.
std::string to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(std::string_view json);

// First `count` primes.
std::vector<unsigned long> first_primes(std::size_t count);

}  // namespace phinet
