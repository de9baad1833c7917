#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace phinet {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending order of degree. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const mpq_class& c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  mpq_class coefficient(int i) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  long double evaluate(long double x) const;

  Polynomial derivative() const;
  // Rescaled so that p(0) = 1. Requires p(0) != 0.
  Polynomial normalized_at_zero() const;
  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form in the variable `var`, e.g. "1 - 73*q".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

// Quotient and remainder of a / b. Throws InvalidArgument if b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Exact division; throws if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Integer-coefficient primitive polynomial proportional to p, with positive
// leading coefficient.
Polynomial primitive_part(const Polynomial& p);

// Greatest common divisor, monic (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'): same roots, each simple.
Polynomial square_free_part(const Polynomial& p);

// Number of distinct real roots of a square-free p in the half-open interval
// (lo, hi], from a Sturm sequence.
int count_roots(const std::vector<Polynomial>& sturm, const mpq_class& lo, const mpq_class& hi);
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

}  // namespace phinet
