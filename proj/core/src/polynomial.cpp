#include "phinet/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "phinet/errors.hpp"

namespace phinet {

Polynomial::Polynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const mpq_class& c) { return Polynomial(std::vector{c}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<mpq_class> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[static_cast<std::size_t>(i)] * i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::normalized_at_zero() const {
  if (is_zero() || sgn(coeffs_[0]) == 0) {
    throw InvalidArgument("polynomial vanishes at zero; cannot normalize constant term");
  }
  const mpq_class c0 = coeffs_[0];
  std::vector<mpq_class> out(coeffs_);
  for (auto& c : out) c /= c0;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const mpq_class lead = leading();
  std::vector<mpq_class> out(coeffs_);
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      out << mag.get_str();
      if (i > 0) out << '*';
    }
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<mpq_class> rem(a.coefficients());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db + 1));
  const auto& bc = b.coefficients();
  for (int i = da - db; i >= 0; --i) {
    mpq_class factor = rem[static_cast<std::size_t>(i + db)] / b.leading();
    quot[static_cast<std::size_t>(i)] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<mpq_class> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpz_class(v / content));
  return Polynomial(std::move(out));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  // Euclid on primitive parts keeps coefficient growth in check.
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  return exact_divide(p, gcd(p, p.derivative()));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern while taming growth.
    Polynomial neg = primitive_part(r * mpq_class(-1));
    if (sgn(r.leading()) > 0) neg = neg * mpq_class(-1);
    seq.push_back(std::move(neg));
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_roots(const std::vector<Polynomial>& sturm, const mpq_class& lo, const mpq_class& hi) {
  return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

}  // namespace phinet
