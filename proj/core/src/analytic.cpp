#include "phinet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "phinet/errors.hpp"

namespace phinet {

namespace {

// Small dense exact matrix, row-major.
class QMatrix {
 public:
  explicit QMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static QMatrix identity(int n) {
    QMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  mpq_class& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    const int n = x.n_;
    QMatrix out(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (sgn(x(i, k)) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (sgn(y(k, j)) != 0) out(i, j) += x(i, k) * y(k, j);
        }
      }
    }
    return out;
  }

  QMatrix scaled(const mpq_class& c) const {
    QMatrix out(*this);
    for (auto& v : out.a_) v *= c;
    return out;
  }

  friend QMatrix operator-(QMatrix x, const QMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

 private:
  int n_;
  std::vector<mpq_class> a_;
};

std::optional<QMatrix> inverse(QMatrix m) {
  const int n = m.size();
  QMatrix inv = QMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const mpq_class p = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || sgn(m(i, col)) == 0) continue;
      const mpq_class f = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

mpq_class determinant(QMatrix m) {
  const int n = m.size();
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const mpq_class f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

// Solves the (possibly rank-deficient) square system; free unknowns are set
// to zero. Returns nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_linear(std::vector<std::vector<mpq_class>> rows) {
  const std::size_t m = rows.size();
  const std::size_t cols = rows.empty() ? 0 : rows[0].size() - 1;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    const mpq_class pv = rows[r][c];
    for (std::size_t j = c; j <= cols; ++j) rows[r][j] /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const mpq_class f = rows[i][c];
      for (std::size_t j = c; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (sgn(rows[i][cols]) != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rows[i][cols];
  return x;
}

RationalPiece lowest_terms(const Polynomial& num, const Polynomial& den) {
  const Polynomial g = gcd(num, den);
  Polynomial n = num.is_zero() ? num : exact_divide(num, g);
  Polynomial d = exact_divide(den, g);
  const mpq_class d0 = d.coefficient(0);
  const mpq_class scale = 1 / d0;
  return {n * scale, d * scale};
}

// Fits N/D with deg N, deg D <= bound through 2*bound + 1 samples.
std::optional<RationalPiece> fit_rational(const std::vector<mpq_class>& qs,
                                          const std::vector<mpq_class>& values, int bound) {
  const std::size_t points = static_cast<std::size_t>(2 * bound + 1);
  const std::size_t unknowns = points;  // n_0..n_b, d_1..d_b
  std::vector<std::vector<mpq_class>> rows(points, std::vector<mpq_class>(unknowns + 1));
  for (std::size_t i = 0; i < points; ++i) {
    mpq_class power = 1;
    for (int j = 0; j <= bound; ++j) {
      rows[i][static_cast<std::size_t>(j)] = power;
      if (j >= 1) rows[i][static_cast<std::size_t>(bound + j)] = -values[i] * power;
      power *= qs[i];
    }
    rows[i][unknowns] = values[i];
  }
  auto x = solve_linear(std::move(rows));
  if (!x) return std::nullopt;
  std::vector<mpq_class> num(x->begin(), x->begin() + bound + 1);
  std::vector<mpq_class> den{1};
  den.insert(den.end(), x->begin() + bound + 1, x->end());
  Polynomial n(std::move(num));
  Polynomial d(std::move(den));
  return lowest_terms(n, d);
}

bool same_piece(const RationalPiece& a, const RationalPiece& b) {
  return a.numerator == b.numerator && a.denominator == b.denominator;
}

// Factor lists whose products form N and D; cancels every common factor.
void cancel_common_factors(std::vector<Polynomial>& nums, std::vector<Polynomial>& dens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& a : nums) {
      for (auto& b : dens) {
        if (a.degree() < 1 || b.degree() < 1) continue;
        const Polynomial g = gcd(a, b);
        if (g.degree() < 1) continue;
        a = exact_divide(a, g);
        b = exact_divide(b, g);
        changed = true;
      }
    }
  }
}

Polynomial product(const std::vector<Polynomial>& factors) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& f : factors) out *= f;
  return out;
}

double log_abs(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<unsigned long> first_primes(std::size_t count) {
  std::vector<unsigned long> primes;
  for (unsigned long c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (unsigned long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

RationalFunction RationalFunction::reduced(const Polynomial& numerator,
                                           const Polynomial& denominator) {
  if (denominator.is_zero()) throw InvalidArgument("zero denominator");
  auto piece = lowest_terms(numerator, denominator);
  if (piece.numerator.coefficient(0) != 1) {
    throw InvalidArgument("rational function must equal 1 at q = 0");
  }
  return {std::move(piece.numerator), std::move(piece.denominator)};
}

std::vector<RationalPiece> reconstruct_rational(const VectorSampler& sampler,
                                                std::size_t components, int degree_cap,
                                                const ReconstructionOptions& options) {
  std::vector<mpq_class> qs;
  std::vector<std::vector<mpq_class>> samples;  // samples[point][component]
  std::vector<unsigned long> primes;
  std::size_t next_prime = options.first_prime_index;

  auto ensure_points = [&](std::size_t needed) {
    while (qs.size() < needed) {
      if (next_prime >= primes.size()) primes = first_primes(2 * next_prime + 64);
      mpq_class q(1, primes[next_prime++]);
      auto values = sampler(q);
      if (!values) continue;  // pole: resample at the next prime
      if (values->size() != components) throw InvalidArgument("sampler returned wrong arity");
      qs.push_back(q);
      samples.push_back(std::move(*values));
    }
  };

  std::vector<RationalPiece> out;
  out.reserve(components);
  for (std::size_t c = 0; c < components; ++c) {
    std::optional<RationalPiece> previous;
    int bound = 1;
    while (true) {
      const auto points = static_cast<std::size_t>(2 * bound + 1);
      ensure_points(points);
      std::vector<mpq_class> values(points);
      for (std::size_t i = 0; i < points; ++i) values[i] = samples[i][c];
      auto fit = fit_rational(qs, values, bound);
      if (fit && previous && same_piece(*fit, *previous)) {
        out.push_back(std::move(*fit));
        break;
      }
      previous = std::move(fit);
      if (bound >= degree_cap) {
        throw ReconstructionError("rational reconstruction did not converge below degree " +
                                  std::to_string(degree_cap));
      }
      bound = std::min(2 * bound, degree_cap);
    }
  }
  return out;
}

RationalFunction phi_rational(const AdjacencyMatrix& adjacency, const mpq_class& sigma2,
                              const ReconstructionOptions& options) {
  if (!adjacency.symmetric() || adjacency.has_self_loops()) {
    throw InvalidArgument("closed form requires a symmetric template without self-loops");
  }
  if (sgn(sigma2) <= 0) throw InvalidArgument("noise variance must be positive");

  const int n = adjacency.size();
  QMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = mpq_class(adjacency.weights()(i, j));
  const QMatrix t2 = t * t;
  const QMatrix eye = QMatrix::identity(n);

  // Components 0..n-1: stationary variances S_kk(q). Component n: det of the
  // whole-system conditional covariance S - q S T S^{-1} T S.
  VectorSampler sampler = [&](const mpq_class& q) -> std::optional<std::vector<mpq_class>> {
    const QMatrix m = eye - t2.scaled(q);
    auto m_inv = inverse(m);
    if (!m_inv) return std::nullopt;
    const QMatrix sigma = m_inv->scaled(sigma2);
    const QMatrix sigma_inv = m.scaled(1 / sigma2);
    const QMatrix whole = sigma - (sigma * t * sigma_inv * t * sigma).scaled(q);
    std::vector<mpq_class> values;
    values.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) values.push_back(sigma(k, k));
    values.push_back(determinant(whole));
    return values;
  };

  const auto pieces =
      reconstruct_rational(sampler, static_cast<std::size_t>(n) + 1, std::max(2, n * n), options);

  // ratio = prod_k S_kk / det(whole)
  std::vector<Polynomial> nums;
  std::vector<Polynomial> dens;
  for (int k = 0; k < n; ++k) {
    nums.push_back(pieces[static_cast<std::size_t>(k)].numerator);
    dens.push_back(pieces[static_cast<std::size_t>(k)].denominator);
  }
  nums.push_back(pieces.back().denominator);
  dens.push_back(pieces.back().numerator);
  cancel_common_factors(nums, dens);

  Polynomial num = product(nums);
  Polynomial den = product(dens);
  if (num.degree() > n * n || den.degree() > n * n) {
    throw ReconstructionError("closed form exceeds degree cap n^2");
  }
  const mpq_class d0 = den.coefficient(0);
  num *= 1 / d0;
  den *= 1 / d0;
  if (num.coefficient(0) != 1) {
    throw ReconstructionError("closed form does not vanish at g = 0");
  }
  return {std::move(num), std::move(den)};
}

RationalEvaluation evaluate(const RationalFunction& f, const mpq_class& g) {
  const mpq_class q = g * g;
  const mpq_class d = f.denominator(q);
  if (sgn(d) == 0) {
    std::ostringstream msg;
    msg << "g=" << g.get_d() << " is a pole of the closed form";
    throw PoleError(msg.str(), g.get_d());
  }
  RationalEvaluation r;
  r.ratio = f.numerator(q) / d;
  r.ratio.canonicalize();
  if (sgn(r.ratio) <= 0) {
    r.phi_nats = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.phi_nats = 0.5 * (log_abs(r.ratio.get_num()) - log_abs(r.ratio.get_den()));
  }
  return r;
}

std::vector<double> denominator_poles(const RationalFunction& f) {
  std::vector<double> poles;
  if (f.denominator.degree() < 1) return poles;

  const Polynomial p = square_free_part(f.denominator);
  const auto sturm = sturm_sequence(p);

  // Cauchy bound on root magnitudes.
  mpq_class bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class r = abs(p.coefficient(i) / p.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  struct Interval {
    mpq_class lo, hi;
  };
  std::vector<Interval> stack{{0, bound}};
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = count_roots(sturm, iv.lo, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }

  for (auto& iv : isolated) {
    // Exactly one simple root in (lo, hi].
    if (sgn(p(iv.hi)) == 0) {
      poles.push_back(std::sqrt(iv.hi.get_d()));
      continue;
    }
    const int sign_hi = sgn(p(iv.hi));
    for (int it = 0; it < 400; ++it) {
      if (std::sqrt(iv.hi.get_d()) - std::sqrt(iv.lo.get_d()) < 1e-14) break;
      mpq_class mid = (iv.lo + iv.hi) / 2;
      const int s = sgn(p(mid));
      if (s == 0) {
        iv.lo = iv.hi = mid;
        break;
      }
      if (s == sign_hi) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    poles.push_back(std::sqrt(mpq_class((iv.lo + iv.hi) / 2).get_d()));
  }
  std::sort(poles.begin(), poles.end());
  return poles;
}

std::string to_json(const RationalFunction& f) {
  auto coeffs = [](const Polynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
  };
  nlohmann::ordered_json j;
  j["variable"] = "g^2";
  j["num"] = coeffs(f.numerator);
  j["den"] = coeffs(f.denominator);
  return j.dump();
}

RationalFunction rational_function_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rational function JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("variable", "") != "g^2" || !j.contains("num") ||
      !j.contains("den")) {
    throw ParseError("rational function JSON needs variable \"g^2\", num and den");
  }
  auto poly = [](const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("coefficients must be an array");
    std::vector<mpq_class> c;
    for (const auto& v : arr) {
      if (!v.is_string()) throw ParseError("coefficients must be strings");
      mpq_class x;
      if (x.set_str(v.get<std::string>(), 10) != 0) {
        throw ParseError("bad rational coefficient '" + v.get<std::string>() + "'");
      }
      x.canonicalize();
      c.push_back(x);
    }
    return Polynomial(std::move(c));
  };
  return RationalFunction::reduced(poly(j["num"]), poly(j["den"]));
}

}  // namespace phinet
