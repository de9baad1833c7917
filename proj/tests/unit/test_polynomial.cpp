#include <gtest/gtest.h>

#include "phinet/errors.hpp"
#include "phinet/polynomial.hpp"

namespace phinet {
namespace {

using P = Polynomial;

TEST(Polynomial, TrimsAndReportsDegree) {
  EXPECT_EQ(P{}.degree(), -1);
  EXPECT_TRUE((P{0, 0}).is_zero());
  EXPECT_EQ((P{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((P{1, 2}).coefficient(5), 0);
}

TEST(Polynomial, Arithmetic) {
  const P a{1, -1};
  const P b{1, 1};
  EXPECT_EQ(a * b, (P{1, 0, -1}));
  EXPECT_EQ(a + b, (P{2}));
  EXPECT_EQ(a - a, P{});
  EXPECT_EQ(a.pow(3), (P{1, -3, 3, -1}));
  EXPECT_EQ(a.pow(0), (P{1}));
  EXPECT_EQ((P{1, 2, 3}).derivative(), (P{2, 6}));
  EXPECT_EQ((P{1, 2, 3})(mpq_class(1, 2)), mpq_class(11, 4));
  EXPECT_EQ((P{2, 4}).normalized_at_zero(), (P{1, 2}));
  EXPECT_THROW((P{0, 1}).normalized_at_zero(), InvalidArgument);
  EXPECT_EQ((P{2, 4}).monic(), P(std::vector<mpq_class>{mpq_class(1, 2), 1}));
}

TEST(Polynomial, DivisionAndGcd) {
  const P a = P{1, -73}.pow(3) * P{2, 1};
  const P b = P{1, -73}.pow(2) * P{5, 0, 1};
  auto [q, r] = divmod(a, P{1, -73});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, (P{1, -73}.pow(2) * P{2, 1}));
  EXPECT_EQ(gcd(a, b), (P{1, -73}.pow(2).monic()));
  EXPECT_EQ(gcd(P{}, P{}), (P{}));
  EXPECT_EQ(gcd(P{3}, (P{1, 1})), (P{1}));
  EXPECT_THROW(divmod(a, P{}), InvalidArgument);
  EXPECT_THROW(exact_divide(a, P{1, 1}), InvalidArgument);
  EXPECT_EQ(exact_divide(a, (P{2, 1})), (P{1, -73}.pow(3)));
}

TEST(Polynomial, PrimitivePart) {
  const P p(std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(-3, 4)});
  EXPECT_EQ(primitive_part(p), (P{2, 3}));
}

TEST(Polynomial, SquareFreePart) {
  const P p = P{1, -82, 81}.pow(10);
  EXPECT_EQ(square_free_part(p).monic(), (P{1, -82, 81}).monic());
  EXPECT_EQ(square_free_part(P{1, -1}.pow(3) * P{2, 1}).monic(), (P{1, -1} * P{2, 1}).monic());
}

TEST(Polynomial, SturmCountsDistinctRoots) {
  // (1 - q)(1 - 81 q): roots 1/81 and 1.
  const auto s = sturm_sequence(P{1, -82, 81});
  EXPECT_EQ(count_roots(s, 0, 2), 2);
  EXPECT_EQ(count_roots(s, 0, mpq_class(1, 81)), 1);
  EXPECT_EQ(count_roots(s, mpq_class(1, 81), 1), 1);
  EXPECT_EQ(count_roots(s, mpq_class(1, 2), mpq_class(3, 4)), 0);
  // x^2 + 1 has no real roots.
  EXPECT_EQ(count_roots(sturm_sequence(P{1, 0, 1}), -100, 100), 0);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ((P{1, -73}).to_string(), "1 - 73*q");
  EXPECT_EQ(P{}.to_string(), "0");
}

}  // namespace
}  // namespace phinet
