#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "natmap/arith.hpp"
#include "natmap/errors.hpp"
#include "natmap/expression.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"
#include "support/random.hpp"

using namespace natmap;
using namespace natmap::arith;

namespace {

const Scalar t = Scalar::parameter();

UniPoly poly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("rational text is canonical p/q") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("-0/7") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("2/"), InputError);
}

TEST_CASE("unipoly basics") {
  UniPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(poly({0, 0, 0}).is_zero());
  UniPoly p = poly({-1, 0, 1});  // t^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 8);
  CHECK(p.to_string("t") == "t^2 - 1");
  CHECK(poly({0, -2}).to_string("q") == "-2*q");
  CHECK(poly({1, 1}) * poly({-1, 1}) == p);
  CHECK(p.valuation() == 0);
  CHECK(UniPoly::monomial(Rational(3), 4).valuation() == 4);
}

TEST_CASE("divmod and gcd") {
  UniPoly a = poly({-1, 0, 1});
  UniPoly b = poly({1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(poly({-2, 0, 2}), poly({2, 2})) == poly({1, 1}));
  CHECK(gcd(poly({1, 1}), poly({-1, 1})).is_one());
  CHECK_THROWS_AS(divmod(a, UniPoly()), ZeroDenominator);

  natmap::testing::Gen g(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> ca, cb;
    for (int k = 0; k < 5; ++k) ca.push_back(g.rational());
    for (int k = 0; k < 3; ++k) cb.push_back(g.rational());
    UniPoly x(ca), y(cb);
    if (y.is_zero()) continue;
    auto [qq, rr] = divmod(x, y);
    CHECK(qq * y + rr == x);
    CHECK(rr.degree() < y.degree());
  }
}

TEST_CASE("divide by t - 1") {
  CHECK(divide_by_t_minus_1(poly({-1, 0, 1})) == poly({1, 1}));
  CHECK(divide_by_t_minus_1(UniPoly()).is_zero());
  CHECK_THROWS_AS(divide_by_t_minus_1(poly({1, 1})), NotDivisible);
}

TEST_CASE("scalar canonical form") {
  Scalar s = Scalar::normalize(poly({-2, 0, 2}), poly({2, 2}));
  CHECK(s == t - Scalar(1));
  CHECK(s.is_polynomial());
  Scalar u = Scalar(1) / (Scalar(2) * t - Scalar(2));
  CHECK(u.den() == poly({-1, 1}));
  CHECK(u.num() == UniPoly(Rational(1, 2)));
  CHECK(u.to_string("q") == "1/2/(q - 1)");
  CHECK_FALSE(u.regular_at(Rational(1)));
  CHECK(u.regular_at(Rational(2)));
  CHECK(evaluate(u, Rational(3)) == Rational(1, 4));
  CHECK_THROWS_AS(evaluate(u, Rational(1)), PoleAtPoint);
  CHECK_THROWS_AS(Scalar::normalize(poly({1}), UniPoly()), ZeroDenominator);
  CHECK_THROWS_AS(Scalar().inverse(), ZeroDenominator);
}

TEST_CASE("scalar laurent predicate") {
  CHECK(pow(t, -2).is_laurent());
  CHECK((t + pow(t, -1)).is_laurent());
  CHECK_FALSE((Scalar(1) / (t - Scalar(1))).is_laurent());
  CHECK(pow(t, -3) * pow(t, 3) == Scalar(1));
}

TEST_CASE("scalar compose") {
  Scalar s = t * t + Scalar(1);
  CHECK(s.compose(t + Scalar(1)) == t * t + Scalar(2) * t + Scalar(2));
  Scalar r = Scalar(1) / t;
  CHECK(r.compose(Scalar(1) / t) == t);
}

TEST_CASE("scalar field axioms on random elements") {
  natmap::testing::Gen g(7);
  for (int i = 0; i < 100; ++i) {
    Scalar a = g.regular_at_one(), b = g.regular_at_one(), c = g.regular_at_one();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(evaluate(a * b, Rational(1)) == evaluate(a, Rational(1)) * evaluate(b, Rational(1)));
  }
}

TEST_CASE("scalar print and parse round trip") {
  natmap::testing::Gen g(5);
  for (int i = 0; i < 100; ++i) {
    Scalar a = g.regular_at_one();
    CHECK(expr::parse_scalar(a.to_string("t"), "t") == a);
    CHECK(expr::parse_scalar(a.to_string("q"), "q") == a);
  }
}

TEST_CASE("scalar matrices") {
  ScalarMatrix m(2, 2);
  m(0, 1) = t;
  m(1, 0) = Scalar(1);
  ScalarMatrix sq = m * m;
  CHECK(sq == ScalarMatrix::identity(2) * t);
  CHECK((m - m).is_zero());
  CHECK_THROWS_AS(ScalarMatrix(0, 3), PreconditionError);
  CHECK_THROWS_AS(m * ScalarMatrix(3, 1), PreconditionError);
}

TEST_CASE("band interpolation matches a Vandermonde solve") {
  natmap::testing::Gen g(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> xs, ys;
    for (long x = 2; x < 7; ++x) {
      xs.emplace_back(x);
      ys.push_back(g.rational(20));
    }
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < xs.size(); ++i) nodes.emplace_back(xs[i], ys[i]);
    Scalar s = interpolate_band(nodes, 0);
    auto c = natmap::testing::vandermonde_solve(xs, ys);
    CHECK(s == Scalar(UniPoly(c)));
  }
}

TEST_CASE("band interpolation with a negative lower exponent") {
  Scalar target = Scalar(3) * pow(t, -2) - t + Scalar(Rational(1, 2));
  std::vector<Node> nodes;
  for (long x = 2; x < 6; ++x) nodes.emplace_back(Rational(x), evaluate(target, Rational(x)));
  CHECK(interpolate_band(nodes, -2) == target);
}

TEST_CASE("band interpolation rejects bad nodes") {
  std::vector<Node> dup{{Rational(2), Rational(1)}, {Rational(2), Rational(3)}};
  CHECK_THROWS_AS(interpolate_band(dup, 0), DuplicateNode);
  std::vector<Node> zero{{Rational(0), Rational(1)}, {Rational(2), Rational(3)}};
  CHECK_THROWS_AS(interpolate_band(zero, -1), PreconditionError);
}
