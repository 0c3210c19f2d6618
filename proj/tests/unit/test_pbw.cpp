#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "natmap/errors.hpp"
#include "natmap/expression.hpp"
#include "natmap/pbw.hpp"
#include "natmap/presentation_io.hpp"
#include "support/printers.hpp"
#include "support/random.hpp"

using namespace natmap;
using namespace natmap::pbw;

namespace {

const Scalar t = Scalar::parameter();
const Scalar one(1);

NCPoly parse(const char* s, const PresentationPtr& p) { return expr::parse_expression(s, p); }

NCPoly omega(const PresentationPtr& p) { return parse("4*e*f + h^2 - 2*(q-1)*h", p); }

std::filesystem::path data(const char* name) { return std::filesystem::path(NATMAP_DATA_DIR) / "presentations" / name; }

}  // namespace

TEST_CASE("normal forms in B") {
  auto B = builtin::B();
  CHECK(parse("f*e", B) == parse("e*f - (t-1)*h", B));
  CHECK(to_string(parse("f*e", B)) == "e*f - (t - 1)*h");
  CHECK(parse("e^0", B) == NCPoly::constant(B, one));
  CHECK(parse("h*e", B) == parse("e*h + 2*(t-1)*e", B));
  CHECK(parse("h*f", B) == parse("f*h - 2*(t-1)*f", B));
  // (h h) e, rewritten by hand
  CHECK(parse("h*h*e", B) == parse("e*h^2 + 4*(t-1)*e*h + 4*(t-1)^2*e", B));
}

TEST_CASE("commutators of e^n with f") {
  auto Bq = builtin::B_q();
  auto f = NCPoly::generator(Bq, "f");
  auto e = NCPoly::generator(Bq, "e");
  auto h = NCPoly::generator(Bq, "h");
  const Scalar s = t - one;
  for (unsigned n = 1; n <= 6; ++n) {
    NCPoly expected = Scalar(long(n)) * s * pow(e, n - 1) * h + Scalar(long(n * (n - 1))) * s * s * pow(e, n - 1);
    CHECK(commutator(pow(e, n), f) == expected);
  }
}

TEST_CASE("Casimir is central in B_q") {
  auto Bq = builtin::B_q();
  NCPoly W = omega(Bq);
  for (std::size_t i = 0; i < 3; ++i) CHECK(commutator(W, NCPoly::generator(Bq, i)).is_zero());
  CHECK(is_central(W));
  CHECK_FALSE(is_central(NCPoly::generator(Bq, "h")));
}

TEST_CASE("presentation validation") {
  auto rule = [](std::size_t hi, std::size_t lo, Scalar c, Terms tail = {}) { return SwapRule{hi, lo, c, tail}; };
  using V = std::vector<SwapRule>;
  CHECK_THROWS_AS(PBWPresentation::create("x", {}, std::nullopt, {}), InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "a"}, std::nullopt, V{rule(1, 0, one)}), InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{}), InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{rule(1, 0, Scalar())}), InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{rule(1, 0, t)}), InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{rule(1, 0, one, {{{3, 0}, one}})}),
                  InvalidPresentation);
  // b*a -> a*b + b^2 is not below a*b
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{rule(1, 0, one, {{{0, 2}, one}})}),
                  InvalidPresentation);
  CHECK_THROWS_AS(PBWPresentation::create("x", {"a", "b"}, Parameter{"a", std::nullopt}, V{rule(1, 0, one)}),
                  InvalidPresentation);
  auto ok = PBWPresentation::create("x", {"a", "b"}, std::nullopt, V{rule(1, 0, Scalar(2), {{{2, 0}, one}})});
  CHECK(ok->confluent());
}

TEST_CASE("overlap checks") {
  CHECK(check_pbw_overlaps(*builtin::B()).passed);
  CHECK(check_pbw_overlaps(*builtin::B_q()).passed);
  CHECK(check_pbw_overlaps(*builtin::Usl2()).passed);
  for (long l : {2, 3, 5}) CHECK(check_pbw_overlaps(*builtin::B_lambda(Rational(l))).passed);
  CHECK(check_pbw_overlaps(*builtin::B_lambda(Rational(1))).passed);
  CHECK(check_pbw_overlaps(*builtin::commutative({"x", "y", "z", "w"})).passed);
}

TEST_CASE("corrupted h*e rule breaks the diamond") {
  auto B = builtin::B();
  std::vector<SwapRule> rules = B->rules();
  for (auto& r : rules)
    if (r.high == 2 && r.low == 0) r.tail = {{{0, 1, 0}, Scalar(2) * (t - one)}};
  auto bad = PBWPresentation::create("corrupted", {"e", "f", "h"}, Parameter{"t", std::nullopt}, rules);
  CHECK_FALSE(bad->confluent());
  auto report = check_pbw_overlaps(*bad);
  REQUIRE(report.entries.size() == 1);
  const auto& entry = report.entries[0];
  CHECK_FALSE(entry.agrees);
  NCPoly diff = NCPoly(bad, entry.left_first) - NCPoly(bad, entry.right_first);
  const Scalar s = t - one;
  NCPoly h = NCPoly::generator(bad, "h");
  bool sign_ok = diff == Scalar(2) * s * s * h || diff == Scalar(-2) * s * s * h;
  CHECK(sign_ok);
  CHECK_THROWS_AS(growth_dimensions(*bad, 3), PreconditionError);
}

TEST_CASE("growth is C(d+3,3)") {
  for (const auto& p : {builtin::B(), builtin::B_lambda(Rational(3)), builtin::Usl2()}) {
    auto dims = growth_dimensions(*p, 12);
    REQUIRE(dims.size() == 13);
    for (std::size_t d = 0; d <= 12; ++d) CHECK(dims[d] == (d + 1) * (d + 2) * (d + 3) / 6);
    double slope = gk_slope_estimate(dims, 6, 12);
    CHECK(slope >= 2.8);
    CHECK(slope <= 3.2);
  }
  auto two = growth_dimensions(*builtin::commutative({"x", "y"}), 10);
  CHECK(two[10] == 66);
  CHECK(gk_slope_estimate(two, 5, 10) == doctest::Approx(2.0).epsilon(0.1));
  std::vector<std::size_t> tiny{1, 2};
  CHECK_THROWS_AS(gk_slope_estimate(tiny, 0, 1), PreconditionError);
}

TEST_CASE("specialization") {
  auto B = builtin::B();
  auto two = specialize(*B, Rational(2));
  CHECK(same_algebra(*two, *builtin::B_lambda(Rational(2))));
  auto at_one = specialize(*B, Rational(1));
  CHECK(same_algebra(*at_one, *builtin::B_lambda(Rational(1))));
  CHECK(parse("f*e", at_one) == parse("e*f", at_one));
  CHECK_FALSE(same_algebra(*two, *builtin::B_lambda(Rational(3))));
  CHECK(same_algebra(*B, *builtin::B_q()));
}

TEST_CASE("mixed presentations are rejected") {
  auto a = NCPoly::generator(builtin::B(), "e");
  auto b = NCPoly::generator(builtin::Usl2(), "E");
  CHECK_THROWS_AS(multiply(a, b), MixedPresentations);
  CHECK_THROWS_AS(commutator(a, b), MixedPresentations);
  CHECK_THROWS_AS(a + b, MixedPresentations);
}

TEST_CASE("Usl2 maps into B_q") {
  auto Bq = builtin::B_q();
  auto U = builtin::Usl2();
  const Scalar inv = (t - one).inverse();
  std::vector<NCPoly> imgs;
  for (std::size_t i = 0; i < 3; ++i) imgs.push_back(inv * NCPoly::generator(Bq, i));
  auto m = make_morphism(U, Bq, imgs);
  CHECK(m.verified);
  for (const auto& r : morphism_residuals(m)) CHECK(r.is_zero());

  std::vector<NCPoly> naive;
  for (std::size_t i = 0; i < 3; ++i) naive.push_back(NCPoly::generator(Bq, i));
  CHECK_FALSE(make_morphism(U, Bq, naive).verified);
  CHECK_THROWS_AS(make_morphism(U, Bq, {naive[0]}), PreconditionError);
}

TEST_CASE("weight modules of B_q") {
  auto Bq = builtin::B_q();
  for (unsigned n = 1; n <= 6; ++n) {
    auto r = sl2_representation(n);
    CHECK(r.dimension == n);
    CHECK(relations_hold(r));
    const auto& E = r.matrices[0];
    for (unsigned i = 0; i + 1 < n; ++i) CHECK(E(i, i + 1) == Scalar(long((i + 1) * (n - 1 - i))) * (t - one));
    // Omega acts as (q-1)^2 (n^2 - 1).
    auto W = act(r, omega(Bq));
    CHECK(W == ScalarMatrix::identity(n) * (Scalar(long(n * n) - 1) * (t - one) * (t - one)));
    CHECK(annihilates(r, pow(NCPoly::generator(Bq, "e"), n)));
    if (n > 1) CHECK_FALSE(annihilates(r, pow(NCPoly::generator(Bq, "e"), n - 1)));
  }
  CHECK_THROWS_AS(sl2_representation(0), PreconditionError);
}

TEST_CASE("expression parser errors carry positions") {
  auto B = builtin::B();
  auto pos = [&](const char* s) {
    try {
      expr::parse_expression(s, B);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("e*") == 2);
  CHECK(pos("e + x") == 4);
  CHECK(pos("(e") == 2);
  CHECK(pos("e/f") == 1);
  CHECK(pos("e $ f") == 2);
  CHECK(pos("e^-1") == 2);
  CHECK(pos("e/0") == 1);
  CHECK(pos("e^2*f") == -1);
  CHECK(parse("(t-1)^-1*(t^2-1)*e", B) == parse("(t+1)*e", B));
  CHECK(parse("e/2", B) == Scalar(Rational(1, 2)) * NCPoly::generator(B, "e"));
}

TEST_CASE("fixed-parameter expressions use the parameter value") {
  auto B2 = builtin::B_lambda(Rational(2));
  CHECK(parse("t*e", B2) == parse("2*e", B2));
  CHECK(parse("f*e", B2) == parse("e*f - h", B2));
}

TEST_CASE("associativity on random triples") {
  natmap::testing::Gen g(2024);
  auto B = builtin::B();
  auto coeff = [&] { return g.laurent(0, 2); };
  for (int i = 0; i < 200; ++i) {
    NCPoly a = g.ncpoly(B, 3, 2, coeff), b = g.ncpoly(B, 3, 2, coeff), c = g.ncpoly(B, 3, 2, coeff);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("leading terms multiply") {
  natmap::testing::Gen g(99);
  auto B = builtin::B();
  auto coeff = [&] { return g.regular_at_one(); };
  int checked = 0;
  while (checked < 100) {
    NCPoly a = g.ncpoly(B, 3, 3, coeff), b = g.ncpoly(B, 3, 3, coeff);
    if (a.is_zero() || b.is_zero()) continue;
    NCPoly ab = a * b;
    Exponents sum = a.leading_monomial();
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += b.leading_monomial()[k];
    CHECK(ab.leading_monomial() == sum);
    CHECK(ab.coeff(sum) == a.coeff(a.leading_monomial()) * b.coeff(b.leading_monomial()));
    ++checked;
  }
}

TEST_CASE("print and parse round trip") {
  natmap::testing::Gen g(17);
  for (const auto& p : {builtin::B(), builtin::B_q()}) {
    auto coeff = [&] { return g.regular_at_one(); };
    for (int i = 0; i < 100; ++i) {
      NCPoly z = g.ncpoly(p, 4, 3, coeff);
      CHECK(expr::parse_expression(to_string(z), p) == z);
    }
  }
  auto U = builtin::Usl2();
  CHECK(to_string(parse("F*E", U)) == "E*F - H");
  CHECK(to_string(NCPoly(U)) == "0");
}

TEST_CASE("shipped presentation files match the constructors") {
  CHECK(same_algebra(*load_presentation(data("B.json")), *builtin::B()));
  CHECK(same_algebra(*load_presentation(data("B_q.json")), *builtin::B_q()));
  CHECK(same_algebra(*load_presentation(data("B_lambda_2.json")), *builtin::B_lambda(Rational(2))));
  CHECK(same_algebra(*load_presentation(data("Usl2.json")), *builtin::Usl2()));
  CHECK(load_presentation(data("B_q.json"))->symbol() == "q");
}

TEST_CASE("presentation JSON round trip and schema errors") {
  for (const auto& p : {builtin::B(), builtin::B_q(), builtin::B_lambda(Rational(5, 3)), builtin::Usl2()}) {
    auto j = presentation_to_json(*p);
    auto back = presentation_from_json(nlohmann::json::parse(j.dump()));
    CHECK(same_algebra(*back, *p));
    CHECK(back->name() == p->name());
  }
  auto base = nlohmann::json::parse(presentation_to_json(*builtin::B()).dump());
  auto broken = base;
  broken.erase("generators");
  CHECK_THROWS_AS(presentation_from_json(broken), InvalidPresentation);
  broken = base;
  broken["relations"][0]["lhs"] = {"e", "f"};
  CHECK_THROWS_AS(presentation_from_json(broken), InvalidPresentation);
  broken = base;
  broken["relations"][0]["rhs"][0]["word"] = {"h", "e"};
  CHECK_THROWS_AS(presentation_from_json(broken), InvalidPresentation);
  broken = base;
  broken["relations"][0]["coeff"] = "t +";
  CHECK_THROWS_AS(presentation_from_json(broken), ParseError);
  broken = base;
  broken["relations"].erase(2);
  CHECK_THROWS_AS(presentation_from_json(broken), InvalidPresentation);
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.json"), InputError);
}
