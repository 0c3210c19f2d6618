#include <cmath>
#include <set>

#include "natmap/errors.hpp"
#include "natmap/pbw.hpp"

namespace natmap::pbw {

namespace {

void accumulate(Terms& acc, const Terms& t, const Scalar& c) {
  for (const auto& [m, sc] : t) {
    auto [it, inserted] = acc.try_emplace(m, sc * c);
    if (inserted) {
      if (it->second.is_zero()) acc.erase(it);
      continue;
    }
    it->second += sc * c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Terms reduce_expansion(Rewriter& rw, const std::vector<std::pair<Scalar, Word>>& expansion) {
  Terms out;
  for (const auto& [c, w] : expansion) accumulate(out, rw.normal_form(w), c);
  return out;
}

}  // namespace

OverlapReport check_pbw_overlaps(const PBWPresentation& p) {
  OverlapReport report;
  Rewriter rw(p);
  const std::size_t n = p.generator_count();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const Word w{k, j, i};
        OverlapEntry e{k, j, i, reduce_expansion(rw, rw.rewrite_at(w, 0)),
                       reduce_expansion(rw, rw.rewrite_at(w, 1)), false};
        e.agrees = e.left_first == e.right_first;
        report.passed = report.passed && e.agrees;
        report.entries.push_back(std::move(e));
      }
  return report;
}

std::vector<std::size_t> growth_dimensions(const PBWPresentation& p, unsigned d_max) {
  if (!p.confluent())
    throw PreconditionError("growth_dimensions needs a confluent presentation ('" + p.name() + "' is not)");
  const std::size_t n = p.generator_count();
  Rewriter rw(p);

  std::vector<std::size_t> dims{1};
  std::set<Exponents> level{Exponents(n, 0)};
  std::size_t total = 1;
  for (unsigned d = 1; d <= d_max; ++d) {
    std::set<Exponents> next;
    std::set<Exponents> support;
    for (const Exponents& m : level) {
      Word w = word_of(m);
      w.push_back(0);
      for (std::size_t g = 0; g < n; ++g) {
        w.back() = g;
        const Terms& nf = rw.normal_form(w);
        const Exponents* lead = nullptr;
        for (const auto& [mono, c] : nf) {
          if (total_degree(mono) > d) throw std::logic_error("rewriting raised the degree");
          if (total_degree(mono) == d) support.insert(mono);
          if (!lead || deglex_less(*lead, mono)) lead = &mono;
        }
        if (lead && total_degree(*lead) == d) next.insert(*lead);
      }
    }
    // Distinct leading monomials are independent; the span sits inside the
    // degree-d support, so equal counts pin the dimension exactly.
    if (next.size() != support.size())
      throw std::logic_error("leading monomials do not fill the degree-" + std::to_string(d) + " support");
    total += next.size();
    dims.push_back(total);
    level = std::move(next);
  }
  return dims;
}

double gk_slope_estimate(std::span<const std::size_t> dims, unsigned d_from, unsigned d_to) {
  if (d_from == 0 || d_to >= dims.size() || d_to < d_from + 2)
    throw PreconditionError("slope fit needs at least three points with d >= 1");
  // Least squares on columns (log d, 1, 1/d) via the normal equations.
  double a[3][4] = {};
  for (unsigned d = d_from; d <= d_to; ++d) {
    const double x[3] = {std::log(static_cast<double>(d)), 1.0, 1.0 / d};
    const double y = std::log(static_cast<double>(dims[d]));
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += x[r] * x[c];
      a[r][3] += x[r] * y;
    }
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[piv][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[0][3] / a[0][0];
}

AlgebraMorphism make_morphism(PresentationPtr source, PresentationPtr target, std::vector<NCPoly> images,
                              Scalar parameter_image) {
  if (images.size() != source->generator_count())
    throw PreconditionError("morphism needs one image per source generator");
  for (const auto& im : images)
    if (im.presentation() != target && !same_algebra(*im.presentation(), *target))
      throw MixedPresentations(im.presentation()->name(), target->name());
  AlgebraMorphism m{std::move(source), std::move(target), std::move(images), std::move(parameter_image), false};
  m.verified = check_morphism(m);
  return m;
}

std::vector<NCPoly> morphism_residuals(const AlgebraMorphism& m) {
  const auto& src = *m.source;
  auto map_scalar = [&](const Scalar& c) {
    return src.has_symbolic_parameter() ? c.compose(m.parameter_image) : c;
  };
  auto map_monomial = [&](const Exponents& e) {
    NCPoly acc = NCPoly::constant(m.target, Scalar(1));
    for (std::size_t g : word_of(e)) acc = multiply(acc, m.images[g]);
    return acc;
  };

  std::vector<NCPoly> residuals;
  for (const auto& r : src.rules()) {
    const NCPoly& xj = m.images[r.high];
    const NCPoly& xi = m.images[r.low];
    NCPoly res = multiply(xj, xi) - map_scalar(r.coeff) * multiply(xi, xj);
    for (const auto& [mono, c] : r.tail) res -= map_scalar(c) * map_monomial(mono);
    residuals.push_back(std::move(res));
  }
  return residuals;
}

bool check_morphism(const AlgebraMorphism& m) {
  if (!m.target->confluent()) throw PreconditionError("morphism target is not confluent");
  for (const auto& r : morphism_residuals(m))
    if (!r.is_zero()) return false;
  return true;
}

Representation sl2_representation(unsigned n) {
  if (n == 0) throw PreconditionError("representation dimension must be at least 1");
  auto bq = builtin::B_q();
  const Scalar qm1 = Scalar::parameter() - Scalar(1);
  ScalarMatrix e(n, n), f(n, n), h(n, n);
  for (unsigned i = 0; i < n; ++i) {
    h(i, i) = qm1 * Scalar(static_cast<long>(n) - 1 - 2 * static_cast<long>(i));
    if (i + 1 < n) {
      f(i + 1, i) = qm1;
      // E v_{i+1} = (i+1)(n-1-i) v_i
      e(i, i + 1) = qm1 * Scalar(static_cast<long>((i + 1) * (n - 1 - i)));
    }
  }
  const std::size_t ie = *bq->index_of("e");
  const std::size_t jf = *bq->index_of("f");
  const std::size_t kh = *bq->index_of("h");
  std::vector<ScalarMatrix> mats(3, ScalarMatrix(n, n));
  mats[ie] = std::move(e);
  mats[jf] = std::move(f);
  mats[kh] = std::move(h);
  return Representation{bq, n, std::move(mats)};
}

ScalarMatrix act(const Representation& r, const NCPoly& z) {
  if (z.presentation() != r.presentation && !same_algebra(*z.presentation(), *r.presentation))
    throw MixedPresentations(z.presentation()->name(), r.presentation->name());
  ScalarMatrix out(r.dimension, r.dimension);
  for (const auto& [m, c] : z.terms()) {
    ScalarMatrix term = ScalarMatrix::identity(r.dimension);
    for (std::size_t g : word_of(m)) term = term * r.matrices[g];
    out += c * term;
  }
  return out;
}

bool relations_hold(const Representation& r) {
  const auto& p = *r.presentation;
  for (const auto& rule : p.rules()) {
    const auto& mj = r.matrices[rule.high];
    const auto& mi = r.matrices[rule.low];
    ScalarMatrix res = mj * mi - rule.coeff * (mi * mj);
    res -= act(r, NCPoly(r.presentation, rule.tail));
    if (!res.is_zero()) return false;
  }
  return true;
}

bool annihilates(const Representation& r, const NCPoly& z) { return act(r, z).is_zero(); }

namespace builtin {

namespace {

Exponents unit(std::size_t n, std::size_t i) {
  Exponents m(n, 0);
  m[i] = 1;
  return m;
}

// ef-fe=(s)h, he-eh=2(s)e, hf-fh=-2(s)f as swap rules for order e < f < h.
std::vector<SwapRule> sl2_family_rules(const Scalar& s) {
  const std::size_t e = 0, f = 1, h = 2;
  auto tail = [&](std::size_t g, const Scalar& c) { return c.is_zero() ? Terms{} : Terms{{unit(3, g), c}}; };
  return {
      SwapRule{f, e, Scalar(1), tail(h, -s)},
      SwapRule{h, e, Scalar(1), tail(e, Scalar(2) * s)},
      SwapRule{h, f, Scalar(1), tail(f, Scalar(-2) * s)},
  };
}

}  // namespace

PresentationPtr B() {
  return PBWPresentation::create("B", {"e", "f", "h"}, Parameter{"t", std::nullopt},
                                 sl2_family_rules(Scalar::parameter() - Scalar(1)));
}

PresentationPtr B_q() {
  return PBWPresentation::create("B_q", {"e", "f", "h"}, Parameter{"q", std::nullopt},
                                 sl2_family_rules(Scalar::parameter() - Scalar(1)));
}

PresentationPtr B_lambda(const Rational& lambda) {
  return PBWPresentation::create("B_lambda(" + arith::to_string(lambda) + ")", {"e", "f", "h"}, Parameter{"t", lambda},
                                 sl2_family_rules(Scalar(lambda - 1)));
}

PresentationPtr Usl2() {
  auto rules = sl2_family_rules(Scalar(1));
  return PBWPresentation::create("Usl2", {"E", "F", "H"}, std::nullopt, std::move(rules));
}

PresentationPtr commutative(std::vector<std::string> generators, std::optional<Parameter> parameter) {
  std::vector<SwapRule> rules;
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) rules.push_back(SwapRule{j, i, Scalar(1), {}});
  return PBWPresentation::create("commutative", std::move(generators), std::move(parameter), std::move(rules));
}

}  // namespace builtin

}  // namespace natmap::pbw
