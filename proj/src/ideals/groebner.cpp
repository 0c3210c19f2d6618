#include <algorithm>
#include <deque>

#include "natmap/errors.hpp"
#include "natmap/ideals.hpp"

namespace natmap::ideals {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

CPoly shifted(const CPoly& g, const Exponents& by, const Rational& c) {
  CPoly::TermMap t;
  for (const auto& [m, v] : g.terms()) {
    Exponents s = m;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
    t.emplace(std::move(s), v * c);
  }
  return CPoly(g.nvars(), std::move(t));
}

CPoly make_monic(const CPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Rational lc = leading_term(p, order).coeff;
  return lc == 1 ? p : p * (Rational(1) / lc);
}

}  // namespace

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  const std::size_t n = a.size();
  if (!precedence.empty() && precedence.size() != n)
    throw PreconditionError("monomial order precedence has the wrong length");
  auto var = [this](std::size_t k) { return precedence.empty() ? k : precedence[k]; };
  if (kind == Kind::Lex) {
    for (std::size_t k = 0; k < n; ++k)
      if (a[var(k)] != b[var(k)]) return a[var(k)] < b[var(k)];
    return false;
  }
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  // Reverse: the least significant variable decides, larger exponent loses.
  for (std::size_t k = n; k-- > 0;)
    if (a[var(k)] != b[var(k)]) return a[var(k)] > b[var(k)];
  return false;
}

std::string MonomialOrder::name() const { return kind == Kind::Lex ? "lex" : "degrevlex"; }

LeadingTerm leading_term(const CPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw PreconditionError("zero polynomial has no leading term");
  auto it = p.terms().begin();
  for (auto jt = std::next(it); jt != p.terms().end(); ++jt)
    if (order.less(it->first, jt->first)) it = jt;
  return {it->first, it->second};
}

CPoly reduce(const CPoly& p, std::span<const CPoly> basis, const MonomialOrder& order) {
  std::vector<LeadingTerm> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(leading_term(g, order));

  CPoly rem(p.nvars());
  CPoly f = p;
  while (!f.is_zero()) {
    LeadingTerm lt = leading_term(f, order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(leads[i].monomial, lt.monomial)) continue;
      f -= shifted(basis[i], quotient(lt.monomial, leads[i].monomial), lt.coeff / leads[i].coeff);
      divided = true;
      break;
    }
    if (!divided) {
      CPoly term = CPoly::monomial(p.nvars(), lt.monomial, lt.coeff);
      rem += term;
      f -= term;
    }
  }
  return rem;
}

CPoly s_polynomial(const CPoly& a, const CPoly& b, const MonomialOrder& order) {
  LeadingTerm la = leading_term(a, order);
  LeadingTerm lb = leading_term(b, order);
  Exponents l = lcm(la.monomial, lb.monomial);
  return shifted(a, quotient(l, la.monomial), Rational(1) / la.coeff) -
         shifted(b, quotient(l, lb.monomial), Rational(1) / lb.coeff);
}

std::vector<CPoly> groebner(std::span<const CPoly> generators, const MonomialOrder& order) {
  std::vector<CPoly> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(make_monic(p, order));
  if (g.empty()) return g;

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(leading_term(g[i], order).monomial, leading_term(g[j], order).monomial)) continue;
    CPoly r = reduce(s_polynomial(g[i], g[j], order), g, order);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimal: drop elements whose leading monomial is a multiple of another's.
  std::vector<Exponents> lms;
  for (const auto& p : g) lms.push_back(leading_term(p, order).monomial);
  std::vector<CPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(lms[j], lms[i])) continue;
      // Equal leading monomials: keep the first occurrence only.
      redundant = lms[j] != lms[i] || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce: reduce every element by the others.
  std::vector<CPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    LeadingTerm lt = leading_term(minimal[i], order);
    CPoly tail = minimal[i] - CPoly::monomial(minimal[i].nvars(), lt.monomial, lt.coeff);
    CPoly r = CPoly::monomial(minimal[i].nvars(), lt.monomial, lt.coeff) + reduce(tail, others, order);
    reduced.push_back(make_monic(r, order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const CPoly& a, const CPoly& b) {
    return order.less(leading_term(b, order).monomial, leading_term(a, order).monomial);
  });
  return reduced;
}

bool buchberger_criterion_holds(std::span<const CPoly> basis, const MonomialOrder& order) {
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

}  // namespace natmap::ideals
