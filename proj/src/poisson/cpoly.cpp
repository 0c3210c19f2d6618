#include <algorithm>

#include "detail/term_format.hpp"
#include "natmap/errors.hpp"
#include "natmap/poisson.hpp"

namespace natmap::poisson {

namespace {

void add_into(CPoly::TermMap& acc, const Exponents& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

unsigned degree_of(const Exponents& m) {
  unsigned d = 0;
  for (unsigned a : m) d += a;
  return d;
}

}  // namespace

CPoly::CPoly(std::size_t nvars, TermMap terms) : nvars_(nvars) {
  for (auto& [m, c] : terms) {
    if (m.size() != nvars_) throw PreconditionError("exponent vector length does not match variable count");
    c.canonicalize();
    if (c != 0) terms_.emplace(m, std::move(c));
  }
}

CPoly CPoly::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Exponents(nvars, 0), c);
}

CPoly CPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw PreconditionError("variable index out of range");
  Exponents m(nvars, 0);
  m[i] = 1;
  return monomial(nvars, std::move(m));
}

CPoly CPoly::monomial(std::size_t nvars, Exponents m, const Rational& c) {
  CPoly p(nvars);
  if (m.size() != nvars) throw PreconditionError("exponent vector length does not match variable count");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Rational CPoly::coeff(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(degree_of(m)));
  return d;
}

bool CPoly::is_homogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return static_cast<int>(degree_of(t.first)) == d; });
}

CPoly CPoly::derivative(std::size_t i) const {
  CPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Exponents dm = m;
    --dm[i];
    add_into(out.terms_, dm, c * m[i]);
  }
  return out;
}

void CPoly::check(const CPoly& o) const {
  if (nvars_ != o.nvars_) throw PreconditionError("polynomials over different variable counts");
}

CPoly CPoly::operator-() const {
  CPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
  check(o);
  TermMap out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Exponents m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      add_into(out, m, ca * cb);
    }
  terms_ = std::move(out);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CPoly pow(const CPoly& p, unsigned k) {
  CPoly result = CPoly::constant(p.nvars(), Rational(1));
  CPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const CPoly& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  if (vars.size() != p.nvars()) throw PreconditionError("variable name count does not match polynomial");
  std::vector<const CPoly::TermMap::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return pbw::deglex_less(b->first, a->first);
  });
  std::string out;
  for (const auto* t : order)
    detail::append_term(out, arith::Scalar(t->second), "t", detail::monomial_text(t->first, vars));
  return out;
}

}  // namespace natmap::poisson
