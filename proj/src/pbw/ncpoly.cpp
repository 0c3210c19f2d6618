#include <algorithm>

#include "detail/term_format.hpp"
#include "natmap/errors.hpp"
#include "natmap/pbw.hpp"

namespace natmap::pbw {

namespace {

void add_into(Terms& acc, const Exponents& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

}  // namespace

NCPoly::NCPoly(PresentationPtr p) : pres_(std::move(p)) {
  if (!pres_) throw PreconditionError("NCPoly needs a presentation");
}

NCPoly::NCPoly(PresentationPtr p, Terms terms) : NCPoly(std::move(p)) {
  for (auto& [m, c] : terms) {
    if (m.size() != pres_->generator_count())
      throw PreconditionError("exponent vector length does not match the presentation");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

NCPoly NCPoly::constant(PresentationPtr p, const Scalar& c) {
  Exponents zero(p->generator_count(), 0);
  return monomial(std::move(p), std::move(zero), c);
}

NCPoly NCPoly::generator(PresentationPtr p, std::size_t index) {
  if (index >= p->generator_count()) throw PreconditionError("generator index out of range");
  Exponents m(p->generator_count(), 0);
  m[index] = 1;
  return monomial(std::move(p), std::move(m));
}

NCPoly NCPoly::generator(PresentationPtr p, std::string_view name) {
  auto idx = p->index_of(name);
  if (!idx) throw PreconditionError("unknown generator '" + std::string(name) + "'");
  return generator(std::move(p), *idx);
}

NCPoly NCPoly::monomial(PresentationPtr p, Exponents m, const Scalar& c) {
  NCPoly out(std::move(p));
  if (m.size() != out.pres_->generator_count())
    throw PreconditionError("exponent vector length does not match the presentation");
  if (!c.is_zero()) out.terms_.emplace(std::move(m), c);
  return out;
}

Scalar NCPoly::coeff(const Exponents& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

const Exponents& NCPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero element has no leading monomial");
  auto it = std::max_element(terms_.begin(), terms_.end(),
                             [](const auto& a, const auto& b) { return deglex_less(a.first, b.first); });
  return it->first;
}

int NCPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
  return d;
}

void NCPoly::check_compatible(const NCPoly& o) const {
  if (pres_ != o.pres_ && !same_algebra(*pres_, *o.pres_))
    throw MixedPresentations(pres_->name(), o.pres_->name());
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_into(terms_, m, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) { return multiply(a, b); }

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.pres_ != b.pres_ && !same_algebra(*a.pres_, *b.pres_)) return false;
  return a.terms_ == b.terms_;
}

const Terms& Rewriter::normal_form(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  std::size_t pos = w.size();
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) {
      pos = i;
      break;
    }

  Terms result;
  if (pos == w.size()) {
    Exponents m(pres_.generator_count(), 0);
    for (std::size_t g : w) ++m[g];
    result.emplace(std::move(m), Scalar(1));
  } else {
    for (auto& [c, word] : rewrite_at(w, pos)) {
      const Terms& sub = normal_form(word);
      for (const auto& [m, sc] : sub) add_into(result, m, sc * c);
    }
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

std::vector<std::pair<Scalar, Word>> Rewriter::rewrite_at(const Word& w, std::size_t pos) const {
  const SwapRule& rule = pres_.rule(w[pos], w[pos + 1]);
  std::vector<std::pair<Scalar, Word>> out;
  Word swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  out.emplace_back(rule.coeff, std::move(swapped));
  for (const auto& [m, c] : rule.tail) {
    Word tw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    Word mid = word_of(m);
    tw.insert(tw.end(), mid.begin(), mid.end());
    tw.insert(tw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    out.emplace_back(c, std::move(tw));
  }
  return out;
}

Terms Rewriter::multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ma, ca] : a) {
    Word wa = word_of(ma);
    for (const auto& [mb, cb] : b) {
      Word w = wa;
      Word wb = word_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      Scalar c = ca * cb;
      for (const auto& [m, sc] : normal_form(w)) add_into(out, m, sc * c);
    }
  }
  return out;
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) {
  if (a.presentation() != b.presentation() && !same_algebra(*a.presentation(), *b.presentation()))
    throw MixedPresentations(a.presentation()->name(), b.presentation()->name());
  Rewriter rw(*a.presentation());
  return NCPoly(a.presentation(), rw.multiply(a.terms(), b.terms()));
}

NCPoly pow(const NCPoly& a, unsigned k) {
  NCPoly result = NCPoly::constant(a.presentation(), Scalar(1));
  if (k == 0) return result;
  Rewriter rw(*a.presentation());
  Terms acc = result.terms();
  for (unsigned i = 0; i < k; ++i) acc = rw.multiply(acc, a.terms());
  return NCPoly(a.presentation(), std::move(acc));
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) {
  if (a.presentation() != b.presentation() && !same_algebra(*a.presentation(), *b.presentation()))
    throw MixedPresentations(a.presentation()->name(), b.presentation()->name());
  Rewriter rw(*a.presentation());
  NCPoly ab(a.presentation(), rw.multiply(a.terms(), b.terms()));
  NCPoly ba(a.presentation(), rw.multiply(b.terms(), a.terms()));
  return ab - ba;
}

bool is_central(const NCPoly& z) {
  const auto& p = z.presentation();
  for (std::size_t g = 0; g < p->generator_count(); ++g)
    if (!commutator(z, NCPoly::generator(p, g)).is_zero()) return false;
  return true;
}

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return deglex_less(b->first, a->first); });
  std::string out;
  const std::string var = p.presentation()->symbol();
  for (const auto* t : order)
    detail::append_term(out, t->second, var, detail::monomial_text(t->first, p.presentation()->generators()));
  return out;
}

}  // namespace natmap::pbw
