#include <algorithm>
#include <cctype>
#include <set>

#include "natmap/errors.hpp"
#include "natmap/pbw.hpp"

namespace natmap::pbw {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

unsigned total_degree(const Exponents& m) {
  unsigned d = 0;
  for (unsigned a : m) d += a;
  return d;
}

bool deglex_less(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da < db;
  // A larger exponent on an earlier generator is a larger monomial.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word word_of(const Exponents& m) {
  Word w;
  for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], i);
  return w;
}

PresentationPtr PBWPresentation::create(std::string name, std::vector<std::string> generators,
                                        std::optional<Parameter> parameter,
                                        std::vector<SwapRule> rules) {
  const std::size_t n = generators.size();
  if (n == 0) throw InvalidPresentation("presentation '" + name + "' has no generators");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!is_identifier(g)) throw InvalidPresentation("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw InvalidPresentation("duplicate generator '" + g + "'");
  }
  if (parameter) {
    if (!is_identifier(parameter->symbol))
      throw InvalidPresentation("invalid parameter symbol '" + parameter->symbol + "'");
    if (seen.count(parameter->symbol))
      throw InvalidPresentation("parameter symbol clashes with a generator");
  }

  std::shared_ptr<PBWPresentation> p(new PBWPresentation());
  p->name_ = std::move(name);
  p->parameter_ = std::move(parameter);
  p->rule_slot_.assign(n * n, rules.size());

  for (std::size_t r = 0; r < rules.size(); ++r) {
    const SwapRule& rule = rules[r];
    if (rule.high >= n || rule.low >= rule.high)
      throw InvalidPresentation("swap rule must relate x_j * x_i with j > i");
    std::size_t& slot = p->rule_slot_[rule.high * n + rule.low];
    if (slot != rules.size())
      throw InvalidPresentation("duplicate swap rule for " + generators[rule.high] + "*" +
                                generators[rule.low]);
    slot = r;
    if (rule.coeff.is_zero()) throw InvalidPresentation("swap rule coefficient must be nonzero");

    const bool fixed = p->parameter_ && !p->parameter_->symbolic();
    const bool constant_only = !p->parameter_ || fixed;
    if (constant_only && !rule.coeff.is_constant())
      throw InvalidPresentation("coefficient depends on a parameter the presentation does not have");

    for (const auto& [m, c] : rule.tail) {
      if (m.size() != n) throw InvalidPresentation("tail monomial has the wrong length");
      if (c.is_zero()) throw InvalidPresentation("tail stores a zero coefficient");
      if (constant_only && !c.is_constant())
        throw InvalidPresentation("tail coefficient depends on a parameter the presentation does not have");
      unsigned d = total_degree(m);
      if (d > 2) throw InvalidPresentation("swap-rule tail has degree above 2");
      if (d == 2) {
        Word tw = word_of(m);
        Word lead{rule.low, rule.high};
        if (!(tw < lead))
          throw InvalidPresentation("degree-2 tail term is not below " + generators[rule.low] + "*" +
                                    generators[rule.high]);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (p->rule_slot_[j * n + i] == rules.size())
        throw InvalidPresentation("missing swap rule for " + generators[j] + "*" + generators[i]);

  std::sort(rules.begin(), rules.end(), [](const SwapRule& a, const SwapRule& b) {
    return std::pair(a.high, a.low) < std::pair(b.high, b.low);
  });
  for (std::size_t r = 0; r < rules.size(); ++r) p->rule_slot_[rules[r].high * n + rules[r].low] = r;
  p->rules_ = std::move(rules);
  p->generators_ = std::move(generators);
  p->confluent_ = check_pbw_overlaps(*p).passed;
  return p;
}

std::optional<std::size_t> PBWPresentation::index_of(std::string_view generator) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == generator) return i;
  return std::nullopt;
}

const SwapRule& PBWPresentation::rule(std::size_t high, std::size_t low) const {
  return rules_[rule_slot_[high * generators_.size() + low]];
}

bool same_algebra(const PBWPresentation& a, const PBWPresentation& b) {
  if (&a == &b) return true;
  auto value = [](const PBWPresentation& p) -> std::optional<std::optional<Rational>> {
    if (!p.parameter()) return std::nullopt;
    return p.parameter()->value;
  };
  // A fixed fiber and a parameter-free algebra with constant rules are the
  // same algebra; compare values only when both are symbolic or both fixed.
  bool a_sym = a.has_symbolic_parameter();
  bool b_sym = b.has_symbolic_parameter();
  if (a_sym != b_sym) return false;
  if (!a_sym) {
    auto va = value(a);
    auto vb = value(b);
    if (va && vb && *va != *vb) return false;
  }
  return a.generators() == b.generators() && a.rules() == b.rules();
}

PresentationPtr specialize(const PBWPresentation& p, const Rational& value, std::string name) {
  if (!p.has_symbolic_parameter())
    throw PreconditionError("presentation '" + p.name() + "' has no symbolic parameter");
  std::vector<SwapRule> rules;
  for (const auto& r : p.rules()) {
    SwapRule s{r.high, r.low, Scalar(arith::evaluate(r.coeff, value)), {}};
    for (const auto& [m, c] : r.tail) {
      Rational v = arith::evaluate(c, value);
      if (v != 0) s.tail.emplace(m, Scalar(v));
    }
    if (s.coeff.is_zero())
      throw InvalidPresentation("swap coefficient vanishes at " + arith::to_string(value));
    rules.push_back(std::move(s));
  }
  if (name.empty()) name = p.name() + "@" + arith::to_string(value);
  return PBWPresentation::create(std::move(name), p.generators(),
                                 Parameter{p.parameter()->symbol, value}, std::move(rules));
}

}  // namespace natmap::pbw
