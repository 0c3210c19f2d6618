#pragma once

#include <string>
#include <string_view>

#include "natmap/arith.hpp"

namespace natmap::detail {

/// Appends `coeff * monomial` to a sum being built in `out`. `monomial` is
/// empty for the constant term. The output re-parses under the expression
/// grammar (explicit '*', '^', left-associative '/').
inline void append_term(std::string& out, const arith::Scalar& coeff, std::string_view var,
                        const std::string& monomial) {
  const arith::UniPoly& num = coeff.num();
  const bool negative = num.leading() < 0;
  const arith::Scalar mag = negative ? -coeff : coeff;

  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";

  std::string c;
  if (mag.is_one()) {
    c = monomial.empty() ? "1" : "";
  } else if (mag.is_constant() || !mag.is_polynomial() || mag.num().is_monomial()) {
    c = mag.to_string(var);
  } else {
    c = "(" + mag.to_string(var) + ")";
  }
  out += c;
  if (!monomial.empty()) {
    if (!c.empty()) out += "*";
    out += monomial;
  }
}

/// "e^2*f*h" style monomial text; empty for the unit monomial.
template <class Exps, class Names>
std::string monomial_text(const Exps& m, const Names& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace natmap::detail
