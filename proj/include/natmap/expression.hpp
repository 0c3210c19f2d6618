#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "natmap/arith.hpp"
#include "natmap/pbw.hpp"
#include "natmap/poisson.hpp"

namespace natmap::expr {

// Grammar (explicit '*', no juxtaposition):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' '-'? integer)?
//   atom    := integer | identifier | '(' sum ')'
// Division is only by scalars; negative powers only of scalars.
// All parsers throw ParseError carrying the offending position.

/// Element of a PBW algebra; products are normalized as they are parsed.
/// The parameter symbol stands for the parameter (or its fixed value).
pbw::NCPoly parse_expression(std::string_view text, const pbw::PresentationPtr& p);

/// Commutative polynomial over `vars` with rational coefficients.
poisson::CPoly parse_cpoly(std::string_view text, std::span<const std::string> vars);

/// Comma-separated list of commutative polynomials.
std::vector<poisson::CPoly> parse_cpoly_list(std::string_view text, std::span<const std::string> vars);

/// Rational function in `symbol` (empty symbol: constants only).
arith::Scalar parse_scalar(std::string_view text, std::string_view symbol);

}  // namespace natmap::expr
