#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "natmap/poisson.hpp"

namespace natmap::ideals {

using arith::Rational;
using poisson::CPoly;
using poisson::Exponents;
using poisson::PoissonAlgebra;

/// Term order on exponent vectors. `precedence` lists variable indices from
/// most to least significant; empty means natural order (x_0 > x_1 > ...).
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex };

  Kind kind = Kind::DegRevLex;
  std::vector<std::size_t> precedence;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }

  bool less(const Exponents& a, const Exponents& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct LeadingTerm {
  Exponents monomial;
  Rational coeff;
};

/// Precondition: p nonzero.
LeadingTerm leading_term(const CPoly& p, const MonomialOrder& order);

/// Remainder of p under full multivariate division by `basis`.
CPoly reduce(const CPoly& p, std::span<const CPoly> basis, const MonomialOrder& order);

CPoly s_polynomial(const CPoly& a, const CPoly& b, const MonomialOrder& order);

/// Reduced Groebner basis (Buchberger with the coprime-leading-monomial
/// criterion), monic and sorted by decreasing leading monomial.
std::vector<CPoly> groebner(std::span<const CPoly> generators, const MonomialOrder& order);

/// Every S-polynomial of `basis` reduces to zero.
bool buchberger_criterion_holds(std::span<const CPoly> basis, const MonomialOrder& order);

/// Ideal of k[vars] with its reduced Groebner basis computed eagerly.
class CommIdeal {
 public:
  CommIdeal(std::vector<std::string> vars, std::vector<CPoly> generators,
            MonomialOrder order = MonomialOrder::degrevlex());

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<CPoly>& generators() const noexcept { return generators_; }
  const std::vector<CPoly>& basis() const noexcept { return basis_; }
  const MonomialOrder& order() const noexcept { return order_; }

  bool is_unit() const;
  bool is_zero() const noexcept { return basis_.empty(); }

 private:
  std::vector<std::string> vars_;
  std::vector<CPoly> generators_;
  MonomialOrder order_;
  std::vector<CPoly> basis_;
};

struct Membership {
  bool member = false;
  CPoly remainder;
};

Membership membership(const CPoly& p, const CommIdeal& I);

/// {g, x} in I for every basis element g and variable x.
bool is_poisson_ideal(const CommIdeal& I, const PoissonAlgebra& A);

/// Smallest Poisson ideal containing I: adds brackets of basis elements
/// with the variables until the reduced basis stops changing.
CommIdeal poisson_closure(const CommIdeal& I, const PoissonAlgebra& A);

/// Same variables, same order, same reduced basis.
bool ideal_equal(const CommIdeal& I, const CommIdeal& J);

class PrimalityCertificate {
 public:
  enum class Verdict { NotPrime, Inconclusive };

  /// Re-verifies g^k in I and g not in I; throws std::logic_error otherwise.
  static PrimalityCertificate not_prime(const CommIdeal& I, CPoly g, unsigned k);
  static PrimalityCertificate inconclusive(std::string reason);

  Verdict verdict() const noexcept { return verdict_; }
  const std::optional<CPoly>& witness() const noexcept { return witness_; }
  unsigned exponent() const noexcept { return exponent_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  Verdict verdict_ = Verdict::Inconclusive;
  std::optional<CPoly> witness_;
  unsigned exponent_ = 0;
  std::string reason_;
};

/// NotPrime with the least k <= k_max such that g^k in I while g is not;
/// Inconclusive otherwise.
PrimalityCertificate nilpotent_nonprime_witness(const CommIdeal& I, const CPoly& g, unsigned k_max);

/// Basis as polynomial strings, in basis order.
std::vector<std::string> basis_strings(const CommIdeal& I);

}  // namespace natmap::ideals
