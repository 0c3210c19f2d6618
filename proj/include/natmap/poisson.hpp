#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "natmap/arith.hpp"
#include "natmap/pbw.hpp"

namespace natmap::poisson {

using arith::Rational;
using Exponents = std::vector<unsigned>;

/// Commutative polynomial over the rationals in a fixed number of variables.
class CPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit CPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  CPoly(std::size_t nvars, TermMap terms);

  static CPoly constant(std::size_t nvars, const Rational& c);
  static CPoly variable(std::size_t nvars, std::size_t i);
  static CPoly monomial(std::size_t nvars, Exponents m, const Rational& c = Rational(1));

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Exponents& m) const;
  /// -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  CPoly derivative(std::size_t i) const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const Rational& c);

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
  friend CPoly operator*(CPoly a, const Rational& c) { return a *= c; }
  friend CPoly operator*(const Rational& c, CPoly a) { return a *= c; }
  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  void check(const CPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

CPoly pow(const CPoly& p, unsigned k);

/// Terms in descending degree-then-lex order, e.g. "4*e*f + h^2".
std::string to_string(const CPoly& p, std::span<const std::string> vars);

/// Polynomial Poisson algebra: a bracket table on generator pairs, extended
/// to all polynomials as a biderivation.
class PoissonAlgebra {
 public:
  /// Keys (i, j) with i != j; (j, i) entries are derived by antisymmetry.
  /// Throws InputError on diagonal or contradictory entries.
  PoissonAlgebra(std::vector<std::string> vars, const std::map<std::pair<std::size_t, std::size_t>, CPoly>& table);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  /// {x_i, x_j}.
  CPoly bracket(std::size_t i, std::size_t j) const;
  /// Jacobi holds on every generator triple.
  bool admissible() const noexcept { return admissible_; }

  friend bool operator==(const PoissonAlgebra&, const PoissonAlgebra&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<CPoly> upper_;  // {x_i, x_j} for i < j, row-major over the full square
  bool admissible_ = false;
};

/// sum_{i<j} (da/dx_i db/dx_j - da/dx_j db/dx_i) {x_i, x_j}
CPoly poisson_bracket(const PoissonAlgebra& A, const CPoly& a, const CPoly& b);

/// {x,{y,z}} + {y,{z,x}} + {z,{x,y}} for every generator triple x < y < z.
std::vector<CPoly> jacobi_residuals(const PoissonAlgebra& A);

/// Bracket table of B/(t-1)B from commutators divided by (t-1) and
/// evaluated at 1. Throws NotCommutativeAtOne, DivisionFailure, or
/// PreconditionError when the parameter is not symbolic.
PoissonAlgebra semiclassical_limit(const pbw::PBWPresentation& p);

/// k[e,f,h] with {e,f}=h, {h,e}=2e, {h,f}=-2f.
PoissonAlgebra B1();

}  // namespace natmap::poisson
