#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace natmap::arith {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign). Throws InputError.
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial over the rationals. The variable is anonymous;
/// whoever prints it supplies the symbol.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT
  UniPoly(int c) : UniPoly(Rational(c)) {}   // NOLINT

  static UniPoly variable();
  static UniPoly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// True iff the polynomial is c*x^k for some c != 0.
  bool is_monomial() const;

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;

  Rational operator()(const Rational& x) const;

  UniPoly monic() const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Terms in descending degree, e.g. "t^2 - 2*t + 1".
  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; divisor must be nonzero.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& p, std::size_t k);

/// Exact quotient r with r*(t-1) == p. Throws NotDivisible when p(1) != 0.
UniPoly divide_by_t_minus_1(const UniPoly& p);

/// Element of Q(t): a reduced fraction num/den with monic den.
/// Equality is equality of canonical forms, hence field equality.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(long c) : Scalar(Rational(c)) {}          // NOLINT
  Scalar(int c) : Scalar(Rational(c)) {}           // NOLINT
  Scalar(UniPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  /// Reduces num/den to canonical form. Throws ZeroDenominator.
  static Scalar normalize(UniPoly num, UniPoly den);
  /// The parameter itself.
  static Scalar parameter();

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Denominator is a power of the variable.
  bool is_laurent() const { return den_.is_monomial(); }
  bool regular_at(const Rational& x) const { return den_(x) != 0; }

  /// Value of a constant scalar. Precondition: is_constant().
  Rational constant_value() const;

  Scalar inverse() const;
  /// Substitutes `inner` for the parameter.
  Scalar compose(const Scalar& inner) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Parseable text: "t - 1", "3/2", "(t + 1)/(t^2 + 1)", "1/(q - 1)".
  std::string to_string(std::string_view var) const;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// num(x)/den(x). Throws PoleAtPoint when den(x) == 0.
Rational evaluate(const Scalar& s, const Rational& x);

Scalar pow(const Scalar& s, long k);

/// Dense row-major matrix of Scalars.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols);
  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  ScalarMatrix& operator*=(const Scalar& s);

  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(ScalarMatrix a, const Scalar& s) { return a *= s; }
  friend ScalarMatrix operator*(const Scalar& s, ScalarMatrix a) { return a *= s; }
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using Node = std::pair<Rational, Rational>;

/// The unique t^band_min * p(t) with deg p < points.size() passing through
/// every (node, value). Throws DuplicateNode, or PreconditionError for a zero
/// node when band_min < 0.
Scalar interpolate_band(std::span<const Node> points, int band_min);

}  // namespace natmap::arith
