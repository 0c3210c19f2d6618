#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "natmap/arith.hpp"

namespace natmap::pbw {

using arith::Rational;
using arith::Scalar;
using arith::ScalarMatrix;

/// Exponent vector of a standard monomial x_0^a0 x_1^a1 ... (one entry per
/// generator, in PBW order).
using Exponents = std::vector<unsigned>;
/// Normal-form term map. Never stores zero coefficients.
using Terms = std::map<Exponents, Scalar>;
/// A word in the generators, as generator indices.
using Word = std::vector<std::size_t>;

unsigned total_degree(const Exponents& m);
/// Degree first, then lexicographic with earlier generators more significant.
bool deglex_less(const Exponents& a, const Exponents& b);
Word word_of(const Exponents& m);

struct Parameter {
  std::string symbol;
  std::optional<Rational> value;  // set for a specialized fiber

  bool symbolic() const { return !value.has_value(); }
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// x_high * x_low = coeff * x_low * x_high + tail, with high > low.
struct SwapRule {
  std::size_t high = 0;
  std::size_t low = 0;
  Scalar coeff{1};
  Terms tail;

  friend bool operator==(const SwapRule&, const SwapRule&) = default;
};

class PBWPresentation;
using PresentationPtr = std::shared_ptr<const PBWPresentation>;

/// Ordered generators with one swap rule per out-of-order pair. Construction
/// validates the rules (degree-compatible tails, nonzero coefficients) and
/// records the overlap-check verdict.
class PBWPresentation {
 public:
  static PresentationPtr create(std::string name, std::vector<std::string> generators,
                                std::optional<Parameter> parameter, std::vector<SwapRule> rules);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::optional<Parameter>& parameter() const noexcept { return parameter_; }
  bool has_symbolic_parameter() const { return parameter_ && parameter_->symbolic(); }
  /// Symbol used when printing coefficients ("t" if there is no parameter).
  std::string symbol() const { return parameter_ ? parameter_->symbol : "t"; }

  std::optional<std::size_t> index_of(std::string_view generator) const;
  const SwapRule& rule(std::size_t high, std::size_t low) const;
  const std::vector<SwapRule>& rules() const noexcept { return rules_; }

  /// Diamond-lemma certificate computed at construction.
  bool confluent() const noexcept { return confluent_; }

 private:
  PBWPresentation() = default;

  std::string name_;
  std::vector<std::string> generators_;
  std::optional<Parameter> parameter_;
  std::vector<SwapRule> rules_;
  std::vector<std::size_t> rule_slot_;
  bool confluent_ = false;
};

/// Same generators, parameter value and rules; the name and parameter symbol
/// are ignored.
bool same_algebra(const PBWPresentation& a, const PBWPresentation& b);

/// The fiber at parameter value `value`: every rule coefficient and tail
/// evaluated there. Throws PoleAtPoint if a coefficient has a pole.
PresentationPtr specialize(const PBWPresentation& p, const Rational& value, std::string name = {});

/// Element of a PBW algebra in normal form.
class NCPoly {
 public:
  explicit NCPoly(PresentationPtr p);
  NCPoly(PresentationPtr p, Terms terms);

  static NCPoly constant(PresentationPtr p, const Scalar& c);
  static NCPoly generator(PresentationPtr p, std::size_t index);
  static NCPoly generator(PresentationPtr p, std::string_view name);
  static NCPoly monomial(PresentationPtr p, Exponents m, const Scalar& c = Scalar(1));

  const PresentationPtr& presentation() const noexcept { return pres_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coeff(const Exponents& m) const;
  /// Highest monomial in degree-then-lex order. Precondition: nonzero.
  const Exponents& leading_monomial() const;
  /// -1 for zero.
  int degree() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& s) { return a *= s; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b);

 private:
  void check_compatible(const NCPoly& o) const;

  PresentationPtr pres_;
  Terms terms_;
};

/// Normal-form rewriting with a memo table. Rewrites the leftmost
/// out-of-order adjacent pair first. A Rewriter is cheap to create and is
/// not meant to be shared across threads.
class Rewriter {
 public:
  explicit Rewriter(const PBWPresentation& p) : pres_(p) {}

  const Terms& normal_form(const Word& w);
  Terms multiply(const Terms& a, const Terms& b);
  /// Applies the swap rule at position `pos` once (w[pos] > w[pos+1]) and
  /// returns the unreduced expansion as (coefficient, word) pairs.
  std::vector<std::pair<Scalar, Word>> rewrite_at(const Word& w, std::size_t pos) const;

 private:
  const PBWPresentation& pres_;
  std::map<Word, Terms> memo_;
};

/// Normal form of a*b. Throws MixedPresentations.
NCPoly multiply(const NCPoly& a, const NCPoly& b);
NCPoly pow(const NCPoly& a, unsigned k);
/// a*b - b*a.
NCPoly commutator(const NCPoly& a, const NCPoly& b);
/// Commutes with every generator.
bool is_central(const NCPoly& z);

struct OverlapEntry {
  std::size_t high = 0;
  std::size_t middle = 0;
  std::size_t low = 0;
  Terms left_first;   // (x_high x_middle) x_low
  Terms right_first;  // x_high (x_middle x_low)
  bool agrees = false;
};

struct OverlapReport {
  bool passed = true;
  std::vector<OverlapEntry> entries;
};

/// Reduces every ambiguity x_k x_j x_i (k > j > i) both ways and compares.
OverlapReport check_pbw_overlaps(const PBWPresentation& p);

/// Entry d is the dimension of the span of products of at most d generators,
/// obtained from the leading monomials of the normal forms of m * x_k.
/// Precondition: p is confluent.
std::vector<std::size_t> growth_dimensions(const PBWPresentation& p, unsigned d_max);

/// Growth exponent from dims[d] over d in [d_from, d_to], fitted as
/// log dim = k log d + c + b/d. Returns k.
double gk_slope_estimate(std::span<const std::size_t> dims, unsigned d_from, unsigned d_to);

struct AlgebraMorphism {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<NCPoly> images;  // one per source generator, in the target
  Scalar parameter_image;      // image of the source parameter, in the target's
  bool verified = false;
};

/// Builds the morphism and stores the check_morphism verdict.
AlgebraMorphism make_morphism(PresentationPtr source, PresentationPtr target,
                              std::vector<NCPoly> images, Scalar parameter_image = Scalar::parameter());

/// Image of each source relation x_j x_i - c x_i x_j - tail; all zero iff
/// the assignment extends to an algebra map.
std::vector<NCPoly> morphism_residuals(const AlgebraMorphism& m);
bool check_morphism(const AlgebraMorphism& m);

struct Representation {
  PresentationPtr presentation;
  std::size_t dimension = 0;
  std::vector<ScalarMatrix> matrices;  // one per generator
};

/// The n-dimensional weight module of B_q: e, f, h act as (q-1) times the
/// standard sl2 matrices E, F, H.
Representation sl2_representation(unsigned n);

/// Every swap rule holds as a matrix identity.
bool relations_hold(const Representation& r);
ScalarMatrix act(const Representation& r, const NCPoly& z);
bool annihilates(const Representation& r, const NCPoly& z);

/// Canonical text, e.g. "e*f - (t - 1)*h". Re-parses to an equal element.
std::string to_string(const NCPoly& p);

namespace builtin {

/// ef-fe=(t-1)h, he-eh=2(t-1)e, hf-fh=-2(t-1)f over Q(t), order e < f < h.
PresentationPtr B();
/// Same relations with symbolic parameter q.
PresentationPtr B_q();
/// The fiber at t = lambda.
PresentationPtr B_lambda(const Rational& lambda);
/// EF-FE=H, HE-EH=2E, HF-FH=-2F.
PresentationPtr Usl2();
/// Polynomial ring on the given generators (all tails zero, c = 1).
PresentationPtr commutative(std::vector<std::string> generators,
                            std::optional<Parameter> parameter = std::nullopt);

}  // namespace builtin

}  // namespace natmap::pbw
