#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natmap/arith.hpp"
#include "natmap/ideals.hpp"
#include "natmap/pbw.hpp"
#include "natmap/poisson.hpp"

namespace natmap::limitmap {

using arith::Rational;

/// Finite sample of parameter values. Nodes are strictly increasing and
/// avoid 0 and the rational roots of unity (+1, -1).
class SampleSet {
 public:
  static SampleSet create(std::vector<Rational> nodes);
  /// first, first+1, ..., as integers (first >= 2).
  static SampleSet integers(std::size_t count, long first = 2);

  const std::vector<Rational>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  std::vector<Rational> nodes_;
};

/// One fiber element per sample node, each over the specialized presentation.
struct FamilyElement {
  SampleSet samples;
  std::vector<pbw::NCPoly> fibers;
};

/// Inclusive range of parameter exponents allowed in reconstructed coefficients.
struct Band {
  int min = 0;
  int max = 0;
};

/// Coefficientwise evaluation of b at every node. Throws PoleAtSample.
FamilyElement gamma_eval(const pbw::NCPoly& b, const SampleSet& S);

/// Reconstructs the element of `parent` whose coefficients are Laurent
/// polynomials within `band` and whose fibers are `fam`. Interpolates on the
/// first band-width nodes and re-checks every node. Throws
/// InsufficientSamples or InconsistentFamily.
pbw::NCPoly gamma_inverse(const FamilyElement& fam, Band band, const pbw::PresentationPtr& parent);

/// Evaluates every coefficient at parameter value 1 and reads the standard
/// monomial as a commutative one. Throws PoleAtOne.
poisson::CPoly specialize_at_one(const pbw::NCPoly& b);

/// The same map taken the long way: sample z at S, reconstruct in `parent`
/// within `band`, then project to parameter value 1.
poisson::CPoly gamma_hat_via_family(const pbw::NCPoly& z, const SampleSet& S, Band band,
                                    const pbw::PresentationPtr& parent);

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> details;
  double millis = 0.0;
};

struct CounterexampleReport {
  unsigned n = 0;
  std::vector<Rational> nodes;
  std::vector<CheckRecord> checks;
  std::optional<ideals::PrimalityCertificate> certificate;
  /// Reduced basis of the Poisson ideal generated by e^n and 4ef+h^2.
  std::vector<std::string> closure_basis;
  /// Reduced basis of the ordinary ideal (e^n, 4ef+h^2) and whether it is
  /// already Poisson.
  std::vector<std::string> ordinary_basis;
  bool ordinary_is_poisson = false;

  bool passed() const;
};

/// Runs the six checks for P_n = (e^n, Omega - (q-1)^2 (n^2-1)) in B_q.
/// Precondition: n >= 2 and |S| >= 3.
CounterexampleReport verify_counterexample(unsigned n, const SampleSet& S);

}  // namespace natmap::limitmap
