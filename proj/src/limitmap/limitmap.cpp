#include <chrono>
#include <set>

#include "natmap/errors.hpp"
#include "natmap/limitmap.hpp"

namespace natmap::limitmap {

using arith::Scalar;
using pbw::NCPoly;
using poisson::CPoly;

SampleSet SampleSet::create(std::vector<Rational> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Rational& x = nodes[i];
    if (x == 0 || x == 1 || x == -1)
      throw PreconditionError("sample node " + arith::to_string(x) + " is 0 or a root of unity");
    if (i > 0 && !(nodes[i - 1] < x)) throw PreconditionError("sample nodes must be strictly increasing");
  }
  SampleSet s;
  s.nodes_ = std::move(nodes);
  return s;
}

SampleSet SampleSet::integers(std::size_t count, long first) {
  if (first < 2) throw PreconditionError("integer sample nodes start at 2 or above");
  std::vector<Rational> nodes;
  for (std::size_t i = 0; i < count; ++i) nodes.emplace_back(first + static_cast<long>(i));
  return create(std::move(nodes));
}

FamilyElement gamma_eval(const NCPoly& b, const SampleSet& S) {
  const auto& p = *b.presentation();
  if (!p.has_symbolic_parameter())
    throw PreconditionError("family evaluation needs a symbolic parameter ('" + p.name() + "')");
  FamilyElement fam{S, {}};
  for (const Rational& lambda : S.nodes()) {
    pbw::PresentationPtr fiber;
    try {
      fiber = pbw::specialize(p, lambda);
    } catch (const PoleAtPoint&) {
      throw PoleAtSample("presentation '" + p.name() + "' has a pole at " + arith::to_string(lambda));
    }
    pbw::Terms terms;
    for (const auto& [m, c] : b.terms()) {
      if (!c.regular_at(lambda))
        throw PoleAtSample("coefficient " + c.to_string(p.symbol()) + " has a pole at " + arith::to_string(lambda));
      Rational v = arith::evaluate(c, lambda);
      if (v != 0) terms.emplace(m, Scalar(v));
    }
    fam.fibers.emplace_back(fiber, std::move(terms));
  }
  return fam;
}

NCPoly gamma_inverse(const FamilyElement& fam, Band band, const pbw::PresentationPtr& parent) {
  if (band.max < band.min) throw PreconditionError("empty band");
  if (!parent->has_symbolic_parameter()) throw PreconditionError("reconstruction target needs a symbolic parameter");
  const auto& nodes = fam.samples.nodes();
  const std::size_t width = static_cast<std::size_t>(band.max - band.min + 1);
  if (nodes.size() < width)
    throw InsufficientSamples("band [" + std::to_string(band.min) + "," + std::to_string(band.max) + "] needs " +
                              std::to_string(width) + " nodes, have " + std::to_string(nodes.size()));
  if (fam.fibers.size() != nodes.size()) throw PreconditionError("family has one fiber per node");

  std::set<pbw::Exponents> support;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& fiber_pres = fam.fibers[i].presentation();
    if (!pbw::same_algebra(*fiber_pres, *pbw::specialize(*parent, nodes[i])))
      throw MixedPresentations(fiber_pres->name(), parent->name() + "@" + arith::to_string(nodes[i]));
    for (const auto& [m, c] : fam.fibers[i].terms()) support.insert(m);
  }

  auto fiber_value = [&](std::size_t i, const pbw::Exponents& m) {
    Scalar c = fam.fibers[i].coeff(m);
    return c.constant_value();
  };

  pbw::Terms terms;
  for (const auto& m : support) {
    std::vector<arith::Node> pts;
    for (std::size_t i = 0; i < width; ++i) pts.emplace_back(nodes[i], fiber_value(i, m));
    Scalar s = arith::interpolate_band(pts, band.min);
    for (std::size_t i = width; i < nodes.size(); ++i)
      if (arith::evaluate(s, nodes[i]) != fiber_value(i, m))
        throw InconsistentFamily("family is not the image of an element within band [" + std::to_string(band.min) +
                                 "," + std::to_string(band.max) + "]");
    if (!s.is_zero()) terms.emplace(m, std::move(s));
  }
  return NCPoly(parent, std::move(terms));
}

CPoly specialize_at_one(const NCPoly& b) {
  const auto& p = *b.presentation();
  if (p.parameter() && !p.parameter()->symbolic())
    throw PreconditionError("'" + p.name() + "' is a fixed fiber; there is no parameter to send to 1");
  const Rational one(1);
  CPoly out(p.generator_count());
  for (const auto& [m, c] : b.terms()) {
    if (!c.regular_at(one))
      throw PoleAtOne("coefficient " + c.to_string(p.symbol()) + " has a pole at " + p.symbol() + " = 1");
    out += CPoly::monomial(p.generator_count(), m, arith::evaluate(c, one));
  }
  return out;
}

CPoly gamma_hat_via_family(const NCPoly& z, const SampleSet& S, Band band, const pbw::PresentationPtr& parent) {
  return specialize_at_one(gamma_inverse(gamma_eval(z, S), band, parent));
}

bool CounterexampleReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

CounterexampleReport verify_counterexample(unsigned n, const SampleSet& S) {
  if (n < 2) throw PreconditionError("the counterexample needs n >= 2");
  if (S.size() < 3) throw PreconditionError("the counterexample needs at least 3 sample nodes");

  const auto bq = pbw::builtin::B_q();
  const auto b = pbw::builtin::B();
  const auto b1 = poisson::B1();
  const std::vector<std::string>& vars = b1.vars();
  const NCPoly e = NCPoly::generator(bq, "e");
  const NCPoly f = NCPoly::generator(bq, "f");
  const NCPoly h = NCPoly::generator(bq, "h");
  const Scalar qm1 = Scalar::parameter() - Scalar(1);
  auto str = [&](const CPoly& p) { return poisson::to_string(p, vars); };
  auto cvar = [](std::size_t i) { return CPoly::variable(3, i); };

  const NCPoly omega = Scalar(4) * multiply(e, f) + multiply(h, h) - Scalar(2) * qm1 * h;
  const long nn = static_cast<long>(n);
  const NCPoly en = pbw::pow(e, n);
  const NCPoly casimir_gen = omega - NCPoly::constant(bq, qm1 * qm1 * Scalar(nn * nn - 1));
  const CPoly en_image = pow(cvar(0), n);
  const CPoly casimir_image = Rational(4) * cvar(0) * cvar(1) + cvar(2) * cvar(2);
  const Band band{0, static_cast<int>(S.size()) - 1};

  CounterexampleReport report;
  report.n = n;
  report.nodes = S.nodes();

  {
    Stopwatch sw;
    CheckRecord c{"omega_central", true, {}, 0};
    for (const NCPoly& g : {e, f, h}) {
      NCPoly comm = pbw::commutator(omega, g);
      c.passed = c.passed && comm.is_zero();
      c.details.emplace_back("[Omega," + pbw::to_string(g) + "]", pbw::to_string(comm));
    }
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }

  {
    Stopwatch sw;
    pbw::Representation rep = pbw::sl2_representation(n);
    bool rel = pbw::relations_hold(rep);
    bool kill_en = pbw::annihilates(rep, en);
    bool kill_cas = pbw::annihilates(rep, casimir_gen);
    CheckRecord c{"pn_proper", rel && kill_en && kill_cas, {}, 0};
    c.details.emplace_back("representation_dimension", std::to_string(n));
    c.details.emplace_back("relations_hold", yes_no(rel));
    c.details.emplace_back("annihilates_e^n", yes_no(kill_en));
    c.details.emplace_back("annihilates_Omega-shift", yes_no(kill_cas));
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }

  {
    Stopwatch sw;
    CPoly direct_en = specialize_at_one(en);
    CPoly direct_cas = specialize_at_one(casimir_gen);
    CPoly family_en = gamma_hat_via_family(en, S, band, b);
    CPoly family_cas = gamma_hat_via_family(casimir_gen, S, band, b);
    bool ok = direct_en == en_image && direct_cas == casimir_image && family_en == direct_en &&
              family_cas == direct_cas;
    CheckRecord c{"image_generators", ok, {}, 0};
    c.details.emplace_back("image(e^n)", str(direct_en));
    c.details.emplace_back("image(Omega-shift)", str(direct_cas));
    c.details.emplace_back("family_route_agrees", yes_no(family_en == direct_en && family_cas == direct_cas));
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }

  const ideals::CommIdeal ordinary(vars, {en_image, casimir_image});
  report.ordinary_basis = ideals::basis_strings(ordinary);
  report.ordinary_is_poisson = ideals::is_poisson_ideal(ordinary, b1);

  std::optional<ideals::CommIdeal> closure;
  {
    Stopwatch sw;
    closure = ideals::poisson_closure(ordinary, b1);
    bool poisson = ideals::is_poisson_ideal(*closure, b1);
    bool contains = ideals::membership(en_image, *closure).member &&
                    ideals::membership(casimir_image, *closure).member;
    CheckRecord c{"closure_poisson", poisson && contains, {}, 0};
    report.closure_basis = ideals::basis_strings(*closure);
    c.details.emplace_back("closure_is_poisson", yes_no(poisson));
    c.details.emplace_back("closure_contains_generators", yes_no(contains));
    c.details.emplace_back("ordinary_ideal_is_poisson", yes_no(report.ordinary_is_poisson));
    c.details.emplace_back("closure_basis_size", std::to_string(report.closure_basis.size()));
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }

  {
    Stopwatch sw;
    CheckRecord c{"image_samples_in_closure", true, {}, 0};
    const Scalar inv = qm1.inverse();
    // Elements of P_n: scaled commutators and one-sided products of the generators.
    std::vector<std::pair<std::string, NCPoly>> samples;
    for (const auto& [name, g] : {std::pair{"e", e}, std::pair{"f", f}, std::pair{"h", h}}) {
      std::string gs(name);
      samples.emplace_back("(q-1)^-1*[e^n," + gs + "]", inv * pbw::commutator(en, g));
      samples.emplace_back("(q-1)^-1*[Omega-shift," + gs + "]", inv * pbw::commutator(casimir_gen, g));
      samples.emplace_back(gs + "*e^n", multiply(g, en));
      samples.emplace_back("(Omega-shift)*" + gs, multiply(casimir_gen, g));
    }
    for (const auto& [label, z] : samples) {
      CPoly img = specialize_at_one(z);
      bool in = ideals::membership(img, *closure).member;
      c.passed = c.passed && in;
      c.details.emplace_back(label, str(img) + (in ? " (in closure)" : " (NOT in closure)"));
    }
    CPoly target = Rational(nn) * pow(cvar(0), n - 1) * cvar(2);
    bool exact = specialize_at_one(inv * pbw::commutator(en, f)) == target;
    c.passed = c.passed && exact;
    c.details.emplace_back("image((q-1)^-1*[e^n,f]) == n*e^(n-1)*h", yes_no(exact));
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }

  {
    Stopwatch sw;
    auto cert = ideals::nilpotent_nonprime_witness(*closure, cvar(0), n);
    bool not_prime = cert.verdict() == ideals::PrimalityCertificate::Verdict::NotPrime;
    CheckRecord c{"nilpotent_witness", not_prime, {}, 0};
    c.details.emplace_back("verdict", not_prime ? "NotPrime" : "Inconclusive");
    if (not_prime) {
      c.details.emplace_back("witness", str(*cert.witness()));
      c.details.emplace_back("exponent", std::to_string(cert.exponent()));
    } else {
      c.details.emplace_back("reason", cert.reason());
    }
    report.certificate = std::move(cert);
    c.millis = sw.millis();
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace natmap::limitmap
