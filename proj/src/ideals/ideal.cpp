#include <stdexcept>

#include "natmap/errors.hpp"
#include "natmap/ideals.hpp"

namespace natmap::ideals {

CommIdeal::CommIdeal(std::vector<std::string> vars, std::vector<CPoly> generators, MonomialOrder order)
    : vars_(std::move(vars)), generators_(std::move(generators)), order_(std::move(order)) {
  for (const auto& g : generators_)
    if (g.nvars() != vars_.size()) throw PreconditionError("ideal generator over the wrong variable count");
  basis_ = groebner(generators_, order_);
}

bool CommIdeal::is_unit() const {
  return basis_.size() == 1 && basis_[0] == CPoly::constant(vars_.size(), Rational(1));
}

Membership membership(const CPoly& p, const CommIdeal& I) {
  if (p.nvars() != I.vars().size()) throw PreconditionError("polynomial is not over the ideal's variables");
  CPoly r = reduce(p, I.basis(), I.order());
  return {r.is_zero(), std::move(r)};
}

bool is_poisson_ideal(const CommIdeal& I, const PoissonAlgebra& A) {
  if (I.vars() != A.vars()) throw PreconditionError("ideal and Poisson algebra have different variables");
  const std::size_t n = A.nvars();
  for (const auto& g : I.basis())
    for (std::size_t v = 0; v < n; ++v)
      if (!reduce(poisson_bracket(A, g, CPoly::variable(n, v)), I.basis(), I.order()).is_zero()) return false;
  return true;
}

CommIdeal poisson_closure(const CommIdeal& I, const PoissonAlgebra& A) {
  if (I.vars() != A.vars()) throw PreconditionError("ideal and Poisson algebra have different variables");
  const std::size_t n = A.nvars();
  std::vector<CPoly> basis = I.basis();
  // Terminates by the ascending chain condition: each round either adds a
  // nonzero remainder (strictly larger ideal) or stops.
  while (true) {
    std::vector<CPoly> added;
    for (const auto& g : basis)
      for (std::size_t v = 0; v < n; ++v) {
        CPoly r = reduce(poisson_bracket(A, g, CPoly::variable(n, v)), basis, I.order());
        if (!r.is_zero()) added.push_back(std::move(r));
      }
    if (added.empty()) break;
    basis.insert(basis.end(), added.begin(), added.end());
    basis = groebner(basis, I.order());
  }
  return CommIdeal(I.vars(), std::move(basis), I.order());
}

bool ideal_equal(const CommIdeal& I, const CommIdeal& J) {
  if (I.vars() != J.vars() || !(I.order() == J.order()))
    throw PreconditionError("ideal comparison needs the same variables and order");
  return I.basis() == J.basis();
}

PrimalityCertificate PrimalityCertificate::not_prime(const CommIdeal& I, CPoly g, unsigned k) {
  if (membership(g, I).member) throw std::logic_error("witness lies in the ideal");
  if (!membership(pow(g, k), I).member) throw std::logic_error("witness power is not in the ideal");
  PrimalityCertificate c;
  c.verdict_ = Verdict::NotPrime;
  c.witness_ = std::move(g);
  c.exponent_ = k;
  c.reason_ = "g^k lies in the ideal while g does not";
  return c;
}

PrimalityCertificate PrimalityCertificate::inconclusive(std::string reason) {
  PrimalityCertificate c;
  c.reason_ = std::move(reason);
  return c;
}

PrimalityCertificate nilpotent_nonprime_witness(const CommIdeal& I, const CPoly& g, unsigned k_max) {
  if (membership(g, I).member) return PrimalityCertificate::inconclusive("candidate lies in the ideal");
  CPoly power = g;
  for (unsigned k = 2; k <= k_max; ++k) {
    power *= g;
    if (membership(power, I).member) return PrimalityCertificate::not_prime(I, g, k);
  }
  return PrimalityCertificate::inconclusive("no power up to " + std::to_string(k_max) + " lies in the ideal");
}

std::vector<std::string> basis_strings(const CommIdeal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.basis()) out.push_back(poisson::to_string(g, I.vars()));
  return out;
}

}  // namespace natmap::ideals
