#include "natmap/errors.hpp"
#include "natmap/poisson.hpp"

namespace natmap::poisson {

PoissonAlgebra::PoissonAlgebra(std::vector<std::string> vars,
                               const std::map<std::pair<std::size_t, std::size_t>, CPoly>& table)
    : vars_(std::move(vars)) {
  const std::size_t n = vars_.size();
  upper_.assign(n * n, CPoly(n));
  std::vector<bool> set(n * n, false);
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw InputError("bracket table index out of range");
    if (i == j) {
      if (!value.is_zero()) throw InputError("bracket of a generator with itself must vanish");
      continue;
    }
    if (value.nvars() != n) throw InputError("bracket value has the wrong variable count");
    CPoly v = i < j ? value : -value;
    std::size_t lo = std::min(i, j), hi = std::max(i, j);
    std::size_t slot = lo * n + hi;
    if (set[slot] && upper_[slot] != v)
      throw InputError("contradictory bracket entries for " + vars_[lo] + "," + vars_[hi]);
    upper_[slot] = std::move(v);
    set[slot] = true;
  }
  admissible_ = true;
  for (const auto& r : jacobi_residuals(*this))
    if (!r.is_zero()) admissible_ = false;
}

CPoly PoissonAlgebra::bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = vars_.size();
  if (i == j) return CPoly(n);
  return i < j ? upper_[i * n + j] : -upper_[j * n + i];
}

CPoly poisson_bracket(const PoissonAlgebra& A, const CPoly& a, const CPoly& b) {
  const std::size_t n = A.nvars();
  if (a.nvars() != n || b.nvars() != n) throw PreconditionError("bracket operands are not over the algebra's variables");
  std::vector<CPoly> da, db;
  for (std::size_t i = 0; i < n; ++i) {
    da.push_back(a.derivative(i));
    db.push_back(b.derivative(i));
  }
  CPoly out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CPoly bij = A.bracket(i, j);
      if (bij.is_zero()) continue;
      CPoly w = da[i] * db[j] - da[j] * db[i];
      if (!w.is_zero()) out += w * bij;
    }
  return out;
}

std::vector<CPoly> jacobi_residuals(const PoissonAlgebra& A) {
  const std::size_t n = A.nvars();
  std::vector<CPoly> out;
  auto x = [n](std::size_t i) { return CPoly::variable(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back(poisson_bracket(A, x(i), A.bracket(j, k)) + poisson_bracket(A, x(j), A.bracket(k, i)) +
                      poisson_bracket(A, x(k), A.bracket(i, j)));
  return out;
}

PoissonAlgebra semiclassical_limit(const pbw::PBWPresentation& p) {
  if (!p.has_symbolic_parameter())
    throw PreconditionError("semiclassical limit needs a symbolic parameter ('" + p.name() + "')");
  if (!p.confluent()) throw PreconditionError("presentation '" + p.name() + "' is not confluent");

  const std::size_t n = p.generator_count();
  // Build a shared handle for NCPoly arithmetic without copying the presentation.
  pbw::PresentationPtr handle(std::shared_ptr<const pbw::PBWPresentation>{}, &p);
  const Rational one(1);

  std::map<std::pair<std::size_t, std::size_t>, CPoly> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pbw::NCPoly c = pbw::commutator(pbw::NCPoly::generator(handle, i), pbw::NCPoly::generator(handle, j));
      CPoly bracket(n);
      for (const auto& [m, s] : c.terms()) {
        const std::string where = "[" + p.generators()[i] + "," + p.generators()[j] + "]";
        if (!s.regular_at(one))
          throw DivisionFailure("commutator " + where + " has a coefficient with a pole at 1");
        if (arith::evaluate(s, one) != 0)
          throw NotCommutativeAtOne("commutator " + where + " does not vanish at " + p.symbol() + " = 1");
        arith::UniPoly reduced;
        try {
          reduced = arith::divide_by_t_minus_1(s.num());
        } catch (const NotDivisible&) {
          throw DivisionFailure("commutator " + where + " is not divisible by (" + p.symbol() + " - 1)");
        }
        Rational v = arith::evaluate(arith::Scalar::normalize(reduced, s.den()), one);
        bracket += CPoly::monomial(n, m, v);
      }
      table.emplace(std::pair(i, j), std::move(bracket));
    }
  return PoissonAlgebra(p.generators(), table);
}

PoissonAlgebra B1() {
  auto x = [](std::size_t i) { return CPoly::variable(3, i); };
  // {e,f}=h, {e,h}=-2e, {f,h}=2f
  return PoissonAlgebra({"e", "f", "h"}, {{{0, 1}, x(2)},
                                          {{2, 0}, Rational(2) * x(0)},
                                          {{2, 1}, Rational(-2) * x(1)}});
}

}  // namespace natmap::poisson
