#pragma once

// Independent reference computations. They share no code with the library
// beyond the value types.

#include <map>
#include <vector>

#include "natmap/arith.hpp"
#include "natmap/poisson.hpp"

namespace natmap::testing {

using arith::Rational;
using Row = std::vector<Rational>;

/// Row-reduces in place; returns the rank.
inline std::size_t row_reduce(std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

/// Coefficients c_0..c_{n-1} with sum c_k x_i^k = y_i, by elimination on the
/// Vandermonde system.
inline std::vector<Rational> vandermonde_solve(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Row r(n + 1);
    Rational p(1);
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = p;
      p *= xs[i];
    }
    r[n] = ys[i];
    rows.push_back(r);
  }
  row_reduce(rows);
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = rows[i][n];
  return c;
}

/// All exponent vectors in `nvars` variables of total degree d, in a fixed order.
inline std::vector<std::vector<unsigned>> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> m(nvars, 0);
  auto rec = [&](auto& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      m[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Degree-d components (d <= d_max) of the Poisson closure of a homogeneous
/// ideal, by linear algebra: I_d is spanned by monomial multiples of the
/// generators, and brackets with the variables are added until every I_d is
/// stable. Returns the dimension of each I_d.
inline std::vector<std::size_t> poisson_closure_dimensions(const poisson::PoissonAlgebra& A,
                                                           const std::vector<poisson::CPoly>& gens,
                                                           unsigned d_max) {
  const std::size_t nv = A.nvars();
  std::vector<std::vector<std::vector<unsigned>>> basis(d_max + 1);
  std::vector<std::map<std::vector<unsigned>, std::size_t>> index(d_max + 1);
  for (unsigned d = 0; d <= d_max; ++d) {
    basis[d] = monomials_of_degree(nv, d);
    for (std::size_t k = 0; k < basis[d].size(); ++k) index[d][basis[d][k]] = k;
  }
  auto to_row = [&](const poisson::CPoly& p, unsigned d) {
    Row r(basis[d].size());
    for (const auto& [m, c] : p.terms()) r[index[d].at(m)] = c;
    return r;
  };
  auto from_row = [&](const Row& r, unsigned d) {
    poisson::CPoly::TermMap t;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] != 0) t[basis[d][k]] = r[k];
    return poisson::CPoly(nv, t);
  };

  std::vector<std::vector<Row>> space(d_max + 1);
  for (const auto& g : gens) {
    const int dg = g.degree();
    if (dg < 0 || dg > static_cast<int>(d_max)) continue;
    space[dg].push_back(to_row(g, dg));
  }
  std::vector<std::size_t> dims(d_max + 1, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned d = 0; d <= d_max; ++d) {
      row_reduce(space[d]);
      // Multiply up by variables.
      if (d < d_max) {
        for (const auto& r : space[d]) {
          auto p = from_row(r, d);
          for (std::size_t v = 0; v < nv; ++v) space[d + 1].push_back(to_row(p * poisson::CPoly::variable(nv, v), d + 1));
        }
      }
      // Brackets with variables keep the degree for a linear bracket table.
      std::vector<Row> extra;
      for (const auto& r : space[d]) {
        auto p = from_row(r, d);
        for (std::size_t v = 0; v < nv; ++v) {
          auto b = poisson::poisson_bracket(A, p, poisson::CPoly::variable(nv, v));
          if (!b.is_zero()) extra.push_back(to_row(b, d));
        }
      }
      space[d].insert(space[d].end(), extra.begin(), extra.end());
      const std::size_t rank = row_reduce(space[d]);
      if (rank != dims[d]) {
        dims[d] = rank;
        changed = true;
      }
    }
  }
  return dims;
}

/// Number of degree-d monomials divisible by none of `leads`.
inline std::size_t standard_count(std::size_t nvars, unsigned d, const std::vector<std::vector<unsigned>>& leads) {
  std::size_t n = 0;
  for (const auto& m : monomials_of_degree(nvars, d)) {
    bool divisible = false;
    for (const auto& l : leads) {
      bool all = true;
      for (std::size_t i = 0; i < nvars; ++i) all = all && l[i] <= m[i];
      divisible = divisible || all;
    }
    if (!divisible) ++n;
  }
  return n;
}

}  // namespace natmap::testing
