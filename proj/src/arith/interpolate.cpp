#include <cstdlib>
#include <set>

#include "natmap/arith.hpp"
#include "natmap/errors.hpp"

namespace natmap::arith {

Scalar interpolate_band(std::span<const Node> points, int band_min) {
  std::set<Rational> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) throw DuplicateNode(to_string(x));
    if (band_min < 0 && x == 0) throw PreconditionError("zero node with negative band");
  }

  // Lagrange form for p with p(x_i) = y_i / x_i^band_min.
  UniPoly p;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& [xi, yi] = points[i];
    Rational target = yi;
    if (band_min != 0) {
      Rational xpow(1);
      for (int k = 0; k < std::abs(band_min); ++k) xpow *= xi;
      target = band_min > 0 ? Rational(target / xpow) : Rational(target * xpow);
    }
    if (target == 0) continue;
    UniPoly basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const Rational& xj = points[j].first;
      basis *= UniPoly(std::vector<Rational>{-xj, Rational(1)});
      denom *= xi - xj;
    }
    p += basis * UniPoly(target / denom);
  }

  if (band_min >= 0)
    return Scalar(p * UniPoly::monomial(1, static_cast<std::size_t>(band_min)));
  return Scalar::normalize(p, UniPoly::monomial(1, static_cast<std::size_t>(-band_min)));
}

}  // namespace natmap::arith
