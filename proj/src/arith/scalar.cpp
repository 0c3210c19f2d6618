#include "natmap/arith.hpp"
#include "natmap/errors.hpp"

namespace natmap::arith {

Scalar Scalar::normalize(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw ZeroDenominator();
  Scalar s;
  if (num.is_zero()) return s;
  if (!den.is_constant()) {
    UniPoly g = gcd(num, den);
    if (!g.is_one()) {
      num = divmod(num, g).quotient;
      den = divmod(den, g).quotient;
    }
  }
  Rational lc = den.leading();
  if (lc != 1) {
    UniPoly inv(Rational(1) / lc);
    num *= inv;
    den *= inv;
  }
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

Scalar Scalar::parameter() { return Scalar(UniPoly::variable()); }

Rational Scalar::constant_value() const {
  if (!is_constant()) throw PreconditionError("scalar is not a constant");
  return num_.coeff(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  return normalize(den_, num_);
}

Scalar Scalar::compose(const Scalar& inner) const {
  auto horner = [&inner](const UniPoly& p) {
    Scalar acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Scalar(*it);
    return acc;
  };
  if (is_constant()) return *this;
  return horner(num_) / horner(den_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = normalize(num_ + o.num_, den_);
    return *this;
  }
  *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  *this = normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  std::string n = num_.is_constant() ? num_.to_string(var) : "(" + num_.to_string(var) + ")";
  return n + "/(" + den_.to_string(var) + ")";
}

Rational evaluate(const Scalar& s, const Rational& x) {
  Rational d = s.den()(x);
  if (d == 0) throw PoleAtPoint(arith::to_string(x));
  return s.num()(x) / d;
}

Scalar pow(const Scalar& s, long k) {
  if (k < 0) return pow(s.inverse(), -k);
  Scalar result(1);
  Scalar base = s;
  auto e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace natmap::arith
