#include <cctype>
#include <sstream>

#include "natmap/arith.hpp"
#include "natmap/errors.hpp"

namespace natmap::arith {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw ZeroDenominator();
  r.canonicalize();
  return r;
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  UniPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = c;
  p.coeffs_[degree].canonicalize();
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool UniPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

bool UniPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& UniPoly::leading() const {
  static const Rational zero(0);
  return coeffs_.empty() ? zero : coeffs_.back();
}

std::size_t UniPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty() || leading() == 1) return *this;
  UniPoly p = *this;
  Rational lc = leading();
  for (auto& c : p.coeffs_) c /= lc;
  return p;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << arith::to_string(mag);
      continue;
    }
    if (mag != 1) os << arith::to_string(mag) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational& lb = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] / lb;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly pow(const UniPoly& p, std::size_t k) {
  UniPoly result(1);
  UniPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

UniPoly divide_by_t_minus_1(const UniPoly& p) {
  if (p(Rational(1)) != 0) throw NotDivisible();
  if (p.is_zero()) return p;
  // Synthetic division by the root 1.
  const auto& c = p.coefficients();
  std::vector<Rational> q(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    carry += c[k + 1];
    q[k] = carry;
  }
  return UniPoly(std::move(q));
}

}  // namespace natmap::arith
