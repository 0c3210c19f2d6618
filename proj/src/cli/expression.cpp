#include <cctype>
#include <optional>

#include "natmap/errors.hpp"
#include "natmap/expression.hpp"

namespace natmap::expr {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Ops supplies: Value, number(Rational), symbol(name, pos), add, sub, neg,
// mul, div(a, b, pos), power(a, k, pos).
template <class Ops>
class Parser {
 public:
  using Value = typename Ops::Value;

  Parser(std::string_view text, const Ops& ops) : toks_(tokenize(text)), ops_(ops) {}

  Value parse_all() {
    Value v = sum();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  Value sum() {
    Value v = product();
    while (true) {
      if (accept(Tok::Plus))
        v = ops_.add(v, product());
      else if (accept(Tok::Minus))
        v = ops_.sub(v, product());
      else
        return v;
    }
  }

  Value product() {
    Value v = unary();
    while (true) {
      if (accept(Tok::Star)) {
        v = ops_.mul(v, unary());
      } else if (peek().kind == Tok::Slash) {
        std::size_t pos = next().pos;
        v = ops_.div(v, unary(), pos);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept(Tok::Minus)) return ops_.neg(unary());
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept(Tok::Caret)) return base;
    const std::size_t pos = peek().pos;
    bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Number) throw ParseError("expected an integer exponent", peek().pos);
    const std::string digits = next().text;
    if (digits.size() > 6) throw ParseError("exponent too large", pos);
    long k = std::stol(digits);
    return ops_.power(base, negative ? -k : k, pos);
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return ops_.number(arith::Rational(t.text, 10));
      case Tok::Ident:
        next();
        return ops_.symbol(t.text, t.pos);
      case Tok::LParen: {
        next();
        Value v = sum();
        if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
        return v;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const Ops& ops_;
};

struct ScalarOps {
  using Value = arith::Scalar;
  std::string_view symbol_name;

  Value number(const arith::Rational& r) const { return Value(r); }
  Value symbol(const std::string& name, std::size_t pos) const {
    if (!symbol_name.empty() && name == symbol_name) return Value::parameter();
    throw ParseError("unknown symbol '" + name + "'", pos);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b, std::size_t pos) const {
    if (b.is_zero()) throw ParseError("division by zero", pos);
    return a / b;
  }
  Value power(const Value& a, long k, std::size_t pos) const {
    if (k < 0 && a.is_zero()) throw ParseError("negative power of zero", pos);
    return arith::pow(a, k);
  }
};

struct NCOps {
  using Value = pbw::NCPoly;
  pbw::PresentationPtr pres;

  static std::optional<arith::Scalar> as_scalar(const Value& v) {
    if (v.is_zero()) return arith::Scalar();
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *v.terms().begin();
    if (pbw::total_degree(m) != 0) return std::nullopt;
    return c;
  }

  Value number(const arith::Rational& r) const { return Value::constant(pres, arith::Scalar(r)); }
  Value symbol(const std::string& name, std::size_t pos) const {
    if (auto idx = pres->index_of(name)) return Value::generator(pres, *idx);
    if (pres->parameter() && pres->parameter()->symbol == name) {
      const auto& param = *pres->parameter();
      return Value::constant(pres, param.value ? arith::Scalar(*param.value) : arith::Scalar::parameter());
    }
    throw ParseError("unknown symbol '" + name + "' in " + pres->name(), pos);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const {
    if (auto s = as_scalar(a)) return *s * b;
    if (auto s = as_scalar(b)) return a * *s;
    return pbw::multiply(a, b);
  }
  Value div(const Value& a, const Value& b, std::size_t pos) const {
    auto s = as_scalar(b);
    if (!s) throw ParseError("division by a non-scalar", pos);
    if (s->is_zero()) throw ParseError("division by zero", pos);
    return a * s->inverse();
  }
  Value power(const Value& a, long k, std::size_t pos) const {
    if (k >= 0) return pbw::pow(a, static_cast<unsigned>(k));
    auto s = as_scalar(a);
    if (!s) throw ParseError("negative power of a non-scalar", pos);
    if (s->is_zero()) throw ParseError("negative power of zero", pos);
    return Value::constant(pres, arith::pow(*s, k));
  }
};

struct CommOps {
  using Value = poisson::CPoly;
  std::span<const std::string> vars;

  static std::optional<arith::Rational> as_constant(const Value& v) {
    if (v.is_zero()) return arith::Rational(0);
    if (v.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *v.terms().begin();
    for (unsigned a : m)
      if (a != 0) return std::nullopt;
    return c;
  }

  Value number(const arith::Rational& r) const { return Value::constant(vars.size(), r); }
  Value symbol(const std::string& name, std::size_t pos) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return Value::variable(vars.size(), i);
    throw ParseError("unknown variable '" + name + "'", pos);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b, std::size_t pos) const {
    auto c = as_constant(b);
    if (!c) throw ParseError("division by a non-constant", pos);
    if (*c == 0) throw ParseError("division by zero", pos);
    return a * (arith::Rational(1) / *c);
  }
  Value power(const Value& a, long k, std::size_t pos) const {
    if (k >= 0) return poisson::pow(a, static_cast<unsigned>(k));
    auto c = as_constant(a);
    if (!c) throw ParseError("negative power of a non-constant", pos);
    if (*c == 0) throw ParseError("negative power of zero", pos);
    arith::Rational r(1);
    for (long i = 0; i < -k; ++i) r /= *c;
    return Value::constant(vars.size(), r);
  }
};

}  // namespace

pbw::NCPoly parse_expression(std::string_view text, const pbw::PresentationPtr& p) {
  NCOps ops{p};
  return Parser<NCOps>(text, ops).parse_all();
}

poisson::CPoly parse_cpoly(std::string_view text, std::span<const std::string> vars) {
  CommOps ops{vars};
  return Parser<CommOps>(text, ops).parse_all();
}

std::vector<poisson::CPoly> parse_cpoly_list(std::string_view text, std::span<const std::string> vars) {
  std::vector<poisson::CPoly> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_cpoly(piece, vars));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

arith::Scalar parse_scalar(std::string_view text, std::string_view symbol) {
  ScalarOps ops{symbol};
  return Parser<ScalarOps>(text, ops).parse_all();
}

}  // namespace natmap::expr
