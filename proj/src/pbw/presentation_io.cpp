#include <fstream>

#include "natmap/errors.hpp"
#include "natmap/expression.hpp"
#include "natmap/presentation_io.hpp"

namespace natmap::pbw {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidPresentation(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) throw InvalidPresentation(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

PresentationPtr presentation_from_json(const nlohmann::json& j) {
  const std::string name = as_string(field(j, "name"), "name");

  const auto& gens_json = field(j, "generators");
  if (!gens_json.is_array()) throw InvalidPresentation("generators must be an array");
  std::vector<std::string> gens;
  for (const auto& g : gens_json) gens.push_back(as_string(g, "generator"));
  auto index = [&gens](const std::string& g) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == g) return i;
    throw InvalidPresentation("unknown generator '" + g + "'");
  };

  std::optional<Parameter> param;
  std::string symbol;
  if (j.contains("parameter") && !j.at("parameter").is_null()) {
    const auto& pj = j.at("parameter");
    symbol = as_string(field(pj, "symbol"), "parameter.symbol");
    std::optional<Rational> value;
    if (pj.contains("value") && !pj.at("value").is_null())
      value = arith::parse_rational(as_string(pj.at("value"), "parameter.value"));
    param = Parameter{symbol, value};
  }
  auto scalar = [&](const nlohmann::json& s) {
    arith::Scalar v = expr::parse_scalar(as_string(s, "coeff"), symbol);
    if (param && param->value) return arith::Scalar(arith::evaluate(v, *param->value));
    return v;
  };

  const auto& rels = field(j, "relations");
  if (!rels.is_array()) throw InvalidPresentation("relations must be an array");
  std::vector<SwapRule> rules;
  for (const auto& r : rels) {
    const auto& lhs = field(r, "lhs");
    if (!lhs.is_array() || lhs.size() != 2) throw InvalidPresentation("lhs must name two generators");
    SwapRule rule;
    rule.high = index(as_string(lhs[0], "lhs"));
    rule.low = index(as_string(lhs[1], "lhs"));
    if (rule.high <= rule.low)
      throw InvalidPresentation("lhs must list the later generator first");
    rule.coeff = r.contains("coeff") ? scalar(r.at("coeff")) : arith::Scalar(1);
    if (r.contains("rhs")) {
      const auto& rhs = r.at("rhs");
      if (!rhs.is_array()) throw InvalidPresentation("rhs must be an array of terms");
      for (const auto& term : rhs) {
        Exponents m(gens.size(), 0);
        std::size_t last = 0;
        for (const auto& g : field(term, "word")) {
          std::size_t k = index(as_string(g, "word entry"));
          if (k < last) throw InvalidPresentation("rhs word is not in generator order");
          last = k;
          ++m[k];
        }
        arith::Scalar c = scalar(field(term, "coeff"));
        if (c.is_zero()) continue;
        auto [it, inserted] = rule.tail.try_emplace(m, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) rule.tail.erase(it);
        }
      }
    }
    rules.push_back(std::move(rule));
  }
  return PBWPresentation::create(name, std::move(gens), std::move(param), std::move(rules));
}

PresentationPtr load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed presentation file " + path.string() + ": " + e.what());
  }
  return presentation_from_json(j);
}

nlohmann::ordered_json presentation_to_json(const PBWPresentation& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name();
  j["generators"] = p.generators();
  if (p.parameter()) {
    nlohmann::ordered_json pj;
    pj["symbol"] = p.parameter()->symbol;
    pj["value"] = p.parameter()->value ? nlohmann::ordered_json(arith::to_string(*p.parameter()->value))
                                       : nlohmann::ordered_json(nullptr);
    j["parameter"] = pj;
  } else {
    j["parameter"] = nullptr;
  }
  const std::string var = p.symbol();
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const auto& r : p.rules()) {
    nlohmann::ordered_json rj;
    rj["lhs"] = {p.generators()[r.high], p.generators()[r.low]};
    rj["coeff"] = r.coeff.to_string(var);
    nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
    for (const auto& [m, c] : r.tail) {
      nlohmann::ordered_json word = nlohmann::ordered_json::array();
      for (std::size_t g : word_of(m)) word.push_back(p.generators()[g]);
      rhs.push_back({{"coeff", c.to_string(var)}, {"word", word}});
    }
    rj["rhs"] = rhs;
    rels.push_back(rj);
  }
  j["relations"] = rels;
  return j;
}

}  // namespace natmap::pbw
