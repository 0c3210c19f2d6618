#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "natmap/cli.hpp"
#include "natmap/errors.hpp"
#include "natmap/expression.hpp"
#include "natmap/limitmap.hpp"
#include "natmap/pbw.hpp"
#include "natmap/poisson.hpp"
#include "natmap/presentation_io.hpp"

namespace natmap::cli {

using arith::Scalar;
using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kEFH{"e", "f", "h"};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  auto d = std::chrono::steady_clock::now() - since;
  return std::chrono::duration<double, std::milli>(d).count();
}

struct Check {
  std::string name;
  bool passed = false;
  ordered_json details = ordered_json::object();
  double millis = 0.0;
};

Check timed(std::string name, const std::function<bool(ordered_json&)>& body) {
  Check c;
  c.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  c.passed = body(c.details);
  c.millis = elapsed_ms(t0);
  return c;
}

ordered_json detail_value(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  return v;
}

ordered_json check_json(const Check& c, bool timing) {
  ordered_json j;
  j["name"] = c.name;
  j["status"] = c.passed ? "pass" : "fail";
  j["details"] = c.details;
  if (timing) j["timing_ms"] = std::round(c.millis * 1000.0) / 1000.0;
  return j;
}

std::string exponent_key(const std::vector<unsigned>& m) {
  std::string k;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) k += ',';
    k += std::to_string(m[i]);
  }
  return k;
}

ordered_json poly_json(const pbw::NCPoly& p) {
  ordered_json terms = ordered_json::object();
  const std::string var = p.presentation()->symbol();
  for (const auto& [m, c] : p.terms()) terms[exponent_key(m)] = c.to_string(var);
  return {{"text", pbw::to_string(p)}, {"terms", terms}};
}

ordered_json poly_json(const poisson::CPoly& p, std::span<const std::string> vars) {
  ordered_json terms = ordered_json::object();
  for (const auto& [m, c] : p.terms()) terms[exponent_key(m)] = arith::to_string(c);
  return {{"text", poisson::to_string(p, vars)}, {"terms", terms}};
}

std::vector<std::string> basis_text(const ideals::CommIdeal& I) { return ideals::basis_strings(I); }

// Resolved algebra: a PBW presentation, or the Poisson algebra B1.
struct Algebra {
  pbw::PresentationPtr pbw;
  std::optional<poisson::PoissonAlgebra> poisson;
};

Algebra resolve(const RunConfig& cfg) {
  if (!cfg.presentation_path.empty()) return {pbw::load_presentation(cfg.presentation_path), std::nullopt};
  const std::string& a = cfg.algebra;
  if (a == "B1") return {nullptr, poisson::B1()};
  if (a == "B") return {pbw::builtin::B(), std::nullopt};
  if (a == "B_q" || a == "Bq") return {pbw::builtin::B_q(), std::nullopt};
  if (a == "Usl2") return {pbw::builtin::Usl2(), std::nullopt};
  if (a.starts_with("B_lambda:")) {
    auto lambda = arith::parse_rational(a.substr(9));
    return {pbw::builtin::B_lambda(lambda), std::nullopt};
  }
  throw InputError("unknown algebra '" + a + "' (expected B, B_q, Usl2, B_lambda:<value> or B1)");
}

pbw::PresentationPtr require_pbw(const Algebra& alg, const std::string& command) {
  if (!alg.pbw) throw InputError(command + " needs a PBW presentation, not B1");
  return alg.pbw;
}

// Poisson algebra for bracket/closure/member: B1 itself, or the
// semiclassical limit of a presentation with a symbolic parameter.
poisson::PoissonAlgebra require_poisson(const Algebra& alg) {
  if (alg.poisson) return *alg.poisson;
  if (!alg.pbw->has_symbolic_parameter())
    throw InputError(alg.pbw->name() + " has no symbolic parameter, so no semiclassical limit");
  return poisson::semiclassical_limit(*alg.pbw);
}

void expect_operands(const RunConfig& cfg, std::size_t n) {
  if (cfg.operands.size() != n)
    throw InputError(cfg.command + " expects " + std::to_string(n) + " expression(s), got " +
                     std::to_string(cfg.operands.size()));
}

struct Outcome {
  ordered_json result = ordered_json::object();
  std::vector<Check> checks;
  ordered_json reports;  // verify-paper only
  std::string text;
  bool passed = true;
};

Outcome cmd_nf(const RunConfig& cfg) {
  expect_operands(cfg, 1);
  auto p = require_pbw(resolve(cfg), "nf");
  auto z = expr::parse_expression(cfg.operands[0], p);
  Outcome o;
  o.result["algebra"] = p->name();
  o.result["normal_form"] = poly_json(z);
  o.text = pbw::to_string(z);
  return o;
}

Outcome cmd_comm(const RunConfig& cfg) {
  expect_operands(cfg, 2);
  auto p = require_pbw(resolve(cfg), "comm");
  auto a = expr::parse_expression(cfg.operands[0], p);
  auto b = expr::parse_expression(cfg.operands[1], p);
  auto c = pbw::commutator(a, b);
  Outcome o;
  o.result["algebra"] = p->name();
  o.result["commutator"] = poly_json(c);
  o.text = pbw::to_string(c);
  return o;
}

Outcome cmd_bracket(const RunConfig& cfg) {
  expect_operands(cfg, 2);
  auto A = require_poisson(resolve(cfg));
  auto a = expr::parse_cpoly(cfg.operands[0], A.vars());
  auto b = expr::parse_cpoly(cfg.operands[1], A.vars());
  auto c = poisson::poisson_bracket(A, a, b);
  Outcome o;
  o.result["vars"] = A.vars();
  o.result["bracket"] = poly_json(c, A.vars());
  o.text = poisson::to_string(c, A.vars());
  return o;
}

ordered_json bracket_table(const poisson::PoissonAlgebra& A) {
  ordered_json t = ordered_json::object();
  for (std::size_t i = 0; i < A.nvars(); ++i)
    for (std::size_t j = i + 1; j < A.nvars(); ++j)
      t[A.vars()[i] + "," + A.vars()[j]] = poisson::to_string(A.bracket(i, j), A.vars());
  return t;
}

Outcome cmd_limit(const RunConfig& cfg) {
  auto p = require_pbw(resolve(cfg), "limit");
  if (!p->has_symbolic_parameter()) throw InputError(p->name() + " has no symbolic parameter");
  Outcome o;
  std::optional<poisson::PoissonAlgebra> A;
  o.checks.push_back(timed("semiclassical_limit", [&](ordered_json& d) {
    try {
      A = poisson::semiclassical_limit(*p);
      return true;
    } catch (const NotCommutativeAtOne& e) {
      d["error"] = e.what();
    } catch (const DivisionFailure& e) {
      d["error"] = e.what();
    }
    return false;
  }));
  if (A) {
    o.result["vars"] = A->vars();
    o.result["brackets"] = bracket_table(*A);
    o.checks.push_back(timed("jacobi", [&](ordered_json& d) {
      d["admissible"] = A->admissible();
      return A->admissible();
    }));
  }
  return o;
}

Outcome cmd_closure(const RunConfig& cfg) {
  auto A = require_poisson(resolve(cfg));
  if (cfg.ideal.empty()) throw InputError("closure needs --ideal");
  ideals::CommIdeal I(A.vars(), expr::parse_cpoly_list(cfg.ideal, A.vars()), cfg.order);
  auto Q = ideals::poisson_closure(I, A);
  Outcome o;
  o.result["vars"] = A.vars();
  o.result["order"] = cfg.order.name();
  o.result["basis"] = basis_text(Q);
  o.checks.push_back(timed("closure_is_poisson", [&](ordered_json& d) {
    bool ok = ideals::is_poisson_ideal(Q, A);
    d["is_poisson"] = ok;
    return ok;
  }));
  std::string text;
  for (const auto& s : basis_text(Q)) text += (text.empty() ? "" : "\n") + s;
  o.text = text.empty() ? "0" : text;
  return o;
}

Outcome cmd_member(const RunConfig& cfg) {
  auto A = require_poisson(resolve(cfg));
  if (cfg.ideal.empty() || cfg.poly.empty()) throw InputError("member needs --ideal and --poly");
  ideals::CommIdeal I(A.vars(), expr::parse_cpoly_list(cfg.ideal, A.vars()), cfg.order);
  if (cfg.use_closure) I = ideals::poisson_closure(I, A);
  auto p = expr::parse_cpoly(cfg.poly, A.vars());
  auto m = ideals::membership(p, I);
  Outcome o;
  o.result["vars"] = A.vars();
  o.result["order"] = cfg.order.name();
  o.result["ideal_basis"] = basis_text(I);
  o.result["poly"] = poly_json(p, A.vars());
  o.result["member"] = m.member;
  o.result["remainder"] = poly_json(m.remainder, A.vars());
  o.text = m.member ? "member" : "not a member";
  return o;
}

Outcome cmd_gk(const RunConfig& cfg) {
  auto p = require_pbw(resolve(cfg), "gk");
  if (cfg.d_max < 1) throw InputError("--dmax must be at least 1");
  Outcome o;
  o.checks.push_back(timed("confluent", [&](ordered_json& d) {
    d["confluent"] = p->confluent();
    return p->confluent();
  }));
  if (!p->confluent()) return o;
  std::vector<std::size_t> dims;
  o.checks.push_back(timed("growth_dimensions", [&](ordered_json& d) {
    dims = pbw::growth_dimensions(*p, cfg.d_max);
    d["d_max"] = cfg.d_max;
    return true;
  }));
  o.result["algebra"] = p->name();
  o.result["dimensions"] = dims;
  if (cfg.d_max >= 4) {
    const unsigned from = std::max(1u, cfg.d_max / 2);
    o.result["slope"] = {{"from", from}, {"to", cfg.d_max},
                         {"estimate", pbw::gk_slope_estimate(dims, from, cfg.d_max)}};
  }
  return o;
}

ordered_json overlap_json(const pbw::PBWPresentation& p, const pbw::OverlapReport& r) {
  ordered_json entries = ordered_json::array();
  const auto& g = p.generators();
  for (const auto& e : r.entries) {
    entries.push_back({{"word", g[e.high] + "*" + g[e.middle] + "*" + g[e.low]},
                       {"left_first", pbw::to_string(pbw::NCPoly(pbw::PresentationPtr(&p, [](const auto*) {}), e.left_first))},
                       {"right_first", pbw::to_string(pbw::NCPoly(pbw::PresentationPtr(&p, [](const auto*) {}), e.right_first))},
                       {"agrees", e.agrees}});
  }
  return entries;
}

Outcome cmd_overlaps(const RunConfig& cfg) {
  auto p = require_pbw(resolve(cfg), "overlaps");
  Outcome o;
  o.checks.push_back(timed("overlaps", [&](ordered_json& d) {
    auto r = pbw::check_pbw_overlaps(*p);
    d["algebra"] = p->name();
    d["ambiguities"] = r.entries.size();
    std::size_t bad = std::count_if(r.entries.begin(), r.entries.end(), [](const auto& e) { return !e.agrees; });
    d["failing"] = bad;
    o.result["entries"] = overlap_json(*p, r);
    return r.passed;
  }));
  return o;
}

// Binomial C(d+3, 3).
std::size_t tetrahedral(std::size_t d) { return (d + 1) * (d + 2) * (d + 3) / 6; }

std::vector<Check> global_checks(const limitmap::SampleSet& S) {
  std::vector<Check> out;
  out.push_back(timed("semiclassical_limit", [](ordered_json& d) {
    auto A = poisson::semiclassical_limit(*pbw::builtin::B());
    d["brackets"] = bracket_table(A);
    d["jacobi"] = A.admissible();
    return A == poisson::B1() && A.admissible();
  }));
  out.push_back(timed("pbw_overlaps", [&S](ordered_json& d) {
    std::vector<pbw::PresentationPtr> ps{pbw::builtin::B(), pbw::builtin::B_q(), pbw::builtin::Usl2()};
    for (const auto& node : S.nodes()) ps.push_back(pbw::builtin::B_lambda(node));
    bool ok = true;
    for (const auto& p : ps) {
      bool passed = pbw::check_pbw_overlaps(*p).passed;
      d[p->name()] = passed;
      ok = ok && passed;
    }
    return ok;
  }));
  out.push_back(timed("isomorphism_usl2_bq", [](ordered_json& d) {
    auto Bq = pbw::builtin::B_q();
    auto inv = (Scalar::parameter() - Scalar(1)).inverse();
    std::vector<pbw::NCPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(inv * pbw::NCPoly::generator(Bq, i));
    auto m = pbw::make_morphism(pbw::builtin::Usl2(), Bq, images);
    auto res = pbw::morphism_residuals(m);
    for (std::size_t i = 0; i < res.size(); ++i) d["relation_" + std::to_string(i)] = pbw::to_string(res[i]);
    return m.verified;
  }));
  out.push_back(timed("growth", [&S](ordered_json& d) {
    constexpr unsigned kMax = 12;
    std::vector<pbw::PresentationPtr> ps{pbw::builtin::B(), pbw::builtin::B_lambda(S.nodes().front()),
                                         pbw::builtin::Usl2()};
    bool ok = true;
    for (const auto& p : ps) {
      auto dims = pbw::growth_dimensions(*p, kMax);
      bool match = true;
      for (std::size_t k = 0; k < dims.size(); ++k) match = match && dims[k] == tetrahedral(k);
      double slope = pbw::gk_slope_estimate(dims, 6, kMax);
      d[p->name()] = {{"dims_match_binomial", match}, {"slope", std::round(slope * 1e6) / 1e6}};
      ok = ok && match && slope >= 2.8 && slope <= 3.2;
    }
    return ok;
  }));
  out.push_back(timed("gamma_hat_parameter", [](ordered_json& d) {
    auto Bq = pbw::builtin::B_q();
    auto q = pbw::NCPoly::constant(Bq, Scalar::parameter());
    auto img = limitmap::specialize_at_one(q);
    bool one = img == poisson::CPoly::constant(3, 1);
    d["gamma_hat(q)"] = poisson::to_string(img, kEFH);
    bool pole = false;
    try {
      limitmap::specialize_at_one((Scalar::parameter() - Scalar(1)).inverse() * pbw::NCPoly::generator(Bq, 0));
    } catch (const PoleAtOne&) {
      pole = true;
    }
    d["pole_at_one_raised"] = pole;
    return one && pole;
  }));
  return out;
}

ordered_json counterexample_json(const limitmap::CounterexampleReport& r, bool timing) {
  ordered_json j;
  j["n"] = r.n;
  ordered_json nodes = ordered_json::array();
  for (const auto& x : r.nodes) nodes.push_back(arith::to_string(x));
  j["nodes"] = nodes;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    Check k{c.name, c.passed, ordered_json::object(), c.millis};
    for (const auto& [key, value] : c.details) k.details[key] = detail_value(value);
    checks.push_back(check_json(k, timing));
  }
  j["checks"] = checks;
  if (r.certificate && r.certificate->verdict() == ideals::PrimalityCertificate::Verdict::NotPrime) {
    j["witness"] = {{"element", poisson::to_string(*r.certificate->witness(), kEFH)},
                    {"exponent", r.certificate->exponent()}};
  } else {
    j["witness"] = nullptr;
  }
  j["closure_basis"] = r.closure_basis;
  j["ordinary_ideal"] = {{"basis", r.ordinary_basis}, {"is_poisson", r.ordinary_is_poisson}};
  j["verdict"] = r.passed() ? "pass" : "fail";
  return j;
}

Outcome cmd_verify(const RunConfig& cfg) {
  auto S = limitmap::SampleSet::integers(cfg.samples);
  Outcome o;
  std::vector<std::future<limitmap::CounterexampleReport>> jobs;
  for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n)
    jobs.push_back(std::async(std::launch::async, [n, &S] { return limitmap::verify_counterexample(n, S); }));
  o.checks = global_checks(S);
  o.reports = ordered_json::array();
  for (auto& job : jobs) {
    auto r = job.get();
    o.passed = o.passed && r.passed();
    o.reports.push_back(counterexample_json(r, cfg.timing));
  }
  return o;
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  if (!cfg.presentation_path.empty())
    j["presentation"] = cfg.presentation_path;
  else
    j["algebra"] = cfg.algebra;
  j["operands"] = cfg.operands;
  if (!cfg.ideal.empty()) j["ideal"] = cfg.ideal;
  if (!cfg.poly.empty()) j["poly"] = cfg.poly;
  j["closure"] = cfg.use_closure;
  j["d_max"] = cfg.d_max;
  j["n_min"] = cfg.n_min;
  j["n_max"] = cfg.n_max;
  j["samples"] = cfg.samples;
  j["order"] = cfg.order.name();
  return j;
}

Outcome dispatch(const RunConfig& cfg) {
  static const std::map<std::string, Outcome (*)(const RunConfig&)> table{
      {"nf", cmd_nf},           {"comm", cmd_comm},     {"bracket", cmd_bracket},
      {"limit", cmd_limit},     {"closure", cmd_closure}, {"member", cmd_member},
      {"gk", cmd_gk},           {"overlaps", cmd_overlaps}, {"verify-paper", cmd_verify}};
  auto it = table.find(cfg.command);
  if (it == table.end()) throw InputError("unknown command '" + cfg.command + "'");
  return it->second(cfg);
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string md_value(const ordered_json& v) {
  return md_escape(v.is_string() ? v.get<std::string>() : v.dump());
}

void md_checks(std::ostream& os, const ordered_json& checks) {
  os << "| check | status | details |\n|---|---|---|\n";
  for (const auto& c : checks) {
    std::string details;
    for (const auto& [k, v] : c.at("details").items()) {
      if (!details.empty()) details += "; ";
      details += md_escape(k) + " = " + md_value(v);
    }
    os << "| " << c.at("name").get<std::string>() << " | " << c.at("status").get<std::string>() << " | " << details
       << " |\n";
  }
}

}  // namespace

void RunConfig::validate() const {
  if (n_min < 2) throw PreconditionError("n_min must be at least 2");
  if (n_min > n_max) throw PreconditionError("n_min must not exceed n_max");
  if (samples < 3) throw PreconditionError("at least 3 samples are required");
}

std::size_t default_samples() {
  if (const char* env = std::getenv("NATMAP_SAMPLES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 3 && v <= 64) return static_cast<std::size_t>(v);
  }
  return 5;
}

Report execute(const RunConfig& cfg) {
  Report rep;
  ordered_json& j = rep.json;
  j["tool"] = "natmap";
  j["version"] = NATMAP_VERSION;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config_json(cfg);
  try {
    cfg.validate();
    Outcome o = dispatch(cfg);
    bool ok = o.passed;
    ordered_json checks = ordered_json::array();
    for (const auto& c : o.checks) {
      checks.push_back(check_json(c, cfg.timing));
      ok = ok && c.passed;
    }
    j["result"] = o.result;
    j["checks"] = checks;
    if (!o.reports.is_null()) j["reports"] = o.reports;
    j["verdict"] = ok ? "pass" : "fail";
    rep.text = o.text;
    rep.exit_code = ok ? 0 : 1;
  } catch (const InputError& e) {
    j["verdict"] = "error";
    j["error"] = {{"kind", "input"}, {"message", e.what()}};
    rep.exit_code = 2;
  } catch (const PreconditionError& e) {
    j["verdict"] = "error";
    j["error"] = {{"kind", "input"}, {"message", e.what()}};
    rep.exit_code = 2;
  } catch (const Error& e) {
    j["verdict"] = "fail";
    j["error"] = {{"kind", "math"}, {"message", e.what()}};
    rep.exit_code = 1;
  }
  return rep;
}

std::string render(const Report& report, Format format) {
  const auto& j = report.json;
  if (format == Format::Json) return j.dump(2) + "\n";

  std::ostringstream os;
  if (j.contains("error")) {
    os << "error: " << j["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (!report.text.empty() && report.exit_code == 0) return report.text + "\n";

  const std::string command = j["config"]["command"];
  os << "# natmap " << command << "\n\n";
  const auto& result = j["result"];
  if (result.contains("brackets")) {
    os << "| pair | bracket |\n|---|---|\n";
    for (const auto& [k, v] : result["brackets"].items()) os << "| {" << k << "} | " << md_value(v) << " |\n";
    os << "\n";
  }
  if (result.contains("dimensions")) {
    os << "| d | dim |\n|---|---|\n";
    const auto& dims = result["dimensions"];
    for (std::size_t d = 0; d < dims.size(); ++d) os << "| " << d << " | " << dims[d].dump() << " |\n";
    if (result.contains("slope"))
      os << "\nslope estimate over d = " << result["slope"]["from"].dump() << ".." << result["slope"]["to"].dump()
         << ": " << result["slope"]["estimate"].dump() << "\n";
    os << "\n";
  }
  if (result.contains("entries")) {
    os << "| word | agrees |\n|---|---|\n";
    for (const auto& e : result["entries"]) os << "| " << md_value(e["word"]) << " | " << e["agrees"].dump() << " |\n";
    os << "\n";
  }
  if (!j["checks"].empty()) {
    md_checks(os, j["checks"]);
    os << "\n";
  }
  if (j.contains("reports")) {
    for (const auto& r : j["reports"]) {
      os << "## n = " << r["n"].dump() << "\n\n";
      md_checks(os, r["checks"]);
      if (!r["witness"].is_null())
        os << "\nwitness: " << r["witness"]["element"].get<std::string>() << "^" << r["witness"]["exponent"].dump()
           << " in Q_n\n";
      os << "\nQ_n basis: ";
      bool first = true;
      for (const auto& g : r["closure_basis"]) {
        os << (first ? "" : ", ") << g.get<std::string>();
        first = false;
      }
      os << "\n\nverdict: " << r["verdict"].get<std::string>() << "\n\n";
    }
  }
  os << "**verdict: " << j["verdict"].get<std::string>() << "**\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for the quantized sl2 family and its semiclassical limit", "natmap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", NATMAP_VERSION);

  RunConfig cfg;
  cfg.samples = default_samples();
  std::string format = "markdown";
  std::string order = "degrevlex";
  bool no_timing = false;

  auto common = [&](CLI::App* s, bool algebra) {
    s->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
    s->add_flag("--no-timing", no_timing, "omit timing fields");
    if (algebra) {
      s->add_option("--algebra", cfg.algebra, "B, B_q, Usl2, B_lambda:<value> or B1");
      s->add_option("--presentation", cfg.presentation_path, "presentation JSON file");
    }
  };
  auto with_order = [&](CLI::App* s) {
    s->add_option("--order", order, "degrevlex or lex")->check(CLI::IsMember({"degrevlex", "lex"}));
  };

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", cfg.operands)->required()->expected(1);
  auto* comm = app.add_subcommand("comm", "commutator a*b - b*a");
  comm->add_option("exprs", cfg.operands)->required()->expected(2);
  auto* bracket = app.add_subcommand("bracket", "Poisson bracket {a, b}");
  bracket->add_option("exprs", cfg.operands)->required()->expected(2);
  auto* limit = app.add_subcommand("limit", "semiclassical limit of a presentation");
  auto* closure = app.add_subcommand("closure", "Poisson closure of an ideal");
  closure->add_option("--ideal", cfg.ideal, "comma-separated generators")->required();
  with_order(closure);
  auto* member = app.add_subcommand("member", "ideal membership");
  member->add_option("--ideal", cfg.ideal, "comma-separated generators")->required();
  member->add_option("--poly", cfg.poly)->required();
  member->add_flag("--closure", cfg.use_closure, "test against the Poisson closure");
  with_order(member);
  auto* gk = app.add_subcommand("gk", "growth table");
  gk->add_option("--dmax", cfg.d_max)->check(CLI::Range(1u, 40u));
  auto* overlaps = app.add_subcommand("overlaps", "confluence check");
  auto* verify = app.add_subcommand("verify-paper", "full verification pipeline per n");
  verify->add_option("--n-min", cfg.n_min);
  verify->add_option("--n-max", cfg.n_max);
  verify->add_option("--samples", cfg.samples);

  for (auto* s : {nf, comm, bracket, limit, closure, member, gk, overlaps}) common(s, true);
  common(verify, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : Format::Markdown;
  cfg.order = order == "lex" ? ideals::MonomialOrder::lex() : ideals::MonomialOrder::degrevlex();
  cfg.timing = !no_timing;

  Report rep = execute(cfg);
  if (rep.json.contains("error") && cfg.format == Format::Markdown)
    err << render(rep, cfg.format);
  else
    out << render(rep, cfg.format);
  return rep.exit_code;
}

}  // namespace natmap::cli
