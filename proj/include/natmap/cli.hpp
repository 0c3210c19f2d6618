#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "natmap/ideals.hpp"

namespace natmap::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Markdown };

struct RunConfig {
  std::string command;
  /// Built-in algebra name: B, B_q, Usl2, B_lambda:<value>, B1.
  std::string algebra = "B";
  /// Presentation file; overrides `algebra` when set.
  std::string presentation_path;
  std::vector<std::string> operands;
  std::string ideal;
  std::string poly;
  /// member: test against the Poisson closure instead of the ideal itself.
  bool use_closure = false;
  unsigned d_max = 12;
  unsigned n_min = 2;
  unsigned n_max = 5;
  std::size_t samples = 5;
  ideals::MonomialOrder order = ideals::MonomialOrder::degrevlex();
  Format format = Format::Markdown;
  bool timing = true;

  /// Throws PreconditionError unless 2 <= n_min <= n_max and samples >= 3.
  void validate() const;
};

struct Report {
  int exit_code = 0;
  nlohmann::ordered_json json;
  /// Plain result line(s) for single-value commands; empty otherwise.
  std::string text;
};

/// Never throws for natmap errors; they become exit code 1 or 2.
Report execute(const RunConfig& config);
std::string render(const Report& report, Format format);

/// Default sample count: NATMAP_SAMPLES if set and valid, else 5.
std::size_t default_samples();

/// argv-style entry point (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace natmap::cli
