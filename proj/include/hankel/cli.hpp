#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/closed_graph.hpp"
#include "hankel/field.hpp"
#include "hankel/monomial.hpp"

namespace hankel {

/// `spec := 'K' INT | 'L' INT | interval (',' interval)*`, `interval := INT '-' INT`.
/// Facets must be listed in increasing order. Throws ParseError with the
/// offending position, or MalformedFacets for invalid interval lists.
ClosedGraph parse_graph_spec(std::string_view spec);

/// "rational" or "prime:P". Throws std::invalid_argument.
Field parse_field(std::string_view text);

/// "degrevlex" or "lex". Throws std::invalid_argument.
MonomialOrder parse_order(std::string_view text);

enum class OutputFormat { json, text };

struct CommandConfig {
  std::string command;
  std::string g1;
  std::string g2;
  MonomialOrder order = MonomialOrder::degrevlex();
  Field field = Field::rationals();
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out_path;
  bool timings = true;
  std::string check = "all";
  int max_m = 3;
  int max_n = 3;
};

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv-style arguments (without the program name) and runs the
/// command. Reports go to `out` or to --out; diagnostics and warnings go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Writes `contents` to `path` through a temporary file and a rename.
/// Throws std::runtime_error on I/O failure.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace hankel
