#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hankel/closed_graph.hpp"
#include "hankel/field.hpp"

namespace hankel {

/// "flagged" marks a documented discrepancy between a published statement
/// and the computed value; it never indicates a failed computation.
enum class Status { pass, fail, flagged };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  nlohmann::json claimed;
  nlohmann::json computed;
  std::string paper_ref;
  std::string note;

  nlohmann::json to_json() const;
};

/// Results of one or more verifiers on a single instance (g1, g2).
struct Report {
  ClosedGraph g1;
  ClosedGraph g2;
  std::vector<Check> checks;
  std::map<std::string, double> timings_ms;
  /// Checks not run because the ring exceeds a size cap.
  std::vector<std::string> skipped;

  /// fail if any check failed, else flagged if any was flagged, else pass.
  Status status() const;
  std::size_t count(Status s) const;
  nlohmann::json to_json(bool with_timings = true) const;
  void append(const Report& other);
};

nlohmann::json graph_json(const ClosedGraph& g);

struct VerifierOptions {
  Field field = Field::rationals();
  /// Largest ring for the Betti-based Cohen-Macaulay check.
  std::size_t cm_max_vars = 6;
  /// Largest ring for the Betti-based linear-resolution cross-check.
  std::size_t linear_max_vars = 6;
  /// Largest ring for the regularity checks.
  std::size_t regularity_max_vars = 7;
  /// Sweep worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// G = combine(g1, g2) is closed and connected, I_{g1,g2} = I_G by reduced
/// bases and by generator membership in both directions, and every minor
/// telescopes into scroll generators of G.
Report verify_combined_ideal(const ClosedGraph& g1, const ClosedGraph& g2,
                             const VerifierOptions& options = {});

/// The scroll generators of I_G already form a Gröbner basis, the reduced
/// basis is quadratic, dim S/I = 2, and (small rings) depth = 2.
Report verify_quadratic_cohen_macaulay(const ClosedGraph& g1, const ClosedGraph& g2,
                                       const VerifierOptions& options = {});

/// Maximal cliques of G, enumerated from its edge set, each arise as
/// [a+c-1, b+d-2] from facets [a,b] of g1 and [c,d] of g2. Also lists
/// facet-pair cliques that are not maximal and the decompositions of each
/// maximal clique.
Report verify_clique_decomposition(const ClosedGraph& g1, const ClosedGraph& g2,
                                   const VerifierOptions& options = {});

/// Combinatorial claims about primality, minimal primes, radicality and
/// linear resolutions, each cross-checked by computation.
struct ClassificationReport {
  bool prime_claimed = false;
  std::vector<std::string> min_primes_claimed;
  bool radical_claimed = false;
  bool linear_resolution_claimed = false;

  std::optional<bool> radical_computed;
  std::optional<std::string> radical_witness;
  std::optional<bool> linear_resolution_computed;

  Report report;

  /// The report plus a "classification" object with the fields above.
  nlohmann::json to_json(bool with_timings = true) const;
};

ClassificationReport classify(const ClosedGraph& g1, const ClosedGraph& g2,
                              const VerifierOptions& options = {});

/// reg(S/I) against the clique count of G and the vertex bound m+n-3; the
/// printed constant m+n-2 is reported as flagged on line pairs. Throws
/// CapExceeded above options.regularity_max_vars.
Report verify_regularity_bound(const ClosedGraph& g1, const ClosedGraph& g2,
                               const VerifierOptions& options = {});

enum class CheckKind { combined_ideal, quadratic_cm, clique_decomposition, classification, regularity };

/// Parses the CLI names "thm1.1", "corollary", "prop2.1", "thm2.3",
/// "prop2.4" and "all". Throws std::invalid_argument.
std::set<CheckKind> parse_check_kinds(const std::string& name);
std::string check_kind_name(CheckKind kind);

Report run_checks(const ClosedGraph& g1, const ClosedGraph& g2, const std::set<CheckKind>& kinds,
                  const VerifierOptions& options = {});

struct SweepReport {
  std::vector<Report> reports;
  /// Instance whose report contains a failed check; the sweep stops there.
  std::optional<Report> aborted_on;

  std::size_t count(Status s) const;
  nlohmann::json to_json(bool with_timings = true) const;
};

/// Runs the selected checks over all ordered pairs of connected closed graphs
/// on [m] and [n], 2 <= m <= max_m, 2 <= n <= max_n, in enumeration order.
SweepReport sweep(int max_m, int max_n, const std::set<CheckKind>& kinds,
                  const VerifierOptions& options = {});

}  // namespace hankel
