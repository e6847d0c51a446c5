#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hankel/groebner.hpp"

namespace hankel {

/// Graded Betti numbers beta_{i,j} of S/I. Entries absent from the map are
/// zero. Derived invariants throw IncompleteTable when the table was computed
/// below the degree that guarantees completeness.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, int>, std::uint64_t>;

  BettiTable(std::size_t num_vars, Entries entries, int complete_up_to, bool complete);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint64_t at(int i, int j) const;
  const Entries& entries() const noexcept { return entries_; }
  int complete_up_to() const noexcept { return complete_up_to_; }
  bool is_complete() const noexcept { return complete_; }

  int regularity() const;
  int projective_dimension() const;
  /// Auslander-Buchsbaum: N - pd.
  int depth() const;
  bool is_cohen_macaulay(int dimension) const;
  /// beta_{i,j} = 0 for all i >= 1 and j != i + 1.
  bool has_linear_resolution() const;

  /// Macaulay2-style staircase: row r lists beta_{i,i+r}.
  std::string to_text() const;
  nlohmann::json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  void require_complete() const;

  std::size_t num_vars_;
  Entries entries_;
  int complete_up_to_;
  bool complete_;
};

/// Largest ring handled by graded_betti: $HANKEL_MAX_BETTI_VARS, or 9.
std::size_t default_betti_cap();

struct BettiOptions {
  std::size_t max_vars = default_betti_cap();
  /// Highest internal degree to compute; defaults to the Taylor bound of in(I).
  std::optional<int> degree_bound;
};

/// Degree-d monomials outside `init`: a basis of (S/I)_d.
std::vector<Monomial> standard_monomials(const MonomialIdeal& init, unsigned degree);

/// Koszul homology data: the Betti table plus chain-space dimensions
/// dim K_{i,j} = C(N, i) * dim (S/I)_{j-i} for the Euler characteristic check.
struct KoszulHomology {
  BettiTable table;
  std::map<std::pair<int, int>, std::uint64_t> chain_dims;
  int taylor_bound = 0;
};

/// beta_{i,j}(S/I) = dim H_i(x_1..x_N; S/I)_j via exact ranks of the Koszul
/// differentials on standard-monomial bases. The ideal must be homogeneous
/// and proper. When the ideal is also homogeneous for deg(x_v) = v the
/// complex is split along that grading as well. Throws CapExceeded.
KoszulHomology koszul_homology(const Ideal& ideal, const BettiOptions& options = {});
BettiTable graded_betti(const Ideal& ideal, const BettiOptions& options = {});

}  // namespace hankel
