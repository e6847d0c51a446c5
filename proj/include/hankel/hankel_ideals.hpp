#pragma once

#include <vector>

#include "hankel/closed_graph.hpp"
#include "hankel/groebner.hpp"

namespace hankel {

/// The 2-minor of the m x n Hankel matrix (entry (r,c) = x_{r+c-1}) on rows
/// e = {i, j} and columns f = {k, l}.
struct MinorSpec {
  int m = 0;
  int n = 0;
  Edge rows;
  Edge cols;

  std::size_t num_vars() const noexcept { return static_cast<std::size_t>(m + n - 1); }
  /// Throws IndexOutOfRange.
  void validate() const;
};

/// Scroll generator x_p x_{q+1} - x_{p+1} x_q of the 2 x (N-1) Hankel matrix.
struct ScrollGen {
  Edge edge;
  std::size_t num_vars = 0;

  Polynomial polynomial(const Field& field = Field::rationals()) const;

  friend bool operator==(const ScrollGen&, const ScrollGen&) = default;
};

/// x_{i+k-1} x_{j+l-1} - x_{j+k-1} x_{i+l-1} in m+n-1 variables.
Polynomial hankel_minor(const MinorSpec& spec, const Field& field = Field::rationals());

/// Ideal generated by the minors over E(g1) x E(g2), duplicates removed
/// (first occurrence kept). Throws DegenerateInput for edgeless or
/// disconnected factors.
Ideal pair_ideal(const ClosedGraph& g1, const ClosedGraph& g2,
                 const Field& field = Field::rationals());

/// Generators of pair_ideal before deduplication, in edge-pair order.
std::vector<MinorSpec> pair_minor_specs(const ClosedGraph& g1, const ClosedGraph& g2);

/// Scroll binomial edge ideal of g, living in |V(g)| + 1 variables.
Ideal scroll_ideal(const ClosedGraph& g, const Field& field = Field::rationals());

/// Scroll generators h_1, ..., h_t of the combined graph with
/// h_1 + ... + h_t = hankel_minor(spec). Peels off the scroll generator on
/// {i+k-1, j+l-2} and continues with rows {i+1, j}, columns {k, l-1} until a
/// gap reaches one, so t = min(j-i, l-k).
std::vector<ScrollGen> telescoping_decomposition(const MinorSpec& spec);

/// Every 2-minor of the m x n Hankel matrix.
Ideal full_minor_ideal(int m, int n, const Field& field = Field::rationals());

/// (x_2, ..., x_{m+n-2}) in m+n-1 variables.
Ideal interior_prime(int m, int n, const Field& field = Field::rationals());

}  // namespace hankel
