#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hankel {

/// An unordered vertex pair stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Closed interval [a, b] of vertex labels.
struct Interval {
  int a = 0;
  int b = 0;

  int size() const noexcept { return b - a + 1; }
  bool contains(const Interval& other) const noexcept { return a <= other.a && other.b <= b; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A graph on [n] whose labeling is closed, stored as the facets of its clique
/// complex. Facets are intervals with strictly increasing left and right
/// endpoints, a_1 = 1 and b_r = n.
class ClosedGraph {
 public:
  /// Validates and stores the facet list. Throws MalformedFacets.
  static ClosedGraph from_facets(int n, std::vector<Interval> facets);

  /// Recognizes a closed edge set under the given labeling. Throws NotClosed
  /// with a witness triple, or InvalidEdge for loops and out-of-range vertices.
  static ClosedGraph from_edges(int n, std::span<const Edge> edges);

  static ClosedGraph complete(int n);
  static ClosedGraph line(int n);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Interval>& facets() const noexcept { return facets_; }
  std::size_t max_clique_count() const noexcept { return facets_.size(); }

  bool is_connected() const noexcept;
  bool is_complete() const noexcept { return facets_.size() == 1; }
  bool is_line() const noexcept;

  /// Sorted list of all pairs {p, q} with p < q inside some facet.
  std::vector<Edge> edges() const;
  bool has_edge(int p, int q) const noexcept;

  /// Interval text form, e.g. "1-3,2-4,3-5".
  std::string to_string() const;

  friend bool operator==(const ClosedGraph&, const ClosedGraph&) = default;
  friend auto operator<=>(const ClosedGraph&, const ClosedGraph&) = default;

 private:
  ClosedGraph(int n, std::vector<Interval> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<Interval> facets_;
};

/// The graph on [m+n-2] with edges {i+k-1, j+l-2} for {i,j} in E(g1) and
/// {k,l} in E(g2). Both factors must be connected with at least two vertices
/// (DegenerateInput otherwise).
///
/// The edge-set definition is authoritative; the facet-pair construction
/// [a+c-1, b+d-2] is computed alongside and must agree.
ClosedGraph combine(const ClosedGraph& g1, const ClosedGraph& g2);

/// Inclusion-maximal intervals among [a+c-1, b+d-2] over all facet pairs.
std::vector<Interval> facet_pair_cliques(const ClosedGraph& g1, const ClosedGraph& g2);

/// All connected closed graphs on [n] in lexicographic order of facet lists.
std::vector<ClosedGraph> enumerate_connected_closed(int n);

}  // namespace hankel
