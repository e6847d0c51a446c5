#include "hankel/closed_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::string interval_text(const Interval& iv) {
  return "[" + std::to_string(iv.a) + "," + std::to_string(iv.b) + "]";
}

}  // namespace

ClosedGraph ClosedGraph::from_facets(int n, std::vector<Interval> facets) {
  if (n < 1) throw MalformedFacets("vertex count must be positive");
  if (facets.empty()) throw MalformedFacets("facet list is empty");
  for (const auto& iv : facets) {
    if (iv.a < 1 || iv.b > n || iv.a > iv.b) {
      throw MalformedFacets("facet " + interval_text(iv) + " is not an interval inside [1," +
                            std::to_string(n) + "]");
    }
  }
  for (std::size_t i = 0; i + 1 < facets.size(); ++i) {
    const auto& cur = facets[i];
    const auto& next = facets[i + 1];
    if (cur.contains(next) || next.contains(cur)) {
      throw MalformedFacets("facet " + interval_text(next) + " and " + interval_text(cur) +
                            " are nested");
    }
    if (next.a <= cur.a || next.b <= cur.b) {
      throw MalformedFacets("facets are not sorted: " + interval_text(cur) + " before " +
                            interval_text(next));
    }
    if (next.a > cur.b + 1) {
      throw MalformedFacets("vertices between " + interval_text(cur) + " and " +
                            interval_text(next) + " are not covered");
    }
  }
  if (facets.front().a != 1) throw MalformedFacets("first facet must start at 1");
  if (facets.back().b != n) throw MalformedFacets("last facet must end at n");
  return ClosedGraph(n, std::move(facets));
}

ClosedGraph ClosedGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw MalformedFacets("vertex count must be positive");
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (const auto& e : edges) {
    const int p = std::min(e.u, e.v);
    const int q = std::max(e.u, e.v);
    if (p == q) throw InvalidEdge("loop at vertex " + std::to_string(p));
    if (p < 1 || q > n) {
      throw InvalidEdge("edge {" + std::to_string(p) + "," + std::to_string(q) +
                        "} outside [1," + std::to_string(n) + "]");
    }
    adj[p][q] = adj[q][p] = 1;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = i + 1; k < j; ++k) {
        if (!adj[i][k] || !adj[k][j]) throw NotClosed(i, k, j);
      }
    }
  }
  // reach[i] = largest neighbour above i; nondecreasing for closed labelings.
  std::vector<Interval> facets;
  int prev_reach = 0;
  for (int i = 1; i <= n; ++i) {
    int reach = i;
    for (int j = n; j > i; --j) {
      if (adj[i][j]) {
        reach = j;
        break;
      }
    }
    if (reach > prev_reach) facets.push_back({i, reach});
    prev_reach = std::max(prev_reach, reach);
  }
  return from_facets(n, std::move(facets));
}

ClosedGraph ClosedGraph::complete(int n) { return from_facets(n, {{1, n}}); }

ClosedGraph ClosedGraph::line(int n) {
  if (n == 1) return complete(1);
  std::vector<Interval> facets;
  for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
  return from_facets(n, std::move(facets));
}

bool ClosedGraph::is_connected() const noexcept {
  if (n_ == 1) return true;
  for (std::size_t i = 0; i + 1 < facets_.size(); ++i) {
    if (facets_[i + 1].a > facets_[i].b) return false;
  }
  return facets_.front().a < facets_.front().b;
}

bool ClosedGraph::is_line() const noexcept {
  return n_ >= 2 && std::all_of(facets_.begin(), facets_.end(),
                                [](const Interval& iv) { return iv.b == iv.a + 1; }) &&
         static_cast<int>(facets_.size()) == n_ - 1;
}

std::vector<Edge> ClosedGraph::edges() const {
  std::set<Edge> out;
  for (const auto& iv : facets_) {
    for (int p = iv.a; p <= iv.b; ++p) {
      for (int q = p + 1; q <= iv.b; ++q) out.insert({p, q});
    }
  }
  return {out.begin(), out.end()};
}

bool ClosedGraph::has_edge(int p, int q) const noexcept {
  if (p > q) std::swap(p, q);
  if (p == q) return false;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Interval& iv) { return iv.a <= p && q <= iv.b; });
}

std::string ClosedGraph::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) os << ',';
    os << facets_[i].a << '-' << facets_[i].b;
  }
  return os.str();
}

std::vector<Interval> facet_pair_cliques(const ClosedGraph& g1, const ClosedGraph& g2) {
  std::vector<Interval> candidates;
  for (const auto& f1 : g1.facets()) {
    for (const auto& f2 : g2.facets()) candidates.push_back({f1.a + f2.a - 1, f1.b + f2.b - 2});
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Interval> maximal;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Interval& o) {
      return o != c && o.contains(c);
    });
    if (!dominated) maximal.push_back(c);
  }
  return maximal;
}

ClosedGraph combine(const ClosedGraph& g1, const ClosedGraph& g2) {
  const int m = g1.vertex_count();
  const int n = g2.vertex_count();
  if (m < 2 || n < 2) throw DegenerateInput("both factors need at least two vertices");
  if (!g1.is_connected() || !g2.is_connected()) {
    throw DegenerateInput("both factors must be connected");
  }
  std::vector<Edge> edge_set;
  for (const auto& e : g1.edges()) {
    for (const auto& f : g2.edges()) edge_set.push_back({e.u + f.u - 1, e.v + f.v - 2});
  }
  std::sort(edge_set.begin(), edge_set.end());
  edge_set.erase(std::unique(edge_set.begin(), edge_set.end()), edge_set.end());
  ClosedGraph g = ClosedGraph::from_edges(m + n - 2, edge_set);
  if (g.facets() != facet_pair_cliques(g1, g2) || g.edges() != edge_set) {
    throw std::logic_error("facet-pair construction disagrees with the edge-set definition for " +
                           g1.to_string() + " x " + g2.to_string());
  }
  return g;
}

std::vector<ClosedGraph> enumerate_connected_closed(int n) {
  std::vector<ClosedGraph> out;
  if (n < 2) return out;
  std::vector<Interval> current;
  std::function<void()> extend = [&]() {
    const Interval last = current.back();
    if (last.b == n) {
      out.push_back(ClosedGraph::from_facets(n, current));
      return;
    }
    for (int a = last.a + 1; a <= last.b; ++a) {
      for (int b = last.b + 1; b <= n; ++b) {
        current.push_back({a, b});
        extend();
        current.pop_back();
      }
    }
  };
  for (int b = 2; b <= n; ++b) {
    current = {{1, b}};
    extend();
  }
  return out;
}

}  // namespace hankel
