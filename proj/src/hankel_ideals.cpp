#include "hankel/hankel_ideals.hpp"

#include <algorithm>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

Polynomial binomial(const RingSpec& ring, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t n = ring.num_vars;
  return Polynomial::monomial(ring, Monomial::variable(n, a) * Monomial::variable(n, b)) -
         Polynomial::monomial(ring, Monomial::variable(n, c) * Monomial::variable(n, d));
}

void check_factors(const ClosedGraph& g1, const ClosedGraph& g2) {
  if (g1.vertex_count() < 2 || g2.vertex_count() < 2) {
    throw DegenerateInput("both factors need at least two vertices");
  }
  if (!g1.is_connected() || !g2.is_connected()) throw DegenerateInput("factors must be connected");
}

}  // namespace

void MinorSpec::validate() const {
  auto bad = [&](const std::string& what) { throw IndexOutOfRange("minor " + what); };
  if (m < 1 || n < 1) bad("has an empty matrix");
  if (rows.u < 1 || rows.u >= rows.v || rows.v > m) bad("rows must satisfy 1 <= i < j <= m");
  if (cols.u < 1 || cols.u >= cols.v || cols.v > n) bad("columns must satisfy 1 <= k < l <= n");
}

Polynomial ScrollGen::polynomial(const Field& field) const {
  if (edge.u < 1 || edge.u >= edge.v || static_cast<std::size_t>(edge.v) + 1 > num_vars) {
    throw IndexOutOfRange("scroll edge outside the 2 x (N-1) matrix");
  }
  const RingSpec ring(num_vars, field);
  const auto p = static_cast<std::size_t>(edge.u);
  const auto q = static_cast<std::size_t>(edge.v);
  return binomial(ring, p, q + 1, p + 1, q);
}

Polynomial hankel_minor(const MinorSpec& spec, const Field& field) {
  spec.validate();
  const RingSpec ring(spec.num_vars(), field);
  const auto i = static_cast<std::size_t>(spec.rows.u);
  const auto j = static_cast<std::size_t>(spec.rows.v);
  const auto k = static_cast<std::size_t>(spec.cols.u);
  const auto l = static_cast<std::size_t>(spec.cols.v);
  return binomial(ring, i + k - 1, j + l - 1, j + k - 1, i + l - 1);
}

std::vector<MinorSpec> pair_minor_specs(const ClosedGraph& g1, const ClosedGraph& g2) {
  check_factors(g1, g2);
  std::vector<MinorSpec> specs;
  for (const auto& e : g1.edges()) {
    for (const auto& f : g2.edges()) specs.push_back({g1.vertex_count(), g2.vertex_count(), e, f});
  }
  return specs;
}

Ideal pair_ideal(const ClosedGraph& g1, const ClosedGraph& g2, const Field& field) {
  std::vector<Polynomial> gens;
  for (const auto& spec : pair_minor_specs(g1, g2)) {
    Polynomial g = hankel_minor(spec, field);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return Ideal(RingSpec(static_cast<std::size_t>(g1.vertex_count() + g2.vertex_count() - 1), field),
               std::move(gens));
}

Ideal scroll_ideal(const ClosedGraph& g, const Field& field) {
  const auto n = static_cast<std::size_t>(g.vertex_count()) + 1;
  std::vector<Polynomial> gens;
  for (const auto& e : g.edges()) gens.push_back(ScrollGen{e, n}.polynomial(field));
  return Ideal(RingSpec(n, field), std::move(gens));
}

std::vector<ScrollGen> telescoping_decomposition(const MinorSpec& spec) {
  spec.validate();
  std::vector<ScrollGen> out;
  int i = spec.rows.u, j = spec.rows.v, k = spec.cols.u, l = spec.cols.v;
  // g(e,f) = h({i+k-1, j+l-2}) + g({i+1,j}, {k,l-1}); shrinking the columns
  // by one on each side gives the same remainder minor.
  for (;;) {
    out.push_back({{i + k - 1, j + l - 2}, spec.num_vars()});
    if (j - i == 1 || l - k == 1) break;
    ++i;
    --l;
  }
  return out;
}

Ideal full_minor_ideal(int m, int n, const Field& field) {
  return pair_ideal(ClosedGraph::complete(m), ClosedGraph::complete(n), field);
}

Ideal interior_prime(int m, int n, const Field& field) {
  const RingSpec ring(static_cast<std::size_t>(m + n - 1), field);
  std::vector<Polynomial> gens;
  for (int v = 2; v <= m + n - 2; ++v) gens.push_back(Polynomial::variable(ring, static_cast<std::size_t>(v)));
  return Ideal(ring, std::move(gens));
}

}  // namespace hankel
