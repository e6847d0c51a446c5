#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/verifier.hpp"

using namespace hankel;
using nlohmann::json;

namespace {

const Check& find_check(const Report& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  if (it == r.checks.end()) throw std::runtime_error("no check named " + name);
  return *it;
}

bool has_check(const Report& r, const std::string& name) {
  return std::any_of(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
}

const ClosedGraph K2 = ClosedGraph::complete(2);
const ClosedGraph K3 = ClosedGraph::complete(3);
const ClosedGraph L3 = ClosedGraph::line(3);
const ClosedGraph G1 = ClosedGraph::from_facets(5, {{1, 3}, {2, 4}, {3, 5}});
const ClosedGraph G2 = ClosedGraph::from_facets(5, {{1, 3}, {2, 5}});

}  // namespace

TEST_CASE("combined ideal checks") {
  const auto r = verify_combined_ideal(K2, K2);
  CHECK(r.status() == Status::pass);
  CHECK(find_check(r, "ideal_equality").computed["basis_size"] == 1);

  const auto lines = verify_combined_ideal(L3, L3);
  CHECK(lines.status() == Status::pass);
  CHECK(find_check(lines, "combined_graph_closed_connected").computed["graph"]["spec"] == "1-2,2-3,3-4");

  const auto big = verify_combined_ideal(G1, G2);
  CHECK(big.status() == Status::pass);
  CHECK(big.checks.size() == 5);
  const auto j = big.to_json(false);
  CHECK(j["instance"]["g1"]["facets"] == json::parse("[[1,3],[2,4],[3,5]]"));
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK(big.to_json(true).contains("timings_ms"));
}

TEST_CASE("quadratic Cohen-Macaulay checks") {
  const auto r = verify_quadratic_cohen_macaulay(K2, K3);
  CHECK(r.status() == Status::pass);
  CHECK(find_check(r, "reduced_basis_quadratic").computed["size"] == 3);
  CHECK(find_check(r, "krull_dimension").computed == 2);
  CHECK(find_check(r, "cohen_macaulay").computed["depth"] == 2);

  const auto lines = verify_quadratic_cohen_macaulay(L3, L3);
  CHECK(lines.status() == Status::pass);
  CHECK(find_check(lines, "cohen_macaulay").computed["pd"] == 3);

  VerifierOptions capped;
  capped.cm_max_vars = 3;
  const auto skipped = verify_quadratic_cohen_macaulay(L3, L3, capped);
  CHECK_FALSE(has_check(skipped, "cohen_macaulay"));
  CHECK(skipped.skipped == std::vector<std::string>{"cohen_macaulay"});
}

TEST_CASE("clique decomposition checks") {
  const auto r = verify_clique_decomposition(G1, G2);
  CHECK(find_check(r, "maximal_cliques_from_facet_pairs").status == Status::pass);
  CHECK(find_check(r, "maximal_cliques_from_facet_pairs").computed["maximal_cliques"] ==
        json::parse("[[1,4],[2,6],[3,7],[4,8]]"));
  const auto& non_max = find_check(r, "non_maximal_facet_pair_cliques").computed;
  CHECK(std::find(non_max.begin(), non_max.end(), json::parse(R"({"clique":[3,6],"from":[[3,5],[1,3]]})")) !=
        non_max.end());
  const auto& published = find_check(r, "published_clique_list");
  CHECK(published.status == Status::flagged);
  CHECK(published.claimed == json::parse("[[1,3],[2,6],[3,7],[4,8]]"));
  CHECK(r.status() == Status::flagged);

  const auto lines = verify_clique_decomposition(L3, L3);
  CHECK(lines.status() == Status::pass);
  CHECK_FALSE(has_check(lines, "published_clique_list"));
  bool found = false;
  for (const auto& d : find_check(lines, "clique_decompositions").computed) {
    if (d["clique"] == json::parse("[2,3]")) {
      CHECK(d["count"] == 2);
      found = true;
    }
  }
  CHECK(found);

  const auto complete = verify_clique_decomposition(ClosedGraph::complete(4), ClosedGraph::complete(3));
  CHECK(find_check(complete, "maximal_cliques_from_facet_pairs").computed["maximal_cliques"] == json::parse("[[1,5]]"));
}

TEST_CASE("classification") {
  const auto prime = classify(K2, K3);
  CHECK(prime.prime_claimed);
  CHECK(prime.linear_resolution_claimed);
  CHECK(prime.linear_resolution_computed == true);
  CHECK(prime.report.status() == Status::pass);
  CHECK(find_check(prime.report, "prime").computed["primality"] == "assumed-cited");

  const auto radical = classify(K2, L3);
  CHECK_FALSE(radical.prime_claimed);
  CHECK(radical.radical_claimed);
  CHECK(radical.radical_computed == true);
  CHECK(radical.min_primes_claimed == std::vector<std::string>{"I(K2,K3)", "(x2,x3)"});
  CHECK(radical.report.status() == Status::pass);
  const auto j = radical.to_json(false);
  CHECK(j["classification"]["min_primes"].size() == 2);

  const auto non_radical = classify(K2, ClosedGraph::line(4));
  CHECK_FALSE(non_radical.radical_claimed);
  CHECK(non_radical.radical_computed == false);
  REQUIRE(non_radical.radical_witness.has_value());
  const auto& rad = find_check(non_radical.report, "radical").computed;
  CHECK(rad["witness_in_ideal"] == false);
  CHECK(rad["witness_in_radical"] == true);
  CHECK(non_radical.report.status() == Status::pass);
}

TEST_CASE("classification claims agree with computation for small pairs") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& g1 : enumerate_connected_closed(m)) {
        for (const auto& g2 : enumerate_connected_closed(n)) {
          const auto c = classify(g1, g2);
          CHECK(c.report.status() == Status::pass);
          REQUIRE(c.radical_computed.has_value());
          CHECK(*c.radical_computed == c.radical_claimed);
          if (m + n - 1 <= 6) CHECK(c.linear_resolution_computed == c.linear_resolution_claimed);
        }
      }
    }
  }
}

TEST_CASE("regularity checks") {
  const auto l2 = verify_regularity_bound(K2, K2);
  CHECK(find_check(l2, "regularity_at_most_clique_count").computed == 1);
  CHECK(find_check(l2, "printed_equality_constant").status == Status::flagged);
  CHECK(find_check(l2, "printed_equality_constant").claimed == 2);
  CHECK(find_check(l2, "vertex_bound_equality_iff_line_pair").status == Status::pass);

  const auto l3 = verify_regularity_bound(L3, L3);
  CHECK(find_check(l3, "regularity_at_most_clique_count").computed == 3);
  CHECK(find_check(l3, "clique_count_equality_iff_line_pair").status == Status::pass);

  const auto mixed = verify_regularity_bound(K3, L3);
  CHECK(find_check(mixed, "regularity_at_most_clique_count").computed == 2);
  CHECK(find_check(mixed, "vertex_bound_equality_iff_line_pair").status == Status::pass);
  CHECK(find_check(mixed, "printed_equality_constant").status == Status::pass);
  // reg equals the clique count of the combined graph here as well.
  CHECK(find_check(mixed, "clique_count_equality_iff_line_pair").status == Status::flagged);
  CHECK(mixed.count(Status::fail) == 0);

  VerifierOptions capped;
  capped.regularity_max_vars = 4;
  CHECK_THROWS_AS(verify_regularity_bound(L3, L3, capped), CapExceeded);
}

TEST_CASE("check names") {
  CHECK(parse_check_kinds("thm1.1") == std::set<CheckKind>{CheckKind::combined_ideal});
  CHECK(parse_check_kinds("all").size() == 5);
  CHECK_THROWS_AS(parse_check_kinds("thm9"), std::invalid_argument);
  for (const auto kind : parse_check_kinds("all")) CHECK(parse_check_kinds(check_kind_name(kind)) == std::set{kind});
}

TEST_CASE("sweeps") {
  const auto thm = sweep(4, 4, parse_check_kinds("thm1.1"));
  CHECK(thm.reports.size() == 64);
  CHECK(thm.count(Status::pass) == 64);
  CHECK_FALSE(thm.aborted_on.has_value());

  const auto one = sweep(2, 2, parse_check_kinds("thm2.3"));
  REQUIRE(one.reports.size() == 1);
  CHECK(find_check(one.reports[0], "prime").claimed == true);

  const auto all = sweep(3, 3, parse_check_kinds("all"));
  CHECK(all.reports.size() == 9);
  CHECK(all.count(Status::fail) == 0);
  std::size_t printed_flags = 0;
  for (const auto& r : all.reports) {
    for (const auto& c : r.checks) printed_flags += (c.name == "printed_equality_constant" && c.status == Status::flagged);
  }
  CHECK(printed_flags == 4);

  CHECK(sweep(1, 3, parse_check_kinds("all")).reports.empty());
}

TEST_CASE("sweep reports are deterministic across thread counts") {
  VerifierOptions one;
  one.threads = 1;
  VerifierOptions many;
  many.threads = 4;
  const auto kinds = parse_check_kinds("all");
  const auto a = sweep(3, 4, kinds, one).to_json(false).dump();
  const auto b = sweep(3, 4, kinds, many).to_json(false).dump();
  CHECK(a == b);
}
