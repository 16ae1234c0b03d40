#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "hchroma/embedding.hpp"
#include "hchroma/error.hpp"
#include "hchroma/galois.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/host.hpp"
#include "hchroma/json_io.hpp"

using namespace hchroma;

namespace {

// Oracle: try every permutation.
bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::uint64_t brute_aut(const SimpleGraph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.relabeled(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("graph6 decoding of fixed strings") {
  CHECK(parse_graph6("@") == SimpleGraph(1));
  CHECK(parse_graph6("A_") == complete_graph(2));
  const auto star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(7);
  for (int n : {0, 1, 2, 5, 7, 12, 33, 62, 63, 64}) {
    const auto g = random_graph(n, 0.4, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 errors carry the byte offset") {
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A\x01"), ParseError);
  try {
    parse_graph6("D?{ ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
  // n = 65 via the long form.
  CHECK_THROWS_AS(parse_graph6("~?@@"), ParseError);
}

TEST_CASE("canonical form examples") {
  const auto c5 = cycle_graph(5);
  const std::vector<int> perm = {0, 2, 4, 1, 3};
  CHECK(canonical_form(c5).code == canonical_form(c5.relabeled(perm)).code);
  CHECK(canonical_form(complete_graph(3)).aut_order == 6);
  CHECK(canonical_form(stanley_g1()).code != canonical_form(stanley_g2()).code);
  CHECK(canonical_form(SimpleGraph(0)).aut_order == 1);
  CHECK(canonical_form(empty_graph(6)).aut_order == 720);
  CHECK(canonical_form(complete_graph(8)).aut_order == 40320);
  CHECK(canonical_form(cycle_graph(9)).aut_order == 18);
  CHECK(canonical_form(complete_bipartite(3, 4)).aut_order == 144);
}

TEST_CASE("canonical form is invariant under 100 random relabelings") {
  std::mt19937 rng(11);
  std::vector<SimpleGraph> graphs = {cycle_graph(7), stanley_g1(), stanley_g2(), complete_bipartite(3, 3),
                                     path_graph(9)};
  for (int i = 0; i < 6; ++i) graphs.push_back(random_graph(10 + i * 5, 0.3, rng));
  // Strongly regular graph: the Paley graph on 13 vertices.
  const PaleyHost p13(find_irreducible(13, 1));
  SimpleGraph paley13(13);
  for (Vertex u = 0; u < 13; ++u)
    for (Vertex v = u + 1; v < 13; ++v)
      if (p13.adjacent(u, v)) paley13.add_edge(static_cast<int>(u), static_cast<int>(v));
  graphs.push_back(paley13);
  for (const auto& g : graphs) {
    const auto base = canonical_form(g);
    for (int t = 0; t < 100; ++t) {
      const auto other = canonical_form(g.relabeled(random_perm(g.order(), rng)));
      CHECK(other.code == base.code);
      CHECK(other.aut_order == base.aut_order);
    }
  }
  CHECK(canonical_form(paley13).aut_order == 78);
}

TEST_CASE("equal codes iff isomorphic on small graphs") {
  // All labelled graphs on 4 vertices, plus random pairs on 5 and 6.
  std::vector<SimpleGraph> graphs;
  for (int mask = 0; mask < 64; ++mask) {
    SimpleGraph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    graphs.push_back(g);
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j)
      CHECK((canonical_form(graphs[i]).code == canonical_form(graphs[j]).code) ==
            brute_isomorphic(graphs[i], graphs[j]));

  std::mt19937 rng(3);
  for (int n : {5, 6}) {
    for (int t = 0; t < 300; ++t) {
      const auto a = random_graph(n, 0.5, rng);
      // Half the time compare against a relabelled copy with one edge toggled.
      auto b = a.relabeled(random_perm(n, rng));
      if (t % 2) {
        const int u = t % n, v = (t / 2 + 1 + u) % n;
        if (u != v) {
          if (b.adjacent(u, v)) b.remove_edge(u, v);
          else b.add_edge(u, v);
        }
      }
      CHECK((canonical_form(a).code == canonical_form(b).code) == brute_isomorphic(a, b));
    }
  }
}

TEST_CASE("automorphism orders agree with brute force") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      const auto aut = canonical_form(g).aut_order;
      CHECK(aut == brute_aut(g));
      CHECK(factorial(n) % aut == 0);
    }
  }
}

TEST_CASE("enumerate_graphs counts") {
  const std::vector<std::size_t> expected = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(enumerate_graphs(9), CapacityError);
  // Representatives are pairwise non-isomorphic.
  std::set<std::string> codes;
  for (const auto& g : enumerate_graphs(6)) codes.insert(canonical_form(g).code);
  CHECK(codes.size() == 156);
}

TEST_CASE("enumerate_trees counts") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    CHECK(enumerate_trees(n).size() == expected[n - 1]);
    for (const auto& t : enumerate_trees(n)) {
      CHECK(t.is_connected());
      CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
    }
  }
}

TEST_CASE("connected components") {
  const auto g = disjoint_union(complete_graph(2), SimpleGraph(1));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == complete_graph(2));
  CHECK(comps[1] == SimpleGraph(1));
  CHECK(connected_components(cycle_graph(5)).size() == 1);
  CHECK(connected_components(empty_graph(3)).size() == 3);
}

TEST_CASE("spanning subgraphs") {
  std::vector<int> by_size(4, 0);
  std::set<std::uint64_t> seen;
  for (const auto& s : spanning_subgraphs(complete_graph(3))) {
    ++by_size[s.graph.edge_count()];
    seen.insert(s.edge_subset);
    CHECK(s.graph.order() == 3);
  }
  CHECK(by_size == std::vector<int>{1, 3, 3, 1});
  CHECK(seen.size() == 8);
  CHECK(spanning_subgraphs(SimpleGraph(1)).size() == 1);
  CHECK(spanning_subgraphs(path_graph(3)).size() == 4);
  CHECK_THROWS_AS(spanning_subgraphs(complete_graph(9)), CapacityError);

  std::set<std::string> distinct;
  for (const auto& s : spanning_subgraphs(stanley_g1())) distinct.insert(to_json(s.graph).dump());
  CHECK(distinct.size() == 64);
}

TEST_CASE("embedding search examples") {
  const PaleyHost p5(find_irreducible(5, 1));
  auto r = find_embedding(cycle_graph(5), p5, EmbedMode::induced);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(verify_embedding(*r.embedding, p5));

  const DenseHost c4(cycle_graph(4));
  CHECK(find_embedding(complete_graph(3), c4, EmbedMode::subgraph).status == SearchStatus::not_found);

  const DenseHost k3(complete_graph(3));
  CHECK(find_embedding(path_graph(3), k3, EmbedMode::induced).status == SearchStatus::not_found);
  CHECK(find_embedding(path_graph(3), k3, EmbedMode::subgraph).status == SearchStatus::found);

  CHECK(find_embedding(path_graph(3), k3, EmbedMode::subgraph, Budget{0}).status == SearchStatus::budget_exceeded);
}

TEST_CASE("induced embeddings induce isomorphic copies") {
  const PaleyHost p25(find_irreducible(5, 2));
  const PaleyHost p13(find_irreducible(13, 1));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (const HostGraph* h : {static_cast<const HostGraph*>(&p25), static_cast<const HostGraph*>(&p13)}) {
        auto r = find_embedding(g, *h, EmbedMode::induced);
        // Every graph on 3 vertices embeds; larger ones need not (P(13) has clique number 3).
        if (n <= 3) REQUIRE(r.status == SearchStatus::found);
        if (r.status != SearchStatus::found) continue;
        std::vector<Vertex> image = r.embedding->map;
        CHECK(isomorphic(induced_pattern(*h, image), g));
        // Determinism: the same call gives the same map.
        CHECK(find_embedding(g, *h, EmbedMode::induced).embedding->map == image);
      }
    }
  }
  CHECK(find_embedding(complete_graph(4), p13, EmbedMode::induced).status == SearchStatus::not_found);
  CHECK(find_embedding(complete_graph(5), p25, EmbedMode::induced).status == SearchStatus::found);
}

TEST_CASE("graph JSON") {
  const auto j = to_json(path_graph(3));
  CHECK(j.dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK(graph_from_json(j) == path_graph(3));
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,0]]})")), ParameterError);
}
