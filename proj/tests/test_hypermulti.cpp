#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "hchroma/error.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/hypermulti.hpp"

using namespace hchroma;

namespace {

// Oracle: number of bijections from V(G) onto the hyperedge positions that send
// adjacent vertices to intersecting hyperedges, divided by the multiplicity
// symmetries, i.e. the number of admissible maps to the distinct hyperedges.
BigInt brute_admissible_maps(const SimpleGraph& g, const HyperMultigraph& h) {
  const auto& edges = h.edges();
  if (edges.size() != static_cast<std::size_t>(g.order())) return 0;
  std::vector<int> perm(edges.size());
  std::iota(perm.begin(), perm.end(), 0);
  BigInt bijections = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if ((edges[perm[u]] & edges[perm[v]]) == 0) ok = false;
    if (ok) ++bijections;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<HyperEdge, int> mult;
  for (auto e : edges) ++mult[e];
  BigInt sym = 1;
  for (const auto& [e, c] : mult) sym *= factorial(c);
  return bijections / sym;
}

// Oracle: automorphisms by trying every vertex permutation.
BigInt brute_aut(const HyperMultigraph& h) {
  std::vector<int> perm(h.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  auto sorted = h.edges();
  std::sort(sorted.begin(), sorted.end());
  BigInt count = 0;
  do {
    std::vector<HyperEdge> image;
    for (auto e : sorted) {
      HyperEdge f = 0;
      for (int v = 0; v < h.vertex_count(); ++v)
        if ((e >> v) & 1) f |= HyperEdge{1} << perm[v];
      image.push_back(f);
    }
    std::sort(image.begin(), image.end());
    if (image == sorted) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("canonicalize examples") {
  const auto a = canonicalize(2, {{1, 2}, {2, 3}});
  const auto b = canonicalize(2, {{7, 9}, {9, 4}});
  CHECK(a == b);
  CHECK(a.vertex_count() == 3);
  CHECK(a.edge_count() == 2);
  CHECK(canonicalize(2, {{1, 2}, {3, 4}}) != a);
  CHECK(canonicalize(2, {{1, 2}, {1, 2}}) != canonicalize(2, {{1, 2}, {3, 4}}));
  CHECK(canonicalize(2, {{1, 2}, {2, 1}}) == canonicalize(2, {{5, 6}, {5, 6}}));
  CHECK(canonicalize(2, {}) == empty_class(2));
  CHECK(empty_class(2).vertex_count() == 0);
  CHECK_THROWS_AS(canonicalize(2, {{1, 2, 3}}), UniformityError);
  CHECK_THROWS_AS(canonicalize(2, {{1, 1}}), UniformityError);
  CHECK_THROWS_AS(canonicalize(3, {{1, 2}}), UniformityError);
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(canonicalize(2, {{1, 2}})) == 2);
  CHECK(aut_order(canonicalize(2, {{1, 2}, {3, 4}})) == 8);
  CHECK(aut_order(canonicalize(2, {{1, 2}, {1, 2}})) == 2);
  CHECK(aut_order(canonicalize(2, {{1, 2}, {2, 3}, {1, 3}})) == 6);
  CHECK(aut_order(canonicalize(1, {{1}, {2}, {2}})) == 1);
  CHECK(aut_order(canonicalize(3, {{1, 2, 3}, {3, 4, 5}})) == 8);
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : enumerate_classes(n, 2)) CHECK(h.aut_order() == brute_aut(h));
  for (int n = 1; n <= 3; ++n)
    for (const auto& h : enumerate_classes(n, 3)) CHECK(h.aut_order() == brute_aut(h));
}

TEST_CASE("canonicalize is invariant under relabelling") {
  std::mt19937 rng(5);
  for (int k : {1, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& h : enumerate_classes(n, k)) {
        for (int t = 0; t < 20; ++t) {
          std::vector<int> labels(40);
          std::iota(labels.begin(), labels.end(), 100);
          std::shuffle(labels.begin(), labels.end(), rng);
          auto lists = h.edge_lists();
          for (auto& e : lists) {
            for (auto& v : e) v = labels[v];
            std::shuffle(e.begin(), e.end(), rng);
          }
          std::shuffle(lists.begin(), lists.end(), rng);
          const auto again = canonicalize(k, lists);
          CHECK(again == h);
          // Idempotent on its own canonical position.
          CHECK(canonicalize(k, again.edge_lists()).edges() == again.edges());
        }
      }
    }
  }
}

TEST_CASE("class counts") {
  // Multigraphs without isolated vertices, and the connected ones.
  const std::vector<std::size_t> all2 = {1, 3, 8, 23, 66, 212, 686};
  const std::vector<std::size_t> conn2 = {1, 2, 5, 12, 33, 103, 333};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_classes(n, 2).size() == all2[n - 1]);
    CHECK(enumerate_classes(n, 2, true).size() == conn2[n - 1]);
  }
  // k = 1: integer partitions.
  const std::vector<std::size_t> partitions = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_classes(n, 1).size() == partitions[n - 1]);
  CHECK(enumerate_classes(20, 1).size() == 627);
  CHECK(enumerate_classes(3, 1, true).size() == 1);
  // k = 3, two triples: sharing 0, 1, 2 or 3 vertices.
  CHECK(enumerate_classes(1, 3).size() == 1);
  CHECK(enumerate_classes(2, 3).size() == 4);
  CHECK(enumerate_classes(2, 3, true).size() == 3);
  CHECK(enumerate_classes(0, 2).size() == 1);

  for (const auto& h : enumerate_classes(5, 2)) CHECK(h.edge_count() == 5);
  std::set<std::string> codes;
  for (const auto& h : enumerate_classes(6, 2)) codes.insert(h.code());
  CHECK(codes.size() == 212);
}

TEST_CASE("components") {
  const auto h = canonicalize(2, {{1, 2}, {2, 3}, {4, 5}, {4, 5}});
  const auto comps = connected_components(h);
  REQUIRE(comps.size() == 2);
  CHECK(disjoint_union(comps[0], comps[1]) == h);
  CHECK_FALSE(h.is_connected());
  CHECK(canonicalize(2, {{1, 2}, {2, 3}}).is_connected());
  CHECK(connected_components(empty_class(2)).empty());
  for (const auto& c : enumerate_classes(4, 2, true)) CHECK(connected_components(c).size() == 1);
}

TEST_CASE("admissible set examples") {
  auto one = admissible_set(SimpleGraph(1), 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].cls == canonicalize(2, {{1, 2}}));
  CHECK(one[0].maps == 1);

  auto k2 = admissible_set(complete_graph(2), 2);
  REQUIRE(k2.size() == 2);
  std::map<std::string, BigInt> maps;
  for (const auto& a : k2) maps[a.cls.code()] = a.maps;
  CHECK(maps.at(canonicalize(2, {{1, 2}, {2, 3}}).code()) == 2);
  CHECK(maps.at(canonicalize(2, {{1, 2}, {1, 2}}).code()) == 1);

  // P3: path, star, triangle, doubled edge with a pendant, tripled edge.
  auto p3 = admissible_set(path_graph(3), 2);
  REQUIRE(p3.size() == 5);
  maps.clear();
  for (const auto& a : p3) maps[a.cls.code()] = a.maps;
  CHECK(maps.at(canonicalize(2, {{1, 2}, {2, 3}, {3, 4}}).code()) == 2);
  CHECK(maps.at(canonicalize(2, {{1, 2}, {1, 3}, {1, 4}}).code()) == 6);
  CHECK(maps.at(canonicalize(2, {{1, 2}, {2, 3}, {1, 3}}).code()) == 6);
  CHECK(maps.at(canonicalize(2, {{1, 2}, {1, 2}, {2, 3}}).code()) == 3);
  CHECK(maps.at(canonicalize(2, {{1, 2}, {1, 2}, {1, 2}}).code()) == 1);

  // k = 1: a connected graph collapses onto one repeated singleton.
  auto c4 = admissible_set(cycle_graph(4), 1);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].cls == canonicalize(1, {{0}, {0}, {0}, {0}}));
  CHECK(c4[0].maps == 1);

  CHECK_THROWS_AS(admissible_set(empty_graph(2), 2), DomainError);
}

TEST_CASE("admissible sets agree with brute force") {
  for (int k : {1, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      if (k == 3 && n > 3) continue;
      for (const auto& g : enumerate_graphs(n)) {
        if (!g.is_connected()) continue;
        std::map<std::string, BigInt> expected;
        for (const auto& h : enumerate_classes(n, k)) {
          const auto count = brute_admissible_maps(g, h);
          if (count > 0) expected[h.code()] = count;
        }
        std::map<std::string, BigInt> got;
        for (const auto& a : admissible_set(g, k)) {
          got[a.cls.code()] = a.maps;
          CHECK(a.maps == count_image_maps(g, a.cls, true));
          CHECK(is_admissible(g, a.cls));
        }
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("admissibility is inherited by spanning subgraphs") {
  for (const auto& g : {path_graph(3), cycle_graph(4), complete_graph(4), star_graph(3)}) {
    for (const auto& a : admissible_set(g, 2))
      for (const auto& s : spanning_subgraphs(g)) CHECK(is_admissible(s.graph, a.cls));
  }
}

TEST_CASE("disjoint image maps") {
  // K2 onto two disjoint edges: either orientation.
  CHECK(count_image_maps(complete_graph(2), canonicalize(2, {{1, 2}, {3, 4}}), false) == 2);
  CHECK(count_image_maps(complete_graph(2), canonicalize(2, {{1, 2}, {2, 3}}), false) == 0);
  CHECK(count_image_maps(empty_graph(2), canonicalize(2, {{1, 2}, {1, 2}}), false) == 1);
}
