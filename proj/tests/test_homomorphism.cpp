#include <algorithm>
#include <map>

#include "doctest.h"

#include "hchroma/error.hpp"
#include "hchroma/galois.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/homomorphism.hpp"
#include "hchroma/host.hpp"
#include "hchroma/json_io.hpp"

using namespace hchroma;

namespace {

// Oracle: every map V(G) -> V(H), grouped by sorted image.
MonomialPoly brute_poly(const SimpleGraph& g, const HostGraph& h, bool weak) {
  MonomialPoly out;
  out.graph_order = g.order();
  const auto n = static_cast<int>(h.order());
  std::vector<Vertex> image(g.order(), 0);
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      const bool same = image[u] == image[v];
      if (!(h.adjacent(image[u], image[v]) || (weak && same))) ok = false;
    }
    if (ok) {
      auto key = image;
      std::sort(key.begin(), key.end());
      out.terms[key] += 1;
    }
    int i = 0;
    while (i < g.order() && ++image[i] == static_cast<Vertex>(n)) image[i++] = 0;
    if (i == g.order()) break;
  }
  return out;
}

SimpleGraph edge_subgraph(const SimpleGraph& g, std::uint64_t mask) {
  SimpleGraph s(g.order());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((mask >> i) & 1) s.add_edge(edges[i].first, edges[i].second);
  return s;
}

// Right-hand side of the inclusion-exclusion identity: sum over edge subsets
// S of (-1)^|S| W_{complement H}(G_S).
MonomialPoly alternating_weak_sum(const SimpleGraph& g, const HostGraph& h) {
  const auto hc = complement(h);
  MonomialPoly out;
  out.graph_order = g.order();
  const auto m = g.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int sign = std::popcount(mask) % 2 ? -1 : 1;
    for (const auto& [key, c] : w_h(edge_subgraph(g, mask), *hc).terms) out.terms[key] += sign * c;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST_CASE("homomorphism count examples") {
  CHECK(count_hom(path_graph(3), CompleteHost(3)) == 12);
  CHECK(count_hom(complete_graph(3), CompleteHost(3)) == 6);
  for (int n = 1; n <= 5; ++n) CHECK(count_hom(complete_graph(2), CompleteHost(n)) == n * (n - 1));
  CHECK(count_hom(cycle_graph(5), CompleteHost(3)) == 30);
  CHECK(count_hom(SimpleGraph(0), CompleteHost(4)) == 1);
  CHECK(count_hom(complete_graph(2), CompleteHost(0)) == 0);

  const PaleyHost p5(find_irreducible(5, 1));
  CHECK(count_hom(complete_graph(3), p5) == 0);
  CHECK(count_hom(complete_graph(2), p5) == 10);
  // Ordered pairs of disjoint 2-subsets of a 5-set: 10 * 3.
  CHECK(count_hom(complete_graph(2), KneserHost(5, 2)) == 30);
}

TEST_CASE("weak homomorphism examples") {
  for (int n = 1; n <= 5; ++n) CHECK(count_weak_hom(complete_graph(2), CompleteHost(n)) == n * n);
  CHECK(count_weak_hom(complete_graph(2), DenseHost(empty_graph(2))) == 2);
  CHECK(count_weak_hom(path_graph(3), DenseHost(complete_graph(2))) == 8);
}

TEST_CASE("counts agree with brute force on small graphs") {
  std::vector<std::shared_ptr<HostGraph>> hosts;
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : enumerate_graphs(n)) hosts.push_back(std::make_shared<DenseHost>(h));
  hosts.push_back(std::make_shared<CompleteHost>(4));
  hosts.push_back(std::make_shared<KneserHost>(5, 2));
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (const auto& h : hosts) {
        const auto x = x_h(g, *h);
        const auto w = w_h(g, *h);
        CHECK(x == brute_poly(g, *h, false));
        CHECK(w == brute_poly(g, *h, true));
        const auto hom = count_hom(g, *h);
        const auto weak = count_weak_hom(g, *h);
        CHECK(hom == x.mass());
        CHECK(weak == w.mass());
        CHECK(weak >= hom);
      }
}

TEST_CASE("x_h examples") {
  const DenseHost k2(complete_graph(2));
  const auto x = x_h(complete_graph(2), k2);
  REQUIRE(x.terms.size() == 1);
  CHECK(x.terms.begin()->first == std::vector<Vertex>{0, 1});
  CHECK(x.terms.begin()->second == 2);

  const DenseHost two(empty_graph(2));
  const auto w = w_h(complete_graph(2), two);
  CHECK(w.terms.size() == 2);
  CHECK(w.terms.at({0, 0}) == 1);
  CHECK(w.terms.at({1, 1}) == 1);

  const auto single = x_h(SimpleGraph(1), KneserHost(5, 2));
  CHECK(single.terms.size() == 10);
  for (const auto& [key, c] : single.terms) CHECK(c == 1);

  // A proper colouring of G2 by 2-subsets of {1..6} with image {12,13,34,56,56}.
  const KneserHost kn(6, 2);
  auto id = [&](std::uint32_t mask) {
    for (Vertex v = 0; v < kn.order(); ++v)
      if (kn.subset(v) == mask) return v;
    FAIL("missing subset");
    return Vertex{0};
  };
  std::vector<Vertex> target = {id(0b000011), id(0b000101), id(0b001100), id(0b110000), id(0b110000)};
  std::sort(target.begin(), target.end());
  const auto poly = x_h(stanley_g2(), kn);
  REQUIRE(poly.terms.count(target) == 1);
  CHECK(poly.terms.at(target) > 0);

  const auto j = to_json(x, k2);
  CHECK(j.dump() == R"({"graphOrder":2,"terms":[{"coeff":"2","image":[0,1]}]})");
  CHECK(to_json(single, kn)["terms"][0]["image"][0].dump() == "[1,2]");
}

TEST_CASE("inclusion-exclusion identity between X_H and weak W") {
  CHECK(x_h(path_graph(3), CompleteHost(3)) == alternating_weak_sum(path_graph(3), CompleteHost(3)));
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n))
      for (int m = 1; m <= 4; ++m)
        for (const auto& h : enumerate_graphs(m)) {
          const DenseHost host(h);
          CHECK(x_h(g, host) == alternating_weak_sum(g, host));
        }
}

TEST_CASE("multiplicativity") {
  const PaleyHost p13(find_irreducible(13, 1));
  const std::vector<SimpleGraph> parts = {complete_graph(2), path_graph(3), cycle_graph(4), complete_graph(3)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      const auto u = disjoint_union(a, b);
      CHECK(count_hom(u, CompleteHost(4)) == count_hom(a, CompleteHost(4)) * count_hom(b, CompleteHost(4)));
      CHECK(count_hom(u, p13) == count_hom(a, p13) * count_hom(b, p13));
    }
}

TEST_CASE("chromatic polynomial") {
  // Trees: n (n-1)^(m-1).
  for (int m = 1; m <= 9; ++m)
    for (const auto& t : enumerate_trees(m)) {
      const auto chi = chromatic_polynomial(t);
      for (int n = 0; n <= 6; ++n) CHECK(evaluate(chi, n) == BigInt(n) * pow(BigInt(n - 1), m - 1));
    }
  CHECK(chromatic_polynomial(complete_graph(3)) == std::vector<BigInt>{0, 2, -3, 1});
  CHECK(chromatic_polynomial(empty_graph(3)) == std::vector<BigInt>{0, 0, 0, 1});
  CHECK(chromatic_polynomial(path_graph(3)) == std::vector<BigInt>{0, 1, -2, 1});
  for (int v = 1; v <= 5; ++v)
    for (const auto& g : enumerate_graphs(v)) {
      const auto chi = chromatic_polynomial(g);
      CHECK(chi.size() == static_cast<std::size_t>(v + 1));
      for (int n = 0; n <= v + 3; ++n) CHECK(evaluate(chi, n) == count_hom(g, CompleteHost(n)));
    }
  CHECK_THROWS_AS(chromatic_polynomial(empty_graph(13)), CapacityError);
}

TEST_CASE("hom profiles") {
  const auto k1 = hom_profile(SimpleGraph(1), 4);
  CHECK(k1.hosts.size() == 1 + 2 + 4 + 11);
  for (std::size_t i = 0; i < k1.hosts.size(); ++i) CHECK(k1.counts[i] == k1.hosts[i].order());

  const auto a = hom_profile(stanley_g1(), 5);
  const auto b = hom_profile(stanley_g2(), 5);
  CHECK(a.counts != b.counts);

  const auto g = cycle_graph(5);
  std::vector<int> perm = {3, 0, 4, 1, 2};
  CHECK(hom_profile(g.relabeled(perm), 4).counts == hom_profile(g, 4).counts);
  CHECK_THROWS_AS(hom_profile(g, 7), CapacityError);
}

TEST_CASE("budgets") {
  const PaleyHost p13(find_irreducible(13, 1));
  CHECK_THROWS_AS(count_hom(cycle_graph(6), p13, Budget{5}), BudgetExceeded);
  CHECK(count_hom(cycle_graph(6), p13, Budget{100000000}) == count_hom(cycle_graph(6), p13));
}
