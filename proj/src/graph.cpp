#include "hchroma/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "hchroma/error.hpp"

namespace hchroma {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw ParameterError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(n));
  }
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw CapacityError("pattern graphs are limited to 64 vertices, got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto r : adj_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] & ~((std::uint64_t{2} << u) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw ParameterError("loops are not allowed in simple graphs");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  SimpleGraph out(n_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t r = adj_[u];
    std::uint64_t nr = 0;
    while (r) {
      int v = std::countr_zero(r);
      r &= r - 1;
      nr |= std::uint64_t{1} << perm[v];
    }
    out.adj_[perm[u]] = nr;
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  SimpleGraph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(n_);
  const std::uint64_t all = vertex_mask();
  for (int u = 0; u < n_; ++u) out.adj_[u] = ~adj_[u] & all & ~(std::uint64_t{1} << u);
  return out;
}

bool SimpleGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertex_mask();
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw ParameterError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

SimpleGraph complete_graph(int n) { return empty_graph(n).complement(); }

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycles need at least 3 vertices");
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph stanley_g1() {
  return SimpleGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

SimpleGraph stanley_g2() {
  return SimpleGraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}});
}

std::vector<std::vector<int>> component_vertex_sets(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t remaining = g.vertex_mask();
  while (remaining) {
    std::uint64_t comp = std::uint64_t{1} << std::countr_zero(remaining);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.row(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    remaining &= ~comp;
    std::vector<int> verts;
    while (comp) {
      verts.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    out.push_back(std::move(verts));
  }
  return out;
}

std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  for (const auto& verts : component_vertex_sets(g)) out.push_back(g.induced(verts));
  return out;
}

void for_each_spanning_subgraph(const SimpleGraph& g,
                                const std::function<void(const SpanningSubgraph&)>& visit) {
  const auto edges = g.edges();
  if (edges.size() > kMaxSpanningEdges) {
    throw CapacityError("spanning subgraph iteration needs |E| <= 30, got " +
                        std::to_string(edges.size()));
  }
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SpanningSubgraph s{mask, SimpleGraph(g.order())};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1U) s.graph.add_edge(edges[i].first, edges[i].second);
    }
    visit(s);
  }
}

std::vector<SpanningSubgraph> spanning_subgraphs(const SimpleGraph& g) {
  std::vector<SpanningSubgraph> out;
  for_each_spanning_subgraph(g, [&](const SpanningSubgraph& s) { out.push_back(s); });
  return out;
}

namespace {

// Orderly extension: every class on n vertices is a one-vertex extension of
// some class on n-1 vertices, so extending all representatives by every
// neighbour set and keeping canonical representatives is exhaustive.
std::vector<SimpleGraph> extend_all(const std::vector<SimpleGraph>& smaller, bool trees) {
  std::map<std::string, SimpleGraph> seen;
  for (const auto& h : smaller) {
    const int n = h.order();
    if (trees) {
      for (int v = 0; v < std::max(n, 1); ++v) {
        SimpleGraph g(n + 1);
        for (auto [a, b] : h.edges()) g.add_edge(a, b);
        if (n > 0) g.add_edge(v, n);
        auto c = canonical_form(g);
        seen.try_emplace(c.code, canonical_graph(g));
      }
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      SimpleGraph g(n + 1);
      for (auto [a, b] : h.edges()) g.add_edge(a, b);
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1U) g.add_edge(v, n);
      auto c = canonical_form(g);
      seen.try_emplace(c.code, canonical_graph(g));
    }
  }
  std::vector<SimpleGraph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<SimpleGraph>& enumerate_graphs(int n) {
  constexpr int kMax = 8;
  if (n < 0 || n > kMax) {
    throw CapacityError("enumerate_graphs supports 0 <= n <= 8, got " + std::to_string(n));
  }
  static std::mutex mu;
  static std::vector<std::vector<SimpleGraph>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) levels.push_back({SimpleGraph(0)});
  while (static_cast<int>(levels.size()) <= n) {
    levels.push_back(extend_all(levels.back(), false));
  }
  return levels[n];
}

const std::vector<SimpleGraph>& enumerate_trees(int n) {
  constexpr int kMax = 12;
  if (n < 1 || n > kMax) {
    throw CapacityError("enumerate_trees supports 1 <= n <= 12, got " + std::to_string(n));
  }
  static std::mutex mu;
  static std::vector<std::vector<SimpleGraph>> levels;
  std::lock_guard lock(mu);
  if (levels.empty()) {
    levels.push_back({});
    levels.push_back({SimpleGraph(1)});
  }
  while (static_cast<int>(levels.size()) <= n) {
    levels.push_back(extend_all(levels.back(), true));
  }
  return levels[n];
}

}  // namespace hchroma
