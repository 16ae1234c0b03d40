#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hchroma/bigint.hpp"

namespace hchroma {

using Edge = std::pair<int, int>;

/// Finite simple graph on at most 64 vertices. Each adjacency row is one
/// machine word, so neighbourhood intersections and counts are bit operations.
class SimpleGraph {
 public:
  static constexpr int kMaxOrder = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::uint64_t row(int v) const noexcept { return adj_[v]; }
  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  std::size_t edge_count() const noexcept;
  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::uint64_t vertex_mask() const noexcept {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// perm[v] is the new label of vertex v.
  SimpleGraph relabeled(std::span<const int> perm) const;
  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  SimpleGraph induced(std::span<const int> vertices) const;
  SimpleGraph complement() const;
  bool is_connected() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;
};

// Disjoint union; vertices of `b` are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

SimpleGraph complete_graph(int n);
SimpleGraph empty_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int leaves);
SimpleGraph complete_bipartite(int a, int b);
/// The two non-isomorphic 5-vertex graphs with equal chromatic symmetric
/// function (Stanley's pair), 0-indexed.
SimpleGraph stanley_g1();
SimpleGraph stanley_g2();

// ---------------------------------------------------------------- graph6

SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

// ----------------------------------------------------------- canonical form

struct CanonicalCode {
  std::string code;  // graph6 text of the canonically relabelled graph
  BigInt aut_order;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.code == b.code;
  }
};

struct CanonicalLabeling {
  std::vector<int> labeling;  // labeling[v] = canonical position of v
  BigInt aut_order;
};

CanonicalLabeling canonical_labeling(const SimpleGraph& g);
CanonicalCode canonical_form(const SimpleGraph& g);
/// Graph relabelled into canonical position.
SimpleGraph canonical_graph(const SimpleGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// ---------------------------------------------------------------- structure

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> component_vertex_sets(const SimpleGraph& g);
std::vector<SimpleGraph> connected_components(const SimpleGraph& g);

struct SpanningSubgraph {
  std::uint64_t edge_subset;  // bit i selects g.edges()[i]
  SimpleGraph graph;
};

inline constexpr std::size_t kMaxSpanningEdges = 30;

/// Calls `visit` once for each of the 2^|E| edge subsets, in increasing
/// subset-mask order. Throws CapacityError when |E| > 30.
void for_each_spanning_subgraph(const SimpleGraph& g,
                                const std::function<void(const SpanningSubgraph&)>& visit);
std::vector<SpanningSubgraph> spanning_subgraphs(const SimpleGraph& g);

/// One representative per isomorphism class on exactly n vertices (n <= 8),
/// in canonical-code order. Representatives are in canonical position.
const std::vector<SimpleGraph>& enumerate_graphs(int n);
/// Unlabelled trees on n vertices (1 <= n <= 12), canonical-code order.
const std::vector<SimpleGraph>& enumerate_trees(int n);

}  // namespace hchroma
