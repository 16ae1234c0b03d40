#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hchroma/bigint.hpp"
#include "hchroma/graph.hpp"

namespace hchroma {

/// Hyperedge over at most 32 vertices, stored as a vertex bitmask.
using HyperEdge = std::uint32_t;

inline constexpr int kMaxHyperVertices = 32;

/// k-uniform hyper-multigraph without isolated vertices, held in canonical
/// position: vertices are 0..m-1 and `edges()` is the sorted hyperedge
/// multiset of the canonical relabelling. Two values compare equal exactly
/// when the underlying hyper-multigraphs are isomorphic.
class HyperMultigraph {
 public:
  HyperMultigraph() = default;

  int k() const noexcept { return k_; }
  int vertex_count() const noexcept { return m_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<HyperEdge>& edges() const noexcept { return edges_; }
  /// Byte string identifying the isomorphism class (the ClassKey).
  const std::string& code() const noexcept { return code_; }
  const BigInt& aut_order() const noexcept { return aut_; }
  bool is_connected() const;
  /// Hyperedges as sorted vertex lists, in edge order.
  std::vector<std::vector<int>> edge_lists() const;

  friend bool operator==(const HyperMultigraph& a, const HyperMultigraph& b) {
    return a.code_ == b.code_;
  }
  friend auto operator<=>(const HyperMultigraph& a, const HyperMultigraph& b) {
    return a.code_ <=> b.code_;
  }

 private:
  friend HyperMultigraph canonicalize_edges(int k, std::span<const HyperEdge> edges);
  int k_ = 0;
  int m_ = 0;
  std::vector<HyperEdge> edges_;
  std::string code_;
  BigInt aut_ = 1;
};

/// Canonical form of an arbitrary multiset of k-subsets given as vertex lists
/// over arbitrary labels. Throws UniformityError if a subset does not have
/// exactly k distinct elements.
HyperMultigraph canonicalize(int k, const std::vector<std::vector<int>>& edges);
/// Same, for hyperedges given as bitmasks over vertices 0..31. Vertices that
/// appear in no hyperedge are dropped.
HyperMultigraph canonicalize_edges(int k, std::span<const HyperEdge> edges);

/// Unit of Sym^(k): the class with no hyperedges.
HyperMultigraph empty_class(int k);

/// Components in the intersection sense, sorted by code.
std::vector<HyperMultigraph> connected_components(const HyperMultigraph& h);
/// Vertex-disjoint union of two classes.
HyperMultigraph disjoint_union(const HyperMultigraph& a, const HyperMultigraph& b);

/// Number of vertex permutations preserving the hyperedge multiset.
inline const BigInt& aut_order(const HyperMultigraph& h) { return h.aut_order(); }

/// All classes with exactly n hyperedges, in code order. Feasible sizes:
/// k=1 with n <= 20, k=2 with n <= 7, k=3 with n <= 4.
std::vector<HyperMultigraph> enumerate_classes(int n, int k, bool connected_only = false);

/// An admissible class together with the number of admissible maps
/// phi: V(G) -> E_lambda onto its hyperedge multiset (each hyperedge hit
/// exactly its multiplicity, adjacent vertices sent to intersecting
/// hyperedges).
struct AdmissibleClass {
  HyperMultigraph cls;
  BigInt maps;
};

/// Admissible classes of a connected graph with <= 6 vertices, k <= 3,
/// in code order. Disconnected input throws DomainError (use the product
/// over components).
std::vector<AdmissibleClass> admissible_set(const SimpleGraph& g, int k);

/// Number of maps V(G) -> E_lambda hitting every hyperedge of `h` exactly its
/// multiplicity such that each edge {u,v} of G satisfies the relation:
/// intersecting hyperedges when `intersecting`, disjoint ones otherwise.
BigInt count_image_maps(const SimpleGraph& g, const HyperMultigraph& h, bool intersecting);

/// Whether some bijection V(G) -> E_lambda sends adjacent vertices to
/// intersecting hyperedges. Works for disconnected G as well.
bool is_admissible(const SimpleGraph& g, const HyperMultigraph& h);

}  // namespace hchroma
