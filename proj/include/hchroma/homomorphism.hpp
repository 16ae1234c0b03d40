#pragma once

#include <map>
#include <vector>

#include "hchroma/bigint.hpp"
#include "hchroma/embedding.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/host.hpp"

namespace hchroma {

/// Sparse polynomial in host-vertex variables: sorted image multiset of a
/// map V(G) -> V(H) to its coefficient.
struct MonomialPoly {
  int graph_order = 0;
  std::map<std::vector<Vertex>, BigInt> terms;

  /// Sum of all coefficients.
  BigInt mass() const;
  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;
};

/// |Hom(G, H)|. Throws BudgetExceeded after `budget.nodes` search nodes; a
/// returned count is always exact.
BigInt count_hom(const SimpleGraph& g, const HostGraph& h, Budget budget = Budget::unlimited());
/// Maps sending every edge to an edge or collapsing it to one vertex.
BigInt count_weak_hom(const SimpleGraph& g, const HostGraph& h, Budget budget = Budget::unlimited());

MonomialPoly x_h(const SimpleGraph& g, const HostGraph& h, Budget budget = Budget::unlimited());
MonomialPoly w_h(const SimpleGraph& g, const HostGraph& h, Budget budget = Budget::unlimited());

/// Coefficients of chi(G, n), constant term first. |V(G)| <= 12.
std::vector<BigInt> chromatic_polynomial(const SimpleGraph& g);
BigInt evaluate(const std::vector<BigInt>& poly, const BigInt& x);

struct HomProfile {
  std::vector<SimpleGraph> hosts;  // every class on 1..maxHostOrder vertices
  std::vector<BigInt> counts;      // counts[i] = |Hom(G, hosts[i])|
};

/// Hosts ordered by order, then canonical code. maxHostOrder <= 6.
HomProfile hom_profile(const SimpleGraph& g, int max_host_order);

}  // namespace hchroma
