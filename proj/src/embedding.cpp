#include "hchroma/embedding.hpp"

#include <algorithm>
#include <unordered_set>

namespace hchroma {

const char* to_string(EmbedMode mode) { return mode == EmbedMode::induced ? "induced" : "subgraph"; }

namespace {

// Placement order: highest degree first, then repeatedly the unplaced vertex
// with the most placed neighbours (ties: higher degree, lower index).
std::vector<int> placement_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> order;
  std::uint64_t placed = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(g.row(v) & placed);
      const int deg = g.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }
  return order;
}

class Searcher {
 public:
  Searcher(const SimpleGraph& p, const HostGraph& h, EmbedMode mode, Budget budget)
      : p_(p), h_(h), mode_(mode), budget_(budget), order_(placement_order(p)), map_(p.order(), 0) {}

  SearchStatus run() {
    if (budget_.nodes == 0) return SearchStatus::budget_exceeded;
    if (static_cast<std::uint64_t>(p_.order()) > h_.order()) return SearchStatus::not_found;
    return extend(0);
  }

  const std::vector<Vertex>& map() const { return map_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchStatus extend(std::size_t depth) {
    if (depth == order_.size()) return SearchStatus::found;
    const int v = order_[depth];

    // Anchor on an already placed neighbour when there is one.
    int anchor = -1;
    for (std::size_t i = 0; i < depth; ++i) {
      if (p_.adjacent(v, order_[i])) {
        anchor = order_[i];
        break;
      }
    }
    std::vector<Vertex> candidates;
    const bool scan_all = anchor < 0;
    if (!scan_all) candidates = h_.neighbors(map_[anchor]);
    const std::uint64_t total = scan_all ? h_.order() : candidates.size();

    for (std::uint64_t i = 0; i < total; ++i) {
      const Vertex c = scan_all ? i : candidates[i];
      if (used_.contains(c)) continue;
      if (++nodes_ > budget_.nodes) return SearchStatus::budget_exceeded;
      if (mode_ == EmbedMode::subgraph && h_.degree(c) < static_cast<std::uint64_t>(p_.degree(v))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int w = order_[j];
        const bool want = p_.adjacent(v, w);
        if (want || mode_ == EmbedMode::induced) ok = h_.adjacent(c, map_[w]) == want;
      }
      if (!ok) continue;
      map_[v] = c;
      used_.insert(c);
      const SearchStatus s = extend(depth + 1);
      if (s != SearchStatus::not_found) return s;
      used_.erase(c);
    }
    return SearchStatus::not_found;
  }

  const SimpleGraph& p_;
  const HostGraph& h_;
  EmbedMode mode_;
  Budget budget_;
  std::vector<int> order_;
  std::vector<Vertex> map_;
  std::unordered_set<Vertex> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EmbeddingResult find_embedding(const SimpleGraph& pattern, const HostGraph& host, EmbedMode mode,
                               Budget budget) {
  Searcher s(pattern, host, mode, budget);
  EmbeddingResult out;
  out.status = s.run();
  out.nodes = s.nodes();
  if (out.status == SearchStatus::found) out.embedding = Embedding{mode, pattern, s.map()};
  return out;
}

bool verify_embedding(const Embedding& e, const HostGraph& host) {
  const int n = e.pattern.order();
  if (static_cast<int>(e.map.size()) != n) return false;
  for (int u = 0; u < n; ++u) {
    if (e.map[u] >= host.order()) return false;
    for (int v = u + 1; v < n; ++v) {
      if (e.map[u] == e.map[v]) return false;
      const bool edge = e.pattern.adjacent(u, v);
      const bool image = host.adjacent(e.map[u], e.map[v]);
      if (edge && !image) return false;
      if (!edge && image && e.mode == EmbedMode::induced) return false;
    }
  }
  return true;
}

}  // namespace hchroma
