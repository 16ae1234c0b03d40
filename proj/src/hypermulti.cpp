#include "hchroma/hypermulti.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "hchroma/error.hpp"

namespace hchroma {

namespace {

HyperEdge relabel_edge(HyperEdge e, const std::vector<int>& labeling) {
  HyperEdge out = 0;
  while (e) {
    out |= HyperEdge{1} << labeling[std::countr_zero(e)];
    e &= e - 1;
  }
  return out;
}

std::vector<HyperEdge> relabel_sorted(const std::vector<HyperEdge>& edges, const std::vector<int>& labeling) {
  std::vector<HyperEdge> out;
  out.reserve(edges.size());
  for (HyperEdge e : edges) out.push_back(relabel_edge(e, labeling));
  std::sort(out.begin(), out.end());
  return out;
}

std::string make_code(int k, int m, const std::vector<HyperEdge>& sorted_edges) {
  std::string code;
  code.reserve(2 + 4 * sorted_edges.size());
  code.push_back(static_cast<char>(k));
  code.push_back(static_cast<char>(m));
  for (HyperEdge e : sorted_edges) {
    for (int shift = 24; shift >= 0; shift -= 8) code.push_back(static_cast<char>((e >> shift) & 0xFF));
  }
  return code;
}

// Groups of edge indices forming intersection-connected components, ordered
// by smallest edge index.
std::vector<std::vector<std::size_t>> edge_components(std::span<const HyperEdge> edges) {
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i] & edges[j]) parent[find(j)] = find(i);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

// Individualisation-refinement over the vertices of a connected
// hyper-multigraph on vertices 0..m-1. Returns the lexicographically least
// sorted relabelled edge list and the number of labelings attaining it,
// which is the automorphism group order.
class ConnectedCanon {
 public:
  ConnectedCanon(int m, std::vector<HyperEdge> edges) : m_(m), edges_(std::move(edges)) {
    incident_.resize(m);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      HyperEdge bits = edges_[e];
      while (bits) {
        incident_[std::countr_zero(bits)].push_back(e);
        bits &= bits - 1;
      }
    }
    sorted_ = edges_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  void run() {
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < m_; ++v) cells[0].push_back(v);
    search(std::move(cells), 1);
  }

  std::vector<HyperEdge> best;
  std::vector<int> best_labeling;
  BigInt count = 0;

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    std::vector<int> cell_of(m_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      std::vector<std::vector<int>> next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<std::vector<std::vector<int>>, std::vector<int>> by_sig;
        for (int v : cell) {
          std::vector<std::vector<int>> sig;
          for (std::size_t e : incident_[v]) {
            std::vector<int> es;
            HyperEdge bits = edges_[e];
            while (bits) {
              es.push_back(cell_of[std::countr_zero(bits)]);
              bits &= bits - 1;
            }
            std::sort(es.begin(), es.end());
            sig.push_back(std::move(es));
          }
          std::sort(sig.begin(), sig.end());
          by_sig[std::move(sig)].push_back(v);
        }
        for (auto& [sig, part] : by_sig) next.push_back(std::move(part));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  bool transposition_is_automorphism(int v, int w) const {
    std::vector<int> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[v], perm[w]);
    return relabel_sorted(edges_, perm) == sorted_;
  }

  void search(std::vector<std::vector<int>> cells, const BigInt& weight) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;

    if (target == cells.size()) {
      std::vector<int> labeling(m_);
      for (std::size_t i = 0; i < cells.size(); ++i) labeling[cells[i][0]] = static_cast<int>(i);
      auto relabeled = relabel_sorted(edges_, labeling);
      if (best.empty() || relabeled < best) {
        best = std::move(relabeled);
        best_labeling = std::move(labeling);
        count = weight;
      } else if (relabeled == best) {
        count += weight;
      }
      return;
    }

    const auto cell = cells[target];
    std::vector<bool> done(cell.size(), false);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (done[i]) continue;
      std::size_t twins = 1;
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        if (!done[j] && transposition_is_automorphism(cell[i], cell[j])) {
          done[j] = true;
          ++twins;
        }
      }
      std::vector<std::vector<int>> child;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({cell[i]});
        std::vector<int> rest;
        for (int w : cell)
          if (w != cell[i]) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child), weight * twins);
    }
  }

  int m_;
  std::vector<HyperEdge> edges_;
  std::vector<HyperEdge> sorted_;
  std::vector<std::vector<std::size_t>> incident_;
};

struct ComponentForm {
  std::string code;
  int m;
  std::vector<HyperEdge> edges;  // canonical, sorted, on 0..m-1
  BigInt aut;
};

ComponentForm canonical_component(int k, std::span<const HyperEdge> edges) {
  // Compact the vertex set to 0..m-1.
  HyperEdge all = 0;
  for (HyperEdge e : edges) all |= e;
  std::vector<int> compact(kMaxHyperVertices, -1);
  int m = 0;
  for (HyperEdge bits = all; bits; bits &= bits - 1) compact[std::countr_zero(bits)] = m++;
  std::vector<HyperEdge> local;
  for (HyperEdge e : edges) local.push_back(relabel_edge(e, compact));

  ConnectedCanon canon(m, local);
  canon.run();
  return {make_code(k, m, canon.best), m, std::move(canon.best), std::move(canon.count)};
}

}  // namespace

bool HyperMultigraph::is_connected() const { return edge_components(edges_).size() <= 1; }

std::vector<std::vector<int>> HyperMultigraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  for (HyperEdge e : edges_) {
    std::vector<int> verts;
    for (; e; e &= e - 1) verts.push_back(std::countr_zero(e));
    out.push_back(std::move(verts));
  }
  return out;
}

HyperMultigraph canonicalize_edges(int k, std::span<const HyperEdge> edges) {
  if (k < 1 || k > kMaxHyperVertices) throw ParameterError("uniformity must be in 1..32");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (std::popcount(edges[i]) != k) {
      throw UniformityError("hyperedge " + std::to_string(i) + " has " +
                            std::to_string(std::popcount(edges[i])) + " elements, expected " +
                            std::to_string(k));
    }
  }

  std::vector<ComponentForm> comps;
  for (const auto& group : edge_components(edges)) {
    std::vector<HyperEdge> sub;
    for (std::size_t i : group) sub.push_back(edges[i]);
    comps.push_back(canonical_component(k, sub));
  }
  std::sort(comps.begin(), comps.end(),
            [](const ComponentForm& a, const ComponentForm& b) { return a.code < b.code; });

  HyperMultigraph out;
  out.k_ = k;
  out.aut_ = 1;
  int offset = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (HyperEdge e : comps[i].edges) out.edges_.push_back(e << offset);
    offset += comps[i].m;
    out.aut_ *= comps[i].aut;
    run = (i > 0 && comps[i - 1].code == comps[i].code) ? run + 1 : 1;
    out.aut_ *= run;
  }
  out.m_ = offset;
  std::sort(out.edges_.begin(), out.edges_.end());
  out.code_ = make_code(k, out.m_, out.edges_);
  return out;
}

HyperMultigraph canonicalize(int k, const std::vector<std::vector<int>>& edges) {
  std::vector<int> labels;
  for (const auto& e : edges) labels.insert(labels.end(), e.begin(), e.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > static_cast<std::size_t>(kMaxHyperVertices)) {
    throw CapacityError("hyper-multigraphs are limited to 32 vertices");
  }
  std::vector<HyperEdge> masks;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    HyperEdge mask = 0;
    for (int label : edges[i]) {
      const auto idx = std::lower_bound(labels.begin(), labels.end(), label) - labels.begin();
      mask |= HyperEdge{1} << idx;
    }
    if (static_cast<int>(edges[i].size()) != k || std::popcount(mask) != k) {
      throw UniformityError("hyperedge " + std::to_string(i) + " is not a " + std::to_string(k) +
                            "-subset");
    }
    masks.push_back(mask);
  }
  return canonicalize_edges(k, masks);
}

HyperMultigraph empty_class(int k) { return canonicalize_edges(k, {}); }

std::vector<HyperMultigraph> connected_components(const HyperMultigraph& h) {
  std::vector<HyperMultigraph> out;
  for (const auto& group : edge_components(h.edges())) {
    std::vector<HyperEdge> sub;
    for (std::size_t i : group) sub.push_back(h.edges()[i]);
    out.push_back(canonicalize_edges(h.k(), sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HyperMultigraph disjoint_union(const HyperMultigraph& a, const HyperMultigraph& b) {
  if (a.k() != b.k()) throw UniformityError("disjoint union of classes with different k");
  if (a.vertex_count() + b.vertex_count() > kMaxHyperVertices) {
    throw CapacityError("hyper-multigraphs are limited to 32 vertices");
  }
  std::vector<HyperEdge> edges = a.edges();
  for (HyperEdge e : b.edges()) edges.push_back(e << a.vertex_count());
  return canonicalize_edges(a.k(), edges);
}

namespace {

void check_feasible(int n, int k) {
  const bool ok = n >= 0 && ((k == 1 && n <= 20) || (k == 2 && n <= 7) || (k == 3 && n <= 4));
  if (!ok) {
    throw CapacityError("class enumeration supports k=1 n<=20, k=2 n<=7, k=3 n<=4; got n=" +
                        std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Every k-subset of {0..m-1} ∪ {m..m+k-1} that uses fresh points only as a
// prefix m, m+1, ... of the fresh range.
void new_edges(int m, int k, std::vector<HyperEdge>& out) {
  for (int fresh = 0; fresh <= k; ++fresh) {
    const int old = k - fresh;
    if (old > m) continue;
    HyperEdge fresh_bits = 0;
    for (int i = 0; i < fresh; ++i) fresh_bits |= HyperEdge{1} << (m + i);
    // Subsets of size `old` from {0..m-1}.
    std::vector<int> idx(old);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      HyperEdge e = fresh_bits;
      for (int i : idx) e |= HyperEdge{1} << i;
      out.push_back(e);
      int pos = old - 1;
      while (pos >= 0 && idx[pos] == m - old + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < old; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

}  // namespace

std::vector<HyperMultigraph> enumerate_classes(int n, int k, bool connected_only) {
  check_feasible(n, k);
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<HyperMultigraph>>> cache;
  std::vector<HyperMultigraph> level;
  {
    std::lock_guard lock(mu);
    auto& levels = cache[k];
    if (levels.empty()) levels.push_back({empty_class(k)});
    while (static_cast<int>(levels.size()) <= n) {
      std::map<std::string, HyperMultigraph> seen;
      for (const auto& cls : levels.back()) {
        std::vector<HyperEdge> extra;
        new_edges(cls.vertex_count(), k, extra);
        std::vector<HyperEdge> edges = cls.edges();
        edges.push_back(0);
        for (HyperEdge e : extra) {
          edges.back() = e;
          auto c = canonicalize_edges(k, edges);
          seen.try_emplace(c.code(), std::move(c));
        }
      }
      std::vector<HyperMultigraph> next;
      for (auto& [code, c] : seen) next.push_back(std::move(c));
      levels.push_back(std::move(next));
    }
    level = levels[n];
  }
  if (connected_only) {
    std::erase_if(level, [](const HyperMultigraph& h) { return !h.is_connected(); });
  }
  return level;
}

BigInt count_image_maps(const SimpleGraph& g, const HyperMultigraph& h, bool intersecting) {
  const int n = g.order();
  if (static_cast<std::size_t>(n) != h.edge_count()) return 0;
  std::vector<HyperEdge> distinct;
  std::vector<int> remaining;
  for (HyperEdge e : h.edges()) {
    if (!distinct.empty() && distinct.back() == e) {
      ++remaining.back();
    } else {
      distinct.push_back(e);
      remaining.push_back(1);
    }
  }
  std::vector<HyperEdge> image(n, 0);
  BigInt total = 0;
  std::uint64_t leaves = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++leaves;
      return;
    }
    for (std::size_t d = 0; d < distinct.size(); ++d) {
      if (remaining[d] == 0) continue;
      const HyperEdge e = distinct[d];
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (g.adjacent(u, v)) ok = ((image[u] & e) != 0) == intersecting;
      }
      if (!ok) continue;
      image[v] = e;
      --remaining[d];
      self(self, v + 1);
      ++remaining[d];
    }
  };
  rec(rec, 0);
  total = leaves;
  return total;
}

bool is_admissible(const SimpleGraph& g, const HyperMultigraph& h) {
  return count_image_maps(g, h, true) > 0;
}

std::vector<AdmissibleClass> admissible_set(const SimpleGraph& g, int k) {
  const int n = g.order();
  if (!g.is_connected()) {
    throw DomainError(
        "admissible_set needs a connected graph; for disconnected graphs take the product of the "
        "admissible sets of the components");
  }
  if (n > 6 || k < 1 || k > 3) throw CapacityError("admissible_set supports |V| <= 6 and k <= 3");
  if (n == 0) return {{empty_class(k), 1}};

  // Visit vertices in BFS order so each vertex after the first already has a
  // placed neighbour; this prunes the assignment tree early.
  std::vector<int> order{0};
  std::uint64_t seen = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t nb = g.row(order[i]) & ~seen;
    seen |= nb;
    for (; nb; nb &= nb - 1) order.push_back(std::countr_zero(nb));
  }

  std::map<std::string, HyperMultigraph> classes;
  std::vector<HyperEdge> assigned(n, 0);
  auto rec = [&](auto&& self, int depth, int next_fresh) -> void {
    if (depth == n) {
      auto c = canonicalize_edges(k, assigned);
      classes.try_emplace(c.code(), std::move(c));
      return;
    }
    const int v = order[depth];
    std::vector<HyperEdge> options;
    new_edges(next_fresh, k, options);
    for (HyperEdge e : options) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        const int u = order[j];
        if (g.adjacent(u, v)) ok = (assigned[u] & e) != 0;
      }
      if (!ok) continue;
      assigned[v] = e;
      const int top = 32 - std::countl_zero(e);
      self(self, depth + 1, std::max(next_fresh, top));
    }
    assigned[v] = 0;
  };
  rec(rec, 0, 0);

  std::vector<AdmissibleClass> out;
  for (auto& [code, cls] : classes) {
    BigInt maps = count_image_maps(g, cls, true);
    out.push_back({std::move(cls), std::move(maps)});
  }
  return out;
}

}  // namespace hchroma
