#include "hchroma/host.hpp"

#include <bit>

#include "hchroma/error.hpp"

namespace hchroma {

std::vector<Vertex> HostGraph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  const std::uint64_t n = order();
  for (Vertex v = 0; v < n; ++v)
    if (v != u && adjacent(u, v)) out.push_back(v);
  return out;
}

std::uint64_t HostGraph::degree(Vertex u) const { return neighbors(u).size(); }

std::vector<Vertex> CompleteHost::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  out.reserve(n_);
  for (Vertex v = 0; v < n_; ++v)
    if (v != u) out.push_back(v);
  return out;
}

namespace {

void subsets_rec(int ground, int k, int start, std::uint32_t cur, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= ground - k; ++i) subsets_rec(ground, k - 1, i + 1, cur | (1U << i), out);
}

}  // namespace

KneserHost::KneserHost(int ground, int k) : ground_(ground), k_(k) {
  if (ground < 0 || ground > 24 || k < 0 || k > ground) {
    throw ParameterError("kneser slice needs 0 <= k <= n <= 24");
  }
  subsets_rec(ground, k, 0, 0, subsets_);
  if (subsets_.size() > 20000) throw CapacityError("kneser slice too large to materialise");
  neighbors_.resize(subsets_.size());
  for (Vertex u = 0; u < subsets_.size(); ++u)
    for (Vertex v = 0; v < subsets_.size(); ++v)
      if ((subsets_[u] & subsets_[v]) == 0 && u != v) neighbors_[u].push_back(v);
}

std::vector<Vertex> KneserHost::neighbors(Vertex u) const { return neighbors_[u]; }

std::vector<int> KneserHost::subset_elements(Vertex u) const {
  std::vector<int> out;
  std::uint32_t s = subsets_[u];
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

nlohmann::json KneserHost::vertex_json(Vertex u) const { return subset_elements(u); }

std::string KneserHost::describe() const {
  return "kneser:" + std::to_string(ground_) + ":" + std::to_string(k_);
}

DenseHost::DenseHost(std::uint64_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

DenseHost::DenseHost(const SimpleGraph& g) : DenseHost(static_cast<std::uint64_t>(g.order())) {
  for (auto [u, v] : g.edges()) add_edge(u, v);
}

void DenseHost::add_edge(Vertex u, Vertex v) {
  if (u == v || u >= n_ || v >= n_) throw ParameterError("invalid host edge");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::vector<Vertex> DenseHost::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  for (std::uint64_t w = 0; w < words_; ++w) {
    std::uint64_t bits = bits_[u * words_ + w];
    while (bits) {
      out.push_back(w * 64 + static_cast<Vertex>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::shared_ptr<DenseHost> complement(const HostGraph& h) {
  const std::uint64_t n = h.order();
  if (n > kMaxComplementOrder) {
    throw CapacityError("complement is materialised only for hosts up to 65536 vertices");
  }
  auto out = std::make_shared<DenseHost>(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!h.adjacent(u, v)) out->add_edge(u, v);
  return out;
}

SimpleGraph induced_pattern(const HostGraph& h, const std::vector<Vertex>& vertices) {
  const int m = static_cast<int>(vertices.size());
  SimpleGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (h.adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

}  // namespace hchroma
