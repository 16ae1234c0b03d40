#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hchroma/graph.hpp"

namespace hchroma {

using Vertex = std::uint64_t;

/// Host graph behind an adjacency oracle. Vertices are 0..order()-1;
/// adjacency is symmetric and irreflexive.
class HostGraph {
 public:
  virtual ~HostGraph() = default;

  virtual std::uint64_t order() const = 0;
  virtual bool adjacent(Vertex u, Vertex v) const = 0;
  /// Sorted neighbour list. The default scans every vertex.
  virtual std::vector<Vertex> neighbors(Vertex u) const;
  virtual std::uint64_t degree(Vertex u) const;
  /// External name of a vertex: an integer, a k-subset, or field coefficients.
  virtual nlohmann::json vertex_json(Vertex u) const { return u; }
  virtual std::string describe() const = 0;
};

using HostPtr = std::shared_ptr<const HostGraph>;

class CompleteHost final : public HostGraph {
 public:
  explicit CompleteHost(std::uint64_t n) : n_(n) {}
  std::uint64_t order() const override { return n_; }
  bool adjacent(Vertex u, Vertex v) const override { return u != v; }
  std::vector<Vertex> neighbors(Vertex u) const override;
  std::uint64_t degree(Vertex) const override { return n_ == 0 ? 0 : n_ - 1; }
  std::string describe() const override { return "complete:" + std::to_string(n_); }

 private:
  std::uint64_t n_;
};

/// Kneser slice K(n, k): k-subsets of {0..n-1}, adjacent when disjoint.
/// Vertices are numbered in lexicographic order of the sorted subsets.
class KneserHost final : public HostGraph {
 public:
  KneserHost(int ground, int k);
  std::uint64_t order() const override { return subsets_.size(); }
  bool adjacent(Vertex u, Vertex v) const override { return (subsets_[u] & subsets_[v]) == 0; }
  std::vector<Vertex> neighbors(Vertex u) const override;
  nlohmann::json vertex_json(Vertex u) const override;
  std::string describe() const override;

  int ground() const noexcept { return ground_; }
  int k() const noexcept { return k_; }
  std::uint32_t subset(Vertex u) const { return subsets_[u]; }
  /// Elements of the subset, 1-based to match the usual {1..n} notation.
  std::vector<int> subset_elements(Vertex u) const;

 private:
  int ground_, k_;
  std::vector<std::uint32_t> subsets_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// Explicit host stored as a dense adjacency bit matrix; any order.
class DenseHost final : public HostGraph {
 public:
  explicit DenseHost(std::uint64_t n);
  explicit DenseHost(const SimpleGraph& g);
  std::uint64_t order() const override { return n_; }
  bool adjacent(Vertex u, Vertex v) const override {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::vector<Vertex> neighbors(Vertex u) const override;
  std::string describe() const override { return "explicit:" + std::to_string(n_); }
  void add_edge(Vertex u, Vertex v);

 private:
  std::uint64_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

inline constexpr std::uint64_t kMaxComplementOrder = std::uint64_t{1} << 16;

/// Materialised complement; refuses hosts above 2^16 vertices.
std::shared_ptr<DenseHost> complement(const HostGraph& h);

/// Subgraph of `h` induced on `vertices` as a SimpleGraph (<= 64 vertices).
SimpleGraph induced_pattern(const HostGraph& h, const std::vector<Vertex>& vertices);

}  // namespace hchroma
