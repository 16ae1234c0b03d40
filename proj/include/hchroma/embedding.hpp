#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hchroma/graph.hpp"
#include "hchroma/host.hpp"

namespace hchroma {

enum class EmbedMode { induced, subgraph };

const char* to_string(EmbedMode mode);

/// Injective map from pattern vertices to host vertices.
struct Embedding {
  EmbedMode mode = EmbedMode::induced;
  SimpleGraph pattern;
  std::vector<Vertex> map;  // map[v] = host vertex of pattern vertex v
};

/// Node-expansion limit for exhaustive searches.
struct Budget {
  std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();
  static Budget unlimited() { return {}; }
};

enum class SearchStatus { found, not_found, budget_exceeded };

struct EmbeddingResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Backtracking search for an embedding of `pattern` into `host`.
/// Deterministic: pattern vertices are placed most-constrained first and host
/// candidates are tried in increasing vertex order, so the first embedding
/// found is the same on every run. not_found is returned only after the
/// search space is exhausted.
EmbeddingResult find_embedding(const SimpleGraph& pattern, const HostGraph& host, EmbedMode mode,
                               Budget budget = Budget::unlimited());

/// Checks the embedding invariants against the host: injectivity, edges to
/// edges, and in induced mode non-edges to non-edges.
bool verify_embedding(const Embedding& e, const HostGraph& host);

}  // namespace hchroma
