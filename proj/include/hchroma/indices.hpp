#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hchroma/bigint.hpp"
#include "hchroma/embedding.hpp"
#include "hchroma/galois.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/host.hpp"

namespace hchroma {

/// Largest host order searched explicitly; bigger levels are skipped and
/// flagged as unsearchable.
inline constexpr std::uint64_t kMaxSearchOrder = 1'000'000;
/// Closed-form subgraph index values are cross-checked by search up to here.
inline constexpr std::uint64_t kMaxCrossCheckOrder = 10'000;

/// A universal host series H_0, H_1, ... (Paley) or H_1, H_2, ... (Kneser).
///  paley:  level n is P((q^2)^{3^n}) with q = p^{3^m}; level 0 is P(q^2).
///  kneser: level n is the slice K(n |V(G)|, n), which contains every graph
///          on |V(G)| vertices that the infinite Kneser graph K_{N,n} does.
struct SeriesSpec {
  enum class Kind { paley, kneser };
  Kind kind = Kind::paley;
  std::uint32_t p = 5;
  int m = 0;

  static SeriesSpec paley(std::uint32_t p, int m = 0) { return {Kind::paley, p, m}; }
  static SeriesSpec kneser() { return {Kind::kneser, 0, 0}; }

  std::uint64_t first_level() const { return kind == Kind::paley ? 0 : 1; }
  /// q = p^{3^m}; Paley only.
  BigInt base_q() const;
  /// Extension degree over GF(p) of level n: 2 * 3^{m+n}.
  BigInt paley_degree(std::uint64_t level) const;
  BigInt host_order(std::uint64_t level, int pattern_order) const;
  /// Materialised host; throws CapacityError when unsearchable.
  HostPtr host(std::uint64_t level, int pattern_order) const;
  std::string describe() const;
};

/// What happened at one level of an index search.
struct LevelOutcome {
  std::uint64_t level = 0;
  BigInt host_order;
  std::string status;  // found | refuted | budget_exceeded | unsearchable | closed_form
};

struct IndexResult {
  std::string operation;
  std::optional<std::uint64_t> value;  // empty: exceeds cap
  bool exact = false;
  std::optional<Embedding> witness;
  HostPtr witness_host;
  std::vector<std::string> flags;
  std::vector<std::uint64_t> refuted_levels;
  std::vector<LevelOutcome> levels;

  bool has_flag(const std::string& f) const;
};

/// min{n : G is an induced subgraph of H_n}, over levels up to `cap`.
IndexResult induced_index(const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap,
                          Budget budget = Budget::unlimited());
/// min{n : G is a subgraph of H_n}. Cycles and paths on a Paley series use
/// the exact level "smallest n with (q^2)^{3^n} >= k" (pancyclicity), with
/// an explicit witness whenever that host has at most 10^4 vertices.
IndexResult subgraph_index(const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap,
                           Budget budget = Budget::unlimited());

enum class InvariantKind { x_h, hom_count };

struct FunctionalIndexResult {
  std::optional<std::uint64_t> value;  // empty: series exhausted
  std::vector<std::pair<std::size_t, std::size_t>> colliding;
  std::optional<std::pair<std::size_t, std::size_t>> last_resolved;
  /// separated_at[i] = series prefix length that first separates pair i
  /// (pairs in (a, b), a < b order), 0 when never separated.
  std::vector<std::uint64_t> separated_at;
};

/// Shortest prefix of `hosts` whose invariants separate every pair of the
/// (pairwise non-isomorphic) family. Singleton families give 1.
FunctionalIndexResult functional_index(const std::vector<SimpleGraph>& family, const std::vector<HostPtr>& hosts,
                                       InvariantKind kind);
/// Same, with level t of the Kneser series evaluated as the k = t chromatic
/// function in the monomial basis (exact for every ground size >= t|V|).
/// Levels up to `max_level` <= 3.
FunctionalIndexResult functional_index_kneser(const std::vector<SimpleGraph>& family, int max_level);

struct PancyclicityReport {
  std::map<std::uint64_t, std::vector<Vertex>> cycles;  // length -> cycle
  std::vector<std::uint64_t> missing;                   // refuted or unknown
  std::vector<std::uint64_t> refuted;                   // exhaustively absent
  std::vector<std::uint64_t> budget_exhausted;
  std::uint64_t nodes = 0;

  bool pancyclic() const { return missing.empty(); }
};

/// Cycles of every length 3..|V(H)| (|V(H)| <= 200), each verified edge by
/// edge. `budget` bounds the nodes spent per length.
PancyclicityReport pancyclicity_certificate(const HostGraph& h, Budget budget = Budget::unlimited());
/// One cycle of the given length, or nullopt if refuted; throws
/// BudgetExceeded when the budget runs out first.
std::optional<std::vector<Vertex>> find_cycle(const HostGraph& h, std::uint64_t length,
                                              Budget budget = Budget::unlimited());

enum class DistinguishMethod { chromatic_poly, x_k1, x_k2, hom_profile };

struct DistinguishResult {
  bool separated = false;
  nlohmann::json witness;  // null when the pair collides
};

DistinguishResult distinguish(const SimpleGraph& g1, const SimpleGraph& g2, DistinguishMethod method,
                              int max_host_order = 5);

struct TreeScanReport {
  int max_order = 0;
  std::vector<std::size_t> trees_per_order;
  std::uint64_t pairs = 0;
  std::vector<std::pair<SimpleGraph, SimpleGraph>> collisions;
};

/// Checks that the chromatic symmetric function separates every pair of
/// non-isomorphic trees of equal order, for orders up to `max_order` <= 9.
TreeScanReport tree_conjecture_scan(int max_order);

}  // namespace hchroma
