#include "hchroma/indices.hpp"

#include <algorithm>

#include "hchroma/error.hpp"
#include "hchroma/homomorphism.hpp"
#include "hchroma/json_io.hpp"
#include "hchroma/symfunc.hpp"

namespace hchroma {

namespace {

constexpr std::uint64_t kMaxPaleyLevel = 10;

bool is_cycle(const SimpleGraph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_path(const SimpleGraph& g) {
  if (g.order() < 1 || !g.is_connected() || g.edge_count() + 1 != static_cast<std::size_t>(g.order())) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// Vertices of a path pattern in path order.
std::vector<int> path_order(const SimpleGraph& g) {
  int start = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<int> out = {start};
  int prev = -1, cur = start;
  while (static_cast<int>(out.size()) < g.order()) {
    for (int w = 0; w < g.order(); ++w) {
      if (w != prev && g.adjacent(cur, w)) {
        prev = cur;
        cur = w;
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

// Vertices of a cycle pattern in cycle order, starting at 0.
std::vector<int> cycle_order(const SimpleGraph& g) {
  SimpleGraph open = g;
  for (int w = g.order() - 1; w > 0; --w) {
    if (g.adjacent(0, w)) {
      open.remove_edge(0, w);
      break;
    }
  }
  auto out = path_order(open);
  if (out.front() != 0) std::reverse(out.begin(), out.end());
  return out;
}

// Dense local copy of a host of at most a few hundred vertices.
struct LocalHost {
  std::uint64_t n;
  std::vector<std::vector<Vertex>> adj;
  std::vector<std::vector<bool>> matrix;

  explicit LocalHost(const HostGraph& h) : n(h.order()), adj(n), matrix(n, std::vector<bool>(n, false)) {
    for (Vertex u = 0; u < n; ++u) {
      adj[u] = h.neighbors(u);
      for (Vertex v : adj[u]) matrix[u][v] = true;
    }
  }
};

// Cycle of `length` whose smallest vertex is `s`, by DFS with Warnsdorff
// ordering (fewest onward options first).
bool cycle_from(const LocalHost& h, Vertex s, std::uint64_t length, std::vector<Vertex>& path,
                std::vector<bool>& used, std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw BudgetExceeded("cycle search exceeded its node budget");
  const Vertex cur = path.back();
  if (path.size() == length) return h.matrix[cur][s];
  std::vector<std::pair<std::uint64_t, Vertex>> options;
  for (Vertex w : h.adj[cur]) {
    if (w <= s || used[w]) continue;
    if (path.size() + 1 == length && !h.matrix[w][s]) continue;
    std::uint64_t onward = 0;
    for (Vertex x : h.adj[w])
      if (x > s && !used[x]) ++onward;
    options.emplace_back(onward, w);
  }
  std::sort(options.begin(), options.end());
  for (const auto& [onward, w] : options) {
    used[w] = true;
    path.push_back(w);
    if (cycle_from(h, s, length, path, used, nodes, budget)) return true;
    path.pop_back();
    used[w] = false;
  }
  return false;
}

std::optional<std::vector<Vertex>> find_cycle_local(const LocalHost& h, std::uint64_t length, std::uint64_t& nodes,
                                                    std::uint64_t budget) {
  if (length < 3 || length > h.n) return std::nullopt;
  std::vector<bool> used(h.n, false);
  for (Vertex s = 0; s + length <= h.n; ++s) {
    std::vector<Vertex> path = {s};
    used[s] = true;
    if (cycle_from(h, s, length, path, used, nodes, budget)) return path;
    used[s] = false;
  }
  return std::nullopt;
}

void add_flag(IndexResult& r, const std::string& f) {
  if (!r.has_flag(f)) r.flags.push_back(f);
}

IndexResult search_index(const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap, Budget budget,
                         EmbedMode mode, IndexResult r) {
  if (series.kind == SeriesSpec::Kind::paley && cap > kMaxPaleyLevel) {
    throw ParameterError("Paley series levels are limited to 10");
  }
  bool all_refuted = true;
  for (std::uint64_t level = series.first_level(); level <= cap; ++level) {
    LevelOutcome out{level, series.host_order(level, g.order()), ""};
    if (out.host_order > kMaxSearchOrder) {
      out.status = "unsearchable";
      add_flag(r, "unsearchable");
      all_refuted = false;
      r.levels.push_back(out);
      continue;
    }
    HostPtr host;
    try {
      host = series.host(level, g.order());
    } catch (const CapacityError&) {
      out.status = "unsearchable";
      add_flag(r, "unsearchable");
      all_refuted = false;
      r.levels.push_back(out);
      continue;
    }
    auto found = find_embedding(g, *host, mode, budget);
    if (found.status == SearchStatus::found) {
      out.status = "found";
      r.levels.push_back(out);
      r.value = level;
      r.exact = all_refuted;
      r.witness = std::move(found.embedding);
      r.witness_host = host;
      if (!all_refuted) add_flag(r, "upperBoundOnly");
      break;
    }
    if (found.status == SearchStatus::budget_exceeded) {
      out.status = "budget_exceeded";
      add_flag(r, "budgetExceeded");
      all_refuted = false;
    } else {
      out.status = "refuted";
      r.refuted_levels.push_back(level);
    }
    r.levels.push_back(out);
  }
  if (!r.value) add_flag(r, "exceedsCap");
  if (r.value && *r.value == 0) add_flag(r, "usedLevelZero");
  return r;
}

template <typename Invariant>
FunctionalIndexResult separate(const std::vector<SimpleGraph>& family, std::uint64_t levels, Invariant&& invariant) {
  if (family.empty()) throw ParameterError("functional_index needs a nonempty family");
  std::vector<std::string> codes;
  for (const auto& g : family) codes.push_back(canonical_form(g).code);
  auto sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ParameterError("functional_index family contains isomorphic graphs");
  }
  FunctionalIndexResult r;
  if (family.size() == 1) {
    r.value = 1;
    return r;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) pairs.emplace_back(a, b);
  r.separated_at.assign(pairs.size(), 0);
  std::size_t open = pairs.size();
  for (std::uint64_t t = 1; t <= levels && open > 0; ++t) {
    std::vector<std::string> values;
    for (const auto& g : family) values.push_back(invariant(g, t));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (r.separated_at[i] != 0) continue;
      if (values[pairs[i].first] != values[pairs[i].second]) {
        r.separated_at[i] = t;
        r.last_resolved = pairs[i];
        --open;
      }
    }
    if (open == 0) r.value = t;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (r.separated_at[i] == 0) r.colliding.push_back(pairs[i]);
  return r;
}

}  // namespace

// ------------------------------------------------------------- SeriesSpec

BigInt SeriesSpec::base_q() const { return pow(BigInt(p), static_cast<std::uint64_t>(pow(BigInt(3), m))); }

BigInt SeriesSpec::paley_degree(std::uint64_t level) const { return 2 * pow(BigInt(3), m + level); }

BigInt SeriesSpec::host_order(std::uint64_t level, int pattern_order) const {
  if (kind == Kind::paley) {
    if (level + m > kMaxPaleyLevel) throw ParameterError("Paley series levels are limited to 10");
    return pow(BigInt(p), static_cast<std::uint64_t>(paley_degree(level)));
  }
  if (level == 0) throw ParameterError("Kneser series starts at level 1");
  return binomial(level * std::max(pattern_order, 1), level);
}

HostPtr SeriesSpec::host(std::uint64_t level, int pattern_order) const {
  if (host_order(level, pattern_order) > kMaxSearchOrder) throw CapacityError("series level too large to search");
  if (kind == Kind::paley) {
    return std::make_shared<PaleyHost>(find_irreducible(p, static_cast<int>(paley_degree(level))));
  }
  const std::uint64_t ground = level * std::max(pattern_order, 1);
  if (ground > 24) throw CapacityError("Kneser slice ground set above 24");
  return std::make_shared<KneserHost>(static_cast<int>(ground), static_cast<int>(level));
}

std::string SeriesSpec::describe() const {
  if (kind == Kind::kneser) return "kneser";
  return "paley:" + std::to_string(p) + (m ? ":" + std::to_string(m) : "");
}

bool IndexResult::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

// ---------------------------------------------------------------- indices

IndexResult induced_index(const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap, Budget budget) {
  IndexResult r;
  r.operation = "induced_index";
  return search_index(g, series, cap, budget, EmbedMode::induced, std::move(r));
}

IndexResult subgraph_index(const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap, Budget budget) {
  IndexResult r;
  r.operation = "subgraph_index";
  const bool cycle = is_cycle(g), path = is_path(g);
  if (series.kind != SeriesSpec::Kind::paley || !(cycle || path)) {
    return search_index(g, series, cap, budget, EmbedMode::subgraph, std::move(r));
  }

  // Every P((q^2)^{3^n}) is pancyclic, so C_k and P_k fit exactly when the
  // host has at least k vertices.
  const std::uint64_t k = g.order();
  std::uint64_t level = 0;
  while (series.host_order(level, g.order()) < k) ++level;
  add_flag(r, "usedClosedForm");
  r.exact = true;
  if (level > cap) {
    add_flag(r, "exceedsCap");
    return r;
  }
  r.value = level;
  if (level == 0) add_flag(r, "usedLevelZero");
  for (std::uint64_t below = 0; below < level; ++below) {
    r.refuted_levels.push_back(below);
    r.levels.push_back({below, series.host_order(below, g.order()), "refuted"});
  }
  LevelOutcome out{level, series.host_order(level, g.order()), "closed_form"};
  if (out.host_order <= kMaxCrossCheckOrder) {
    HostPtr host = series.host(level, g.order());
    const LocalHost local(*host);
    std::uint64_t nodes = 0;
    std::vector<Vertex> image;
    if (k <= 2) {
      image = {0};
      if (k == 2) image.push_back(local.adj[0].at(0));
    } else {
      auto c = find_cycle_local(local, k, nodes, budget.nodes);
      if (c) image = *c;
    }
    if (image.size() == k) {
      Embedding e{EmbedMode::subgraph, g, std::vector<Vertex>(k)};
      const auto order = cycle ? cycle_order(g) : path_order(g);
      for (std::size_t i = 0; i < k; ++i) e.map[order[i]] = image[i];
      if (verify_embedding(e, *host)) {
        out.status = "found";
        r.witness = std::move(e);
        r.witness_host = host;
        add_flag(r, "crossChecked");
      }
    }
    if (!r.witness) add_flag(r, "crossCheckFailed");
  } else {
    add_flag(r, "crossCheckSkipped");
  }
  r.levels.push_back(out);
  return r;
}

FunctionalIndexResult functional_index(const std::vector<SimpleGraph>& family, const std::vector<HostPtr>& hosts,
                                       InvariantKind kind) {
  return separate(family, hosts.size(), [&](const SimpleGraph& g, std::uint64_t t) -> std::string {
    const HostGraph& h = *hosts[t - 1];
    if (kind == InvariantKind::hom_count) return count_hom(g, h).str();
    return to_json(x_h(g, h), h).dump();
  });
}

FunctionalIndexResult functional_index_kneser(const std::vector<SimpleGraph>& family, int max_level) {
  if (max_level < 1 || max_level > 3) throw CapacityError("Kneser functional index supports levels 1..3");
  return separate(family, max_level, [&](const SimpleGraph& g, std::uint64_t t) -> std::string {
    if (t == 1) return to_json(chromatic_symmetric_function(g)).dump();
    return to_json(direct_m_expansion(g, static_cast<int>(t))).dump();
  });
}

// ---------------------------------------------------------- pancyclicity

std::optional<std::vector<Vertex>> find_cycle(const HostGraph& h, std::uint64_t length, Budget budget) {
  if (h.order() > 200) throw CapacityError("cycle search supports hosts up to 200 vertices");
  const LocalHost local(h);
  std::uint64_t nodes = 0;
  return find_cycle_local(local, length, nodes, budget.nodes);
}

PancyclicityReport pancyclicity_certificate(const HostGraph& h, Budget budget) {
  if (h.order() > 200) throw CapacityError("pancyclicity certificates support hosts up to 200 vertices");
  const LocalHost local(h);
  PancyclicityReport report;
  for (std::uint64_t len = 3; len <= h.order(); ++len) {
    std::uint64_t nodes = 0;
    try {
      auto c = find_cycle_local(local, len, nodes, budget.nodes);
      if (c) {
        for (std::size_t i = 0; i < c->size(); ++i) {
          if (!h.adjacent((*c)[i], (*c)[(i + 1) % c->size()])) throw std::logic_error("cycle failed verification");
        }
        report.cycles.emplace(len, std::move(*c));
      } else {
        report.refuted.push_back(len);
        report.missing.push_back(len);
      }
    } catch (const BudgetExceeded&) {
      report.budget_exhausted.push_back(len);
      report.missing.push_back(len);
    }
    report.nodes += nodes;
  }
  return report;
}

// ------------------------------------------------------------ distinguish

DistinguishResult distinguish(const SimpleGraph& g1, const SimpleGraph& g2, DistinguishMethod method,
                              int max_host_order) {
  DistinguishResult r;
  switch (method) {
    case DistinguishMethod::chromatic_poly: {
      const auto a = chromatic_polynomial(g1), b = chromatic_polynomial(g2);
      const std::size_t len = std::max(a.size(), b.size());
      for (std::size_t d = 0; d < len; ++d) {
        const BigInt ca = d < a.size() ? a[d] : BigInt(0), cb = d < b.size() ? b[d] : BigInt(0);
        if (ca != cb) {
          r.separated = true;
          r.witness = {{"degree", d}, {"coeff1", big_json(ca)}, {"coeff2", big_json(cb)}};
          break;
        }
      }
      break;
    }
    case DistinguishMethod::x_k1:
    case DistinguishMethod::x_k2: {
      const bool k1 = method == DistinguishMethod::x_k1;
      const SymFunc a = k1 ? chromatic_symmetric_function(g1) : direct_m_expansion(g1, 2);
      const SymFunc b = k1 ? chromatic_symmetric_function(g2) : direct_m_expansion(g2, 2);
      std::vector<ClassTuple> keys;
      for (const auto& [key, c] : a.terms()) keys.push_back(key);
      for (const auto& [key, c] : b.terms()) keys.push_back(key);
      std::sort(keys.begin(), keys.end());
      for (const auto& key : keys) {
        if (a.coefficient(key) != b.coefficient(key)) {
          r.separated = true;
          r.witness = {{"class", key.empty() ? nlohmann::json(nullptr) : to_json(key[0])},
                       {"coeff1", big_json(a.coefficient(key))},
                       {"coeff2", big_json(b.coefficient(key))}};
          break;
        }
      }
      break;
    }
    case DistinguishMethod::hom_profile: {
      const auto a = hom_profile(g1, max_host_order), b = hom_profile(g2, max_host_order);
      for (std::size_t i = 0; i < a.hosts.size(); ++i) {
        if (a.counts[i] != b.counts[i]) {
          r.separated = true;
          r.witness = {{"host", to_graph6(a.hosts[i])},
                       {"hostOrder", a.hosts[i].order()},
                       {"count1", big_json(a.counts[i])},
                       {"count2", big_json(b.counts[i])}};
          break;
        }
      }
      break;
    }
  }
  return r;
}

TreeScanReport tree_conjecture_scan(int max_order) {
  if (max_order < 1 || max_order > 9) throw CapacityError("tree scan supports orders 1..9");
  TreeScanReport report;
  report.max_order = max_order;
  // Trees of different orders are separated by degree alone; compare within
  // each order.
  for (int n = 1; n <= max_order; ++n) {
    const auto& trees = enumerate_trees(n);
    report.trees_per_order.push_back(trees.size());
    report.pairs += trees.size() * (trees.size() - 1) / 2;
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      groups[to_json(chromatic_symmetric_function(trees[i])).dump()].push_back(i);
    }
    for (const auto& [key, members] : groups)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          report.collisions.emplace_back(trees[members[a]], trees[members[b]]);
  }
  return report;
}

}  // namespace hchroma
