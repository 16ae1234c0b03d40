#include <algorithm>
#include <map>

#include "hchroma/graph.hpp"

namespace hchroma {

namespace {

using Cells = std::vector<std::vector<int>>;

std::uint64_t mask_of(const std::vector<int>& cell) {
  std::uint64_t m = 0;
  for (int v : cell) m |= std::uint64_t{1} << v;
  return m;
}

// Equitable refinement: split every cell by neighbour counts into each
// splitter cell until nothing changes. Sub-cells are ordered by count, so the
// result depends only on the graph structure and the input order of cells.
void refine(const SimpleGraph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = mask_of(cells[s]);
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<int, std::vector<int>> by_count;
        for (int v : cell) by_count[std::popcount(g.row(v) & splitter)].push_back(v);
        if (by_count.size() > 1) changed = true;
        for (auto& [count, part] : by_count) next.push_back(std::move(part));
      }
      cells = std::move(next);
    }
  }
}

struct Search {
  const SimpleGraph& g;
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_labeling;
  BigInt best_count = 0;
  bool have_best = false;

  void leaf(const Cells& cells, const BigInt& weight) {
    const int n = g.order();
    std::vector<int> labeling(n);
    for (std::size_t i = 0; i < cells.size(); ++i) labeling[cells[i][0]] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0; u < n; ++u) {
      std::uint64_t r = g.row(u), nr = 0;
      while (r) {
        nr |= std::uint64_t{1} << labeling[std::countr_zero(r)];
        r &= r - 1;
      }
      rows[labeling[u]] = nr;
    }
    if (!have_best || rows < best_rows) {
      best_rows = std::move(rows);
      best_labeling = std::move(labeling);
      best_count = weight;
      have_best = true;
    } else if (rows == best_rows) {
      best_count += weight;
    }
  }

  void run(Cells cells, const BigInt& weight) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells, weight);
      return;
    }
    // Twins inside the target cell are exchanged by an automorphism fixing
    // everything already individualised, so one branch per twin class
    // suffices; its leaves are counted with the class size as weight.
    const auto& cell = cells[target];
    std::vector<bool> done(cell.size(), false);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (done[i]) continue;
      const int v = cell[i];
      std::size_t twins = 1;
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        const int w = cell[j];
        const std::uint64_t bv = std::uint64_t{1} << v, bw = std::uint64_t{1} << w;
        if (!done[j] && (g.row(v) & ~bw) == (g.row(w) & ~bv)) {
          done[j] = true;
          ++twins;
        }
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cell)
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      run(std::move(child), weight * twins);
    }
  }
};

CanonicalLabeling canonical_connected(const SimpleGraph& g) {
  Search s{g, {}, {}, 0, false};
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  s.run({all}, 1);
  return {std::move(s.best_labeling), std::move(s.best_count)};
}

CanonicalLabeling canonical_impl(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return {std::vector<int>(n, 0), 1};

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (2 * g.edge_count() > pairs) return canonical_impl(g.complement());

  auto comps = component_vertex_sets(g);
  if (comps.size() == 1) return canonical_connected(g);

  struct Part {
    std::string code;
    std::vector<int> verts;
    CanonicalLabeling lab;
  };
  std::vector<Part> parts;
  for (auto& verts : comps) {
    const SimpleGraph sub = g.induced(verts);
    CanonicalLabeling lab = canonical_impl(sub);
    std::string code = to_graph6(sub.relabeled(lab.labeling));
    parts.push_back({std::move(code), std::move(verts), std::move(lab)});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.code < b.code; });

  CanonicalLabeling out{std::vector<int>(n), 1};
  int offset = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    for (std::size_t j = 0; j < p.verts.size(); ++j) out.labeling[p.verts[j]] = offset + p.lab.labeling[j];
    offset += static_cast<int>(p.verts.size());
    out.aut_order *= p.lab.aut_order;
    run = (i > 0 && parts[i - 1].code == p.code) ? run + 1 : 1;
    out.aut_order *= run;
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g) { return canonical_impl(g); }

CanonicalCode canonical_form(const SimpleGraph& g) {
  auto lab = canonical_impl(g);
  return {to_graph6(g.relabeled(lab.labeling)), std::move(lab.aut_order)};
}

SimpleGraph canonical_graph(const SimpleGraph& g) {
  return g.relabeled(canonical_impl(g).labeling);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace hchroma
