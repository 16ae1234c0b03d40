#include "hchroma/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hchroma/error.hpp"

namespace hchroma {

BigInt MonomialPoly::mass() const {
  BigInt total = 0;
  for (const auto& [image, c] : terms) total += c;
  return total;
}

namespace {

// Pattern vertices by decreasing degree, then BFS from the first so that
// every later vertex of a component has an earlier neighbour.
std::vector<int> search_order(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (int root : by_degree) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int v = order[head++];
      for (int w : by_degree) {
        if (!seen[w] && g.adjacent(v, w)) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

// Depth-first enumeration of (weak) homomorphisms. `leaf` receives the image
// vector at each complete map.
class HomSearch {
 public:
  HomSearch(const SimpleGraph& g, const HostGraph& h, bool weak, Budget budget)
      : g_(g), h_(h), weak_(weak), budget_(budget), order_(search_order(g)), image_(g.order(), 0) {}

  template <typename Leaf>
  void run(Leaf&& leaf) {
    rec(0, leaf);
  }

 private:
  bool related(Vertex a, Vertex b) const { return a == b ? weak_ : h_.adjacent(a, b); }

  template <typename Leaf>
  void rec(std::size_t i, Leaf& leaf) {
    if (++nodes_ > budget_.nodes) throw BudgetExceeded("homomorphism search exceeded its node budget");
    if (i == order_.size()) {
      leaf(image_);
      return;
    }
    const int v = order_[i];
    int anchor = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (g_.adjacent(v, order_[j])) {
        anchor = order_[j];
        break;
      }
    }
    auto try_candidate = [&](Vertex c) {
      for (std::size_t j = 0; j < i; ++j) {
        const int u = order_[j];
        if (u != anchor && g_.adjacent(v, u) && !related(image_[u], c)) return;
      }
      image_[v] = c;
      rec(i + 1, leaf);
    };
    if (anchor < 0) {
      for (Vertex c = 0; c < h_.order(); ++c) try_candidate(c);
      return;
    }
    const Vertex a = image_[anchor];
    if (weak_) {
      // Merge the anchor image itself into the sorted neighbour list.
      bool done = false;
      for (Vertex c : h_.neighbors(a)) {
        if (!done && a < c) {
          try_candidate(a);
          done = true;
        }
        try_candidate(c);
      }
      if (!done) try_candidate(a);
    } else {
      for (Vertex c : h_.neighbors(a)) try_candidate(c);
    }
  }

  const SimpleGraph& g_;
  const HostGraph& h_;
  bool weak_;
  Budget budget_;
  std::vector<int> order_;
  std::vector<Vertex> image_;
  std::uint64_t nodes_ = 0;
};

// |Hom(G, K_n)| as the sum over partitions of V into j independent sets of
// falling(n, j). Subset DP, |V| <= 16.
BigInt count_into_complete(const SimpleGraph& g, std::uint64_t n) {
  const int order = g.order();
  const std::uint32_t full = (std::uint32_t{1} << order) - 1;
  std::vector<bool> independent(std::size_t{1} << order, false);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (std::uint32_t r = s; r && ok; r &= r - 1) {
      const int v = std::countr_zero(r);
      ok = (g.row(v) & s) == 0;
    }
    independent[s] = ok;
  }
  // blocks[s][j]: partitions of s into j independent blocks.
  std::vector<std::vector<BigInt>> blocks(std::size_t{1} << order, std::vector<BigInt>(order + 1, 0));
  blocks[0][0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    // The block containing the lowest vertex: low plus any subset of rest.
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      const std::uint32_t block = t | low;
      if (independent[block]) {
        for (int j = 1; j <= order; ++j) blocks[s][j] += blocks[s ^ block][j - 1];
      }
      if (t == 0) break;
    }
  }
  BigInt total = 0;
  for (int j = 0; j <= order; ++j) total += blocks[full][j] * falling_factorial(n, j);
  return total;
}

BigInt count_impl(const SimpleGraph& g, const HostGraph& h, bool weak, Budget budget) {
  if (g.order() == 0) return 1;
  if (const auto* complete = dynamic_cast<const CompleteHost*>(&h)) {
    if (weak) return pow(BigInt(complete->order()), static_cast<std::uint64_t>(g.order()));
    if (g.order() <= 16) return count_into_complete(g, complete->order());
  }
  BigInt total = 1;
  for (const auto& comp : connected_components(g)) {
    BigInt count = 0;
    HomSearch search(comp, h, weak, budget);
    search.run([&](const std::vector<Vertex>&) { ++count; });
    total *= count;
    if (total == 0) break;
  }
  return total;
}

MonomialPoly poly_impl(const SimpleGraph& g, const HostGraph& h, bool weak, Budget budget) {
  MonomialPoly out;
  out.graph_order = g.order();
  HomSearch search(g, h, weak, budget);
  std::vector<Vertex> key;
  search.run([&](const std::vector<Vertex>& image) {
    key = image;
    std::sort(key.begin(), key.end());
    ++out.terms[key];
  });
  return out;
}

}  // namespace

BigInt count_hom(const SimpleGraph& g, const HostGraph& h, Budget budget) {
  return count_impl(g, h, false, budget);
}

BigInt count_weak_hom(const SimpleGraph& g, const HostGraph& h, Budget budget) {
  return count_impl(g, h, true, budget);
}

MonomialPoly x_h(const SimpleGraph& g, const HostGraph& h, Budget budget) { return poly_impl(g, h, false, budget); }

MonomialPoly w_h(const SimpleGraph& g, const HostGraph& h, Budget budget) { return poly_impl(g, h, true, budget); }

std::vector<BigInt> chromatic_polynomial(const SimpleGraph& g) {
  const int m = g.order();
  if (m > 12) throw CapacityError("chromatic_polynomial supports at most 12 vertices");
  // Newton form through the points n = 0..m, then expanded to monomials.
  std::vector<BigRational> dd(m + 1);
  for (int n = 0; n <= m; ++n) dd[n] = BigRational(count_hom(g, CompleteHost(n)));
  for (int level = 1; level <= m; ++level)
    for (int i = m; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / level;

  std::vector<BigRational> coeffs(m + 1, 0);
  // Horner on nested form: c_m, then (x - i) * acc + c_i.
  for (int i = m; i >= 0; --i) {
    for (int d = m; d >= 1; --d) coeffs[d] = coeffs[d - 1] - coeffs[d] * i;
    coeffs[0] = -coeffs[0] * i;
    coeffs[0] += dd[i];
  }
  std::vector<BigInt> out(m + 1);
  for (int d = 0; d <= m; ++d) {
    if (denominator(coeffs[d]) != 1) throw std::logic_error("chromatic polynomial has a non-integer coefficient");
    out[d] = numerator(coeffs[d]);
  }
  return out;
}

BigInt evaluate(const std::vector<BigInt>& poly, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

HomProfile hom_profile(const SimpleGraph& g, int max_host_order) {
  if (max_host_order < 1 || max_host_order > 6) throw CapacityError("hom_profile supports host orders 1..6");
  HomProfile out;
  for (int n = 1; n <= max_host_order; ++n) {
    for (const auto& f : enumerate_graphs(n)) {
      out.hosts.push_back(f);
      out.counts.push_back(count_hom(g, DenseHost(f)));
    }
  }
  return out;
}

}  // namespace hchroma
