#include "hchroma/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "hchroma/error.hpp"

namespace hchroma {

const char* to_string(Basis b) { return b == Basis::m ? "m" : "p"; }

SymFunc SymFunc::unit(int k, Basis basis) {
  SymFunc f(k, basis);
  f.add({}, 1);
  return f;
}

SymFunc SymFunc::monomial(const HyperMultigraph& cls) {
  SymFunc f(cls.k(), Basis::m);
  if (cls.edge_count() == 0) {
    f.add({}, 1);
  } else {
    f.add({cls}, 1);
  }
  return f;
}

SymFunc SymFunc::power_sum(const HyperMultigraph& cls) {
  SymFunc f(cls.k(), Basis::p);
  f.add(connected_components(cls), 1);
  return f;
}

BigInt SymFunc::coefficient(const ClassTuple& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SymFunc::check_key(const ClassTuple& key) const {
  if (basis_ == Basis::m && key.size() > 1) throw ParameterError("monomial keys hold one class");
  for (const auto& c : key) {
    if (c.k() != k_) throw UniformityError("class uniformity does not match the function");
    if (c.edge_count() == 0) throw ParameterError("the unit is the empty key");
    if (basis_ == Basis::p && !c.is_connected()) {
      throw ParameterError("power-sum keys hold connected classes only");
    }
  }
  if (!std::is_sorted(key.begin(), key.end())) throw ParameterError("power-sum keys must be sorted");
}

void SymFunc::add(const ClassTuple& key, const BigInt& coeff) {
  if (coeff == 0) return;
  check_key(key);
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.k_ != k_ || other.basis_ != basis_) throw ParameterError("adding functions of different k or basis");
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

SymFunc& SymFunc::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

// ----------------------------------------------------------- m_lambda m_mu

namespace {

// Sub-multisets of `edges` (sorted) with exactly `size` elements, as
// selection-count vectors over the distinct values.
void sub_multisets(const std::vector<HyperEdge>& distinct, const std::vector<int>& mult, std::size_t size,
                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> take(distinct.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == distinct.size()) {
      if (left == 0) visit(take);
      return;
    }
    for (int t = 0; t <= mult[i] && static_cast<std::size_t>(t) <= left; ++t) {
      take[i] = t;
      self(self, i + 1, left - t);
    }
    take[i] = 0;
  };
  rec(rec, 0, size);
}

// Number of splits of the multiset `nu` into a part of class lambda and the
// complementary part of class mu.
BigInt split_count(const std::vector<HyperEdge>& nu, int k, const HyperMultigraph& lambda,
                   const HyperMultigraph& mu) {
  std::vector<HyperEdge> distinct;
  std::vector<int> mult;
  for (HyperEdge e : nu) {
    if (!distinct.empty() && distinct.back() == e) {
      ++mult.back();
    } else {
      distinct.push_back(e);
      mult.push_back(1);
    }
  }
  BigInt count = 0;
  sub_multisets(distinct, mult, lambda.edge_count(), [&](const std::vector<int>& take) {
    std::vector<HyperEdge> a, b;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (int t = 0; t < take[i]; ++t) a.push_back(distinct[i]);
      for (int t = take[i]; t < mult[i]; ++t) b.push_back(distinct[i]);
    }
    if (canonicalize_edges(k, a) == lambda && canonicalize_edges(k, b) == mu) ++count;
  });
  return count;
}

std::map<HyperMultigraph, BigInt> compute_product(const HyperMultigraph& big, const HyperMultigraph& small) {
  const int k = big.k();
  const int mb = big.vertex_count(), ms = small.vertex_count();
  if (mb + ms > kMaxHyperVertices) throw CapacityError("product exceeds 32 vertices");

  // Place `small` against the fixed representative of `big`: each vertex of
  // `small` either lands on a vertex of `big` (injectively) or on a fresh one.
  std::map<HyperMultigraph, BigInt> out;
  std::vector<int> image(ms, -1);
  std::vector<bool> used(mb, false);
  auto rec = [&](auto&& self, int v, int fresh) -> void {
    if (v == ms) {
      std::vector<HyperEdge> edges = big.edges();
      for (HyperEdge e : small.edges()) {
        HyperEdge mapped = 0;
        for (; e; e &= e - 1) mapped |= HyperEdge{1} << image[std::countr_zero(e)];
        edges.push_back(mapped);
      }
      auto nu = canonicalize_edges(k, edges);
      if (!out.contains(nu)) out.emplace(nu, 0);
      return;
    }
    for (int w = 0; w < mb; ++w) {
      if (used[w]) continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1, fresh);
      used[w] = false;
    }
    image[v] = mb + fresh;
    self(self, v + 1, fresh + 1);
  };
  rec(rec, 0, 0);
  for (auto& [nu, c] : out) c = split_count(nu.edges(), k, big, small);
  return out;
}

}  // namespace

const std::map<HyperMultigraph, BigInt>& monomial_product(const HyperMultigraph& lambda,
                                                         const HyperMultigraph& mu) {
  if (lambda.k() != mu.k()) throw UniformityError("multiplying classes of different k");
  static std::mutex mu_lock;
  static std::map<std::pair<std::string, std::string>, std::map<HyperMultigraph, BigInt>> cache;
  // The product is commutative; key and compute with the larger class first.
  const bool swap = lambda.vertex_count() < mu.vertex_count() ||
                    (lambda.vertex_count() == mu.vertex_count() && lambda.code() > mu.code());
  const HyperMultigraph& big = swap ? mu : lambda;
  const HyperMultigraph& small = swap ? lambda : mu;
  auto key = std::make_pair(big.code(), small.code());
  {
    std::lock_guard lock(mu_lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = compute_product(big, small);
  std::lock_guard lock(mu_lock);
  return cache.try_emplace(key, std::move(value)).first->second;
}

SymFunc m_mul(const SymFunc& a, const SymFunc& b) {
  if (a.k() != b.k()) throw UniformityError("m_mul of functions with different k");
  if (a.basis() != Basis::m || b.basis() != Basis::m) throw ParameterError("m_mul expects monomial basis");
  SymFunc out(a.k(), Basis::m);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.empty() || kb.empty()) {
        out.add(ka.empty() ? kb : ka, ca * cb);
        continue;
      }
      for (const auto& [nu, c] : monomial_product(ka[0], kb[0])) out.add({nu}, ca * cb * c);
    }
  }
  return out;
}

SymFunc p_to_m(const SymFunc& f) {
  if (f.basis() == Basis::m) return f;
  SymFunc out(f.k(), Basis::m);
  for (const auto& [key, coeff] : f.terms()) {
    // Multiply the largest components first so each product places the
    // smaller factor against the larger representative.
    ClassTuple comps = key;
    std::stable_sort(comps.begin(), comps.end(), [](const HyperMultigraph& x, const HyperMultigraph& y) {
      return x.vertex_count() > y.vertex_count();
    });
    SymFunc prod = SymFunc::unit(f.k(), Basis::m);
    for (const auto& c : comps) prod = m_mul(prod, SymFunc::monomial(c));
    prod *= coeff;
    out += prod;
  }
  return out;
}

// ------------------------------------------------------ power-sum expansion

namespace {

const std::vector<AdmissibleClass>& cached_admissible(const SimpleGraph& component, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<AdmissibleClass>> cache;
  const SimpleGraph canon = canonical_graph(component);
  auto key = std::make_pair(to_graph6(canon), k);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = admissible_set(canon, k);
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

// Sum over the product A_{G_1} x ... x A_{G_l} of the weighted power sums.
void add_product_terms(const SimpleGraph& gs, int k, const BigInt& sign, SymFunc& out) {
  std::vector<const std::vector<AdmissibleClass>*> factors;
  for (const auto& comp : connected_components(gs)) factors.push_back(&cached_admissible(comp, k));
  ClassTuple key;
  auto rec = [&](auto&& self, std::size_t i, const BigInt& weight) -> void {
    if (i == factors.size()) {
      ClassTuple sorted = key;
      std::sort(sorted.begin(), sorted.end());
      out.add(sorted, sign * weight);
      return;
    }
    for (const auto& ac : *factors[i]) {
      key.push_back(ac.cls);
      self(self, i + 1, weight * ac.maps);
      key.pop_back();
    }
  };
  rec(rec, 0, BigInt(1));
}

}  // namespace

SymFunc theorem2_expansion(const SimpleGraph& g, int k, unsigned threads) {
  if (g.order() > 6 || g.edge_count() > 10 || k < 1 || k > 3) {
    throw CapacityError("theorem2_expansion supports |V| <= 6, |E| <= 10, 1 <= k <= 3");
  }
  if (g.order() == 0) return SymFunc::unit(k, Basis::p);

  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));

  // Each worker sums a contiguous block of subsets; integer addition makes the
  // merged result independent of the split.
  std::vector<SymFunc> partial(threads, SymFunc(k, Basis::p));
  auto work = [&](unsigned t) {
    const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      SimpleGraph gs(g.order());
      for (std::size_t i = 0; i < edges.size(); ++i)
        if ((mask >> i) & 1U) gs.add_edge(edges[i].first, edges[i].second);
      const BigInt sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
      add_product_terms(gs, k, sign, partial[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  SymFunc out(k, Basis::p);
  for (const auto& p : partial) out += p;
  return out;
}

// ------------------------------------------------------------------ oracles

SymFunc direct_m_expansion(const SimpleGraph& g, int k) {
  const int n = g.order();
  if (n > 6 || k < 1 || k > 3) throw CapacityError("direct_m_expansion supports |V| <= 6, 1 <= k <= 3");
  if (n == 0) return SymFunc::unit(k, Basis::m);

  // Candidate classes: proper assignments into a k|V|-point universe with
  // fresh points introduced in increasing order.
  std::map<std::string, HyperMultigraph> classes;
  std::vector<HyperEdge> assigned(n, 0);
  auto rec = [&](auto&& self, int v, int next_fresh) -> void {
    if (v == n) {
      auto c = canonicalize_edges(k, assigned);
      classes.try_emplace(c.code(), std::move(c));
      return;
    }
    for (int fresh = 0; fresh <= k; ++fresh) {
      const int old = k - fresh;
      if (old > next_fresh) continue;
      HyperEdge fresh_bits = 0;
      for (int i = 0; i < fresh; ++i) fresh_bits |= HyperEdge{1} << (next_fresh + i);
      std::vector<int> idx(old);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        HyperEdge e = fresh_bits;
        for (int i : idx) e |= HyperEdge{1} << i;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          if (g.adjacent(u, v)) ok = (assigned[u] & e) == 0;
        if (ok) {
          assigned[v] = e;
          self(self, v + 1, next_fresh + fresh);
        }
        int pos = old - 1;
        while (pos >= 0 && idx[pos] == next_fresh - old + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < old; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    assigned[v] = 0;
  };
  rec(rec, 0, 0);

  SymFunc out(k, Basis::m);
  for (const auto& [code, cls] : classes) out.add({cls}, count_image_maps(g, cls, false));
  return out;
}

namespace {

// Rank of a sorted multiset a_0 <= ... <= a_{r-1} over {0..N-1} in the
// combinatorial number system (b_i = a_i + i is strictly increasing).
std::uint64_t multiset_rank(const std::vector<int>& sorted, const std::vector<std::vector<std::uint64_t>>& binom) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank += binom[sorted[i] + i][i + 1];
  return rank;
}

}  // namespace

SymFunc kneser_slice_expansion(const SimpleGraph& g, int k, int ground) {
  const int n = g.order();
  if (n > 5 || ground > 10 || k < 1 || k > 2 || ground < k) {
    throw CapacityError("kneser_slice_expansion supports |V| <= 5, k <= ground <= 10, k <= 2");
  }
  if (n == 0) return SymFunc::unit(k, Basis::m);

  std::vector<HyperEdge> subsets;
  for (HyperEdge s = 0; s < (HyperEdge{1} << ground); ++s)
    if (std::popcount(s) == k) subsets.push_back(s);
  const int count = static_cast<int>(subsets.size());

  const int top = count + n;
  std::vector<std::vector<std::uint64_t>> binom(top + 1, std::vector<std::uint64_t>(n + 2, 0));
  for (int a = 0; a <= top; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= std::min(a, n + 1); ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
  }
  // Monomial coefficients indexed by the rank of the sorted image multiset.
  std::vector<std::uint64_t> coeff(binom[count + n - 1][n], 0);

  std::vector<int> image(n, 0), sorted(n);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::copy(image.begin(), image.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      ++coeff[multiset_rank(sorted, binom)];
      return;
    }
    for (int s = 0; s < count; ++s) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v)) ok = (subsets[image[u]] & subsets[s]) == 0;
      if (!ok) continue;
      image[v] = s;
      self(self, v + 1);
    }
  };
  rec(rec, 0);

  // Every monomial in a class carries the class coefficient. Read it off the
  // monomials whose points form an initial segment {0..m-1}, and check that
  // all of them agree.
  std::map<HyperMultigraph, std::uint64_t> by_class;
  std::vector<int> ms(n);
  auto walk = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      const std::uint64_t c = coeff[multiset_rank(ms, binom)];
      if (c == 0) return;
      std::vector<HyperEdge> edges;
      HyperEdge points = 0;
      for (int s : ms) {
        edges.push_back(subsets[s]);
        points |= subsets[s];
      }
      if ((points & (points + 1)) != 0) return;  // not an initial segment
      auto cls = canonicalize_edges(k, edges);
      auto [it, inserted] = by_class.try_emplace(cls, c);
      if (!inserted && it->second != c) {
        throw std::logic_error("kneser slice: monomials of one class have different coefficients");
      }
      return;
    }
    for (int s = lo; s < count; ++s) {
      ms[i] = s;
      self(self, i + 1, s);
    }
  };
  walk(walk, 0, 0);

  SymFunc out(k, Basis::m);
  for (const auto& [cls, c] : by_class) out.add({cls}, BigInt(c));
  return out;
}

SymFunc chromatic_symmetric_function(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 12) throw CapacityError("chromatic_symmetric_function supports at most 12 vertices");
  if (n == 0) return SymFunc::unit(1, Basis::m);
  // Stable partitions: each block is the lowest unplaced vertex plus an
  // independent subset of the remaining ones.
  std::map<std::vector<int>, BigInt> by_type;
  std::vector<int> sizes;
  auto rec = [&](auto&& self, std::uint64_t left) -> void {
    if (left == 0) {
      std::vector<int> type = sizes;
      std::sort(type.begin(), type.end(), std::greater<>());
      ++by_type[type];
      return;
    }
    const int v = std::countr_zero(left);
    const std::uint64_t rest = left & ~(std::uint64_t{1} << v) & ~g.row(v);
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      bool independent = true;
      for (std::uint64_t r = t; r && independent; r &= r - 1) independent = (g.row(std::countr_zero(r)) & t) == 0;
      if (independent) {
        const std::uint64_t block = t | (std::uint64_t{1} << v);
        sizes.push_back(std::popcount(block));
        self(self, left & ~block);
        sizes.pop_back();
      }
      if (t == 0) break;
    }
  };
  rec(rec, g.vertex_mask());

  SymFunc out(1, Basis::m);
  for (const auto& [type, count] : by_type) {
    std::vector<std::vector<int>> edges;
    BigInt weight = count;
    for (std::size_t i = 0; i < type.size(); ++i) {
      for (int j = 0; j < type[i]; ++j) edges.push_back({static_cast<int>(i)});
    }
    for (std::size_t i = 0; i < type.size();) {
      std::size_t j = i;
      while (j < type.size() && type[j] == type[i]) ++j;
      weight *= factorial(j - i);
      i = j;
    }
    out.add({canonicalize(1, edges)}, weight);
  }
  return out;
}

BigInt specialize_ones(const SymFunc& f, std::uint64_t n) {
  const SymFunc m = p_to_m(f);
  BigInt total = 0;
  for (const auto& [key, coeff] : m.terms()) {
    if (key.empty()) {
      total += coeff;
      continue;
    }
    const auto& cls = key[0];
    total += coeff * falling_factorial(n, static_cast<std::uint64_t>(cls.vertex_count())) / cls.aut_order();
  }
  return total;
}

bool equals(const SymFunc& f, const SymFunc& g) {
  if (f.k() != g.k()) throw UniformityError("comparing functions with different k");
  return p_to_m(f) == p_to_m(g);
}

std::string to_latex(const SymFunc& f) {
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : f.terms()) {
    std::string c = coeff.str();
    if (first) {
      if (coeff == -1) c = "-";
      else if (coeff == 1) c = "";
    } else if (coeff < 0) {
      c = coeff == -1 ? " - " : " - " + BigInt(-coeff).str();
    } else {
      c = coeff == 1 ? " + " : " + " + c;
    }
    out += c;
    first = false;
    if (key.empty()) {
      out += "1";
      continue;
    }
    out += std::string(to_string(f.basis())) + "_{";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += " \\sqcup ";
      out += "\\{";
      const auto lists = key[i].edge_lists();
      for (std::size_t e = 0; e < lists.size(); ++e) {
        if (e) out += ",";
        for (int v : lists[e]) out += std::to_string(v + 1);
      }
      out += "\\}";
    }
    out += "}";
  }
  return out.empty() ? "0" : out;
}

}  // namespace hchroma
