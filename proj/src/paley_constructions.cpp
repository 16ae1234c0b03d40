#include <algorithm>

#include "hchroma/error.hpp"
#include "hchroma/galois.hpp"

namespace hchroma {

namespace {

// Common setup: GF(q) inside GF(q0), P(q0), a non-residue x and A = GF(q) x.
struct Scaffold {
  Field sub;
  PaleyHost host;
  SubfieldEmbedding embed;
  FieldElement x = 0;
  FieldElement alpha = 0;               // primitive element of GF(q), embedded
  std::vector<FieldElement> scalars;    // embedded GF(q), by subfield order
  std::vector<FieldElement> a_set;      // scalars[i] * x

  Scaffold(const FieldSpec& q_spec, const FieldSpec& q0_spec)
      : sub(q_spec), host(q0_spec), embed(sub, host.field()) {
    const Field& f = host.field();
    if (q_spec.p != q0_spec.p || q0_spec.d % q_spec.d != 0 || (q0_spec.d / q_spec.d) % 2 != 0) {
      throw ParameterError("GF(q0) must be an even-degree extension of GF(q)");
    }
    for (FieldElement e = 1; e < f.order(); ++e) {
      if (!host.adjacent(e, 0)) {
        x = e;
        break;
      }
    }
    for (FieldElement a = 0; a < sub.order(); ++a) scalars.push_back(embed(a));
    for (FieldElement s : scalars) a_set.push_back(f.mul(s, x));
    alpha = embed(sub.primitive_element());
  }

  const Field& field() const { return host.field(); }

  FieldElement alpha_pow(std::uint64_t i) const { return field().pow(alpha, i); }

  bool in(const std::vector<FieldElement>& set, FieldElement v) const {
    return std::find(set.begin(), set.end(), v) != set.end();
  }

  // First v (in element order) outside `exclude` whose neighbourhood within
  // `probe` is exactly `wanted`.
  std::optional<FieldElement> scan(const std::vector<FieldElement>& probe, const std::vector<FieldElement>& wanted,
                                   const std::vector<FieldElement>& exclude) const {
    for (FieldElement v = 0; v < field().order(); ++v) {
      if (in(exclude, v)) continue;
      bool ok = true;
      for (FieldElement a : probe) {
        if (host.adjacent(v, a) != in(wanted, a)) {
          ok = false;
          break;
        }
      }
      if (ok) return v;
    }
    return std::nullopt;
  }

  // y adjacent exactly to {x, alpha x} inside A.
  std::optional<FieldElement> cycle_y() const {
    return scan(a_set, {x, field().mul(alpha, x)}, a_set);
  }

  std::vector<FieldElement> full_cycle(FieldElement y) const {
    std::vector<FieldElement> out;
    for (std::uint64_t i = 0; i + 1 < sub.order(); ++i) {
      const FieldElement s = alpha_pow(i);
      out.push_back(field().mul(s, x));
      out.push_back(field().mul(s, y));
    }
    return out;
  }

  ConstructionResult finish(SimpleGraph pattern, const std::vector<FieldElement>& vertices,
                            std::vector<std::pair<std::string, FieldElement>> witnesses) const {
    ConstructionResult r;
    r.witnesses = std::move(witnesses);
    r.witnesses.insert(r.witnesses.begin(), {"x", x});
    Embedding e{EmbedMode::induced, std::move(pattern), std::vector<Vertex>(vertices.begin(), vertices.end())};
    if (!verify_embedding(e, host)) {
      r.note = "construction failed induced verification";
      return r;
    }
    r.found = true;
    r.embedding = std::move(e);
    return r;
  }
};

ConstructionResult not_found(const std::string& note) {
  ConstructionResult r;
  r.note = note;
  return r;
}

}  // namespace

ConstructionResult bipartite_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec) {
  Scaffold s(q_spec, q0_spec);
  std::vector<FieldElement> wanted(s.a_set.begin() + 1, s.a_set.end());
  auto y = s.scan(s.a_set, wanted, s.a_set);
  if (!y) return not_found("no vertex adjacent to exactly A \\ {0}");
  std::vector<FieldElement> vertices(wanted);
  for (std::size_t i = 1; i < s.scalars.size(); ++i) vertices.push_back(s.field().mul(s.scalars[i], *y));
  const int side = static_cast<int>(s.sub.order() - 1);
  return s.finish(complete_bipartite(side, side), vertices, {{"y", *y}});
}

ConstructionResult even_cycle_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec, CycleTarget target, int k) {
  Scaffold s(q_spec, q0_spec);
  const int q = static_cast<int>(s.sub.order());
  if (target == CycleTarget::short_cycle && (k < 1 || k > q - 2)) {
    throw ParameterError("short cycle C_{2k+2} needs 1 <= k <= q-2");
  }
  if (target == CycleTarget::path && (k < 1 || k >= 2 * (q - 1))) {
    throw ParameterError("path P_k needs 1 <= k < 2(q-1)");
  }
  auto y = s.cycle_y();
  if (!y) return not_found("no vertex adjacent to exactly {x, alpha x} in A");
  const auto cycle = s.full_cycle(*y);
  std::vector<std::pair<std::string, FieldElement>> witnesses = {{"alpha", s.alpha}, {"y", *y}};
  switch (target) {
    case CycleTarget::full_cycle:
      return s.finish(cycle_graph(2 * (q - 1)), cycle, witnesses);
    case CycleTarget::path:
      return s.finish(path_graph(k), std::vector<FieldElement>(cycle.begin(), cycle.begin() + k), witnesses);
    case CycleTarget::short_cycle: {
      const Field& f = s.field();
      const FieldElement one = f.scalar(1);
      const FieldElement z = f.mul(f.inv(f.sub(s.alpha, one)), f.sub(*y, s.x));
      std::vector<FieldElement> vertices(cycle.begin(), cycle.begin() + 2 * k);
      vertices.push_back(f.mul(s.alpha_pow(k), z));
      vertices.push_back(z);
      witnesses.emplace_back("z", z);
      return s.finish(cycle_graph(2 * k + 2), vertices, witnesses);
    }
  }
  throw std::logic_error("unknown cycle target");
}

ConstructionResult odd_cycle_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec, int k) {
  Scaffold s(q_spec, q0_spec);
  const int q = static_cast<int>(s.sub.order());
  if (k < 2 || k > q - 1) throw ParameterError("odd cycle C_{2k+1} needs 2 <= k <= q-1");
  auto y = s.cycle_y();
  if (!y) return not_found("no vertex adjacent to exactly {x, alpha x} in A");
  const Field& f = s.field();
  std::vector<FieldElement> a_and_b = s.a_set;
  for (std::size_t i = 1; i < s.scalars.size(); ++i) a_and_b.push_back(f.mul(s.scalars[i], *y));
  auto z = s.scan(a_and_b, {0, s.x}, a_and_b);
  if (!z) return not_found("no vertex adjacent to exactly {0, x} in A and B");
  const auto cycle = s.full_cycle(*y);
  std::vector<FieldElement> vertices(cycle.begin(), cycle.begin() + 2 * (k - 1));
  const FieldElement a = s.alpha_pow(k - 1);
  vertices.push_back(f.mul(a, s.x));
  vertices.push_back(f.mul(a, *z));
  vertices.push_back(*z);
  return s.finish(cycle_graph(2 * k + 1), vertices, {{"alpha", s.alpha}, {"y", *y}, {"z", *z}});
}

}  // namespace hchroma
