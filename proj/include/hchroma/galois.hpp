#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hchroma/bigint.hpp"
#include "hchroma/embedding.hpp"
#include "hchroma/host.hpp"

namespace hchroma {

/// GF(p^d) given by a monic irreducible modulus (coefficients low degree
/// first, modulus.size() == d + 1).
struct FieldSpec {
  std::uint32_t p = 0;
  int d = 0;
  std::vector<std::uint32_t> modulus;

  std::uint64_t q() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Lexicographically smallest monic irreducible of degree d over GF(p),
/// coefficients compared low degree first. p an odd prime, d >= 1.
FieldSpec find_irreducible(std::uint32_t p, int d);
/// Validates p, d and irreducibility of `modulus`; throws ParameterError.
FieldSpec make_field_spec(std::uint32_t p, int d, std::vector<std::uint32_t> modulus);
bool is_prime(std::uint64_t n);

/// Elements are integers 0..q-1: the element with coefficients
/// (c_0, ..., c_{d-1}) (low degree first) is c_0 p^{d-1} + ... + c_{d-1}.
/// Integer order is therefore lexicographic on coefficients, low degree
/// first. 0 is the zero; the one is scalar(1) = p^{d-1}.
using FieldElement = std::uint64_t;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxScanOrder = 1'000'000;

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  int degree() const noexcept { return spec_.d; }

  std::vector<std::uint32_t> coeffs(FieldElement e) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const;
  /// The prime-field element c (0 <= c < p).
  FieldElement scalar(std::uint32_t c) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const { return sub(0, a); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t n) const;
  /// Euler's criterion. Zero is neither a square nor a non-square and throws
  /// DomainError.
  bool is_square(FieldElement a) const;
  /// Smallest element of multiplicative order q - 1.
  FieldElement primitive_element() const;

  nlohmann::json to_json(FieldElement e) const;

 private:
  FieldSpec spec_;
  std::uint64_t q_;
  // Place value of coefficient i (p^{d-1-i}).
  std::vector<std::uint64_t> place_;
};

nlohmann::json to_json(const FieldSpec& spec);

/// P(q): vertices are field elements, adjacent when the difference is a
/// nonzero square. Requires q = 1 mod 4 and q <= 10^6.
class PaleyHost final : public HostGraph {
 public:
  explicit PaleyHost(FieldSpec spec);

  std::uint64_t order() const override { return field_.order(); }
  bool adjacent(Vertex u, Vertex v) const override { return square_[field_.sub(u, v)] != 0; }
  std::vector<Vertex> neighbors(Vertex u) const override;
  std::uint64_t degree(Vertex) const override { return squares_.size(); }
  nlohmann::json vertex_json(Vertex u) const override { return field_.to_json(u); }
  std::string describe() const override;

  const Field& field() const noexcept { return field_; }
  /// Nonzero squares in increasing order.
  const std::vector<FieldElement>& squares() const noexcept { return squares_; }

 private:
  Field field_;
  std::vector<std::uint8_t> square_;
  std::vector<FieldElement> squares_;
};

/// Field embedding GF(p^a) -> GF(p^b), a | b: the generator goes to the
/// smallest root of the subfield modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const Field& sub, const Field& super);
  FieldElement operator()(FieldElement e) const { return image_[e]; }
  const std::vector<FieldElement>& images() const noexcept { return image_; }

 private:
  std::vector<FieldElement> image_;
};

/// Outcome of a constructive embedding search in P(q0). `embedding` is set
/// only when found, and is always verified exhaustively before it is returned.
struct ConstructionResult {
  bool found = false;
  std::optional<Embedding> embedding;
  /// Named elements used by the construction (x, y, z, alpha), for reports.
  std::vector<std::pair<std::string, FieldElement>> witnesses;
  std::string note;
};

enum class CycleTarget { full_cycle, short_cycle, path };

/// K_{q-1,q-1} induced in P(q0) for GF(q) a subfield of GF(q0) with
/// q0 / q an even-degree extension.
ConstructionResult bipartite_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec);
/// full_cycle: C_{2(q-1)}; short_cycle: C_{2k+2} with 1 <= k <= q-2;
/// path: P_k with 1 <= k < 2(q-1).
ConstructionResult even_cycle_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec, CycleTarget target,
                                    int k = 0);
/// C_{2k+1} for 2 <= k <= q-1.
ConstructionResult odd_cycle_embed(const FieldSpec& q_spec, const FieldSpec& q0_spec, int k);

// --------------------------------------------------------------- bounds

/// Smallest integer t (possibly negative) with q^{3^t} >= x, by exact
/// integer powers. Requires q >= 2 and x >= 2.
BigInt ceil_log3_log(const BigInt& q, const BigInt& x);

/// ceil(log_3 log_q((k-1) 2^{k-2})): the induced-universality bound.
BigInt bound_thm52(std::uint64_t q, std::uint64_t k);
/// ((q-3) binom(q-1, (q-1)/2) + 3)^2.
BigInt bound_lemma54(std::uint64_t q);
/// (2^q (q-2) binom(q-1, (q-1)/2) + 3)^2.
BigInt bound_lemma58(std::uint64_t q);
/// ceil(log_3 log_q k): the complete-subgraph bound on the subgraph index.
BigInt bound_upper_bs(std::uint64_t q, std::uint64_t k);
/// Smallest n >= 0 with (q^2)^{3^n} >= k.
std::uint64_t paley_cycle_level(std::uint64_t q, std::uint64_t k);

}  // namespace hchroma
