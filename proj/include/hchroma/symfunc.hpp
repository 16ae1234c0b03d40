#pragma once

#include <map>
#include <string>
#include <vector>

#include "hchroma/bigint.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/hypermulti.hpp"

namespace hchroma {

enum class Basis { m, p };

const char* to_string(Basis b);

/// Basis key: the classes of one basis element. A monomial key holds one
/// class (none for the unit); a power-sum key holds the sorted multiset of
/// connected components, since p_lambda = m_{lambda_1} ... m_{lambda_l}.
using ClassTuple = std::vector<HyperMultigraph>;

/// Sparse exact element of Sym^(k) in the monomial or power-sum basis.
/// Zero coefficients are never stored.
class SymFunc {
 public:
  SymFunc(int k, Basis basis) : k_(k), basis_(basis) {}

  static SymFunc unit(int k, Basis basis);
  /// m_lambda.
  static SymFunc monomial(const HyperMultigraph& cls);
  /// p_lambda; components are extracted from `cls`.
  static SymFunc power_sum(const HyperMultigraph& cls);

  int k() const noexcept { return k_; }
  Basis basis() const noexcept { return basis_; }
  const std::map<ClassTuple, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const ClassTuple& key) const;

  /// Adds `coeff` to the term `key`, dropping it if it cancels.
  void add(const ClassTuple& key, const BigInt& coeff);
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator*=(const BigInt& scalar);

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.k_ == b.k_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  void check_key(const ClassTuple& key) const;

  int k_;
  Basis basis_;
  std::map<ClassTuple, BigInt> terms_;
};

/// Structure constants of m_lambda * m_mu: coefficient of m_nu is the number
/// of ways to split a fixed representative multiset of nu into a sub-multiset
/// of class lambda and its complement of class mu. Memoised.
const std::map<HyperMultigraph, BigInt>& monomial_product(const HyperMultigraph& lambda,
                                                         const HyperMultigraph& mu);

SymFunc m_mul(const SymFunc& a, const SymFunc& b);
SymFunc p_to_m(const SymFunc& f);

/// Alternating sum over spanning subgraphs S of the power sums of the
/// admissible classes of G_S (component products for disconnected G_S), each
/// weighted by its number of admissible maps. |V| <= 6, |E| <= 10, k <= 3.
SymFunc theorem2_expansion(const SimpleGraph& g, int k, unsigned threads = 1);

/// First oracle: X_{K(N,k)}(G) in the monomial basis from proper
/// assignments of k-subsets. |V| <= 6, k <= 3.
SymFunc direct_m_expansion(const SimpleGraph& g, int k);

/// Second oracle: brute force over every map V(G) -> k-subsets of
/// {1..ground} sending adjacent vertices to disjoint subsets, grouped into
/// monomial classes. |V| <= 5, ground <= 10, k <= 2; exact once
/// ground >= k|V|.
SymFunc kneser_slice_expansion(const SimpleGraph& g, int k, int ground);

/// Classical chromatic symmetric function (k = 1) from stable partitions:
/// the coefficient of m_lambda is the number of stable partitions of type
/// lambda times prod r_i! (r_i = multiplicity of part size i). |V| <= 12.
SymFunc chromatic_symmetric_function(const SimpleGraph& g);

/// f(1,...,1,0,...) with n ones: sum of coeff * falling(n, |V_lambda|) /
/// |Aut(lambda)|. Power-sum input is converted first.
BigInt specialize_ones(const SymFunc& f, std::uint64_t n);

/// Equality after conversion of both sides to the monomial basis.
bool equals(const SymFunc& f, const SymFunc& g);

/// LaTeX rendering, classes written as edge lists.
std::string to_latex(const SymFunc& f);

}  // namespace hchroma
