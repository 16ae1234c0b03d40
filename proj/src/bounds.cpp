#include "hchroma/error.hpp"
#include "hchroma/galois.hpp"

namespace hchroma {

namespace {

BigInt cube(const BigInt& v) { return v * v * v; }

BigInt central_binomial_term(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw ParameterError("q must be an odd integer >= 3");
  return binomial(q - 1, (q - 1) / 2);
}

}  // namespace

BigInt ceil_log3_log(const BigInt& q, const BigInt& x) {
  if (q < 2 || x < 2) throw ParameterError("ceil_log3_log needs q >= 2 and x >= 2");
  if (x <= q) {
    // t = -s for the largest s with x^{3^s} <= q.
    long s = 0;
    BigInt power = cube(x);
    while (power <= q) {
      ++s;
      power = cube(power);
    }
    return BigInt(-s);
  }
  long t = 0;
  BigInt power = q;
  while (power < x) {
    ++t;
    power = cube(power);
  }
  return BigInt(t);
}

BigInt bound_thm52(std::uint64_t q, std::uint64_t k) {
  if (k <= 2) throw ParameterError("bound needs k >= 3 ((k-1) 2^{k-2} > 1)");
  const BigInt x = BigInt(k - 1) * pow(BigInt(2), k - 2);
  return ceil_log3_log(q, x);
}

BigInt bound_lemma54(std::uint64_t q) {
  const BigInt inner = BigInt(q - 3) * central_binomial_term(q) + 3;
  return inner * inner;
}

BigInt bound_lemma58(std::uint64_t q) {
  const BigInt inner = pow(BigInt(2), q) * BigInt(q - 2) * central_binomial_term(q) + 3;
  return inner * inner;
}

BigInt bound_upper_bs(std::uint64_t q, std::uint64_t k) {
  if (k <= 1) throw ParameterError("bound needs k >= 2");
  return ceil_log3_log(q, k);
}

std::uint64_t paley_cycle_level(std::uint64_t q, std::uint64_t k) {
  if (q < 2) throw ParameterError("q must be at least 2");
  std::uint64_t n = 0;
  BigInt power = BigInt(q) * q;
  while (power < k) {
    ++n;
    power = cube(power);
  }
  return n;
}

}  // namespace hchroma
