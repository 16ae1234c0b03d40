#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hchroma {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// n (n-1) ... (n-r+1); zero when r > n.
inline BigInt falling_factorial(std::uint64_t n, std::uint64_t r) {
  BigInt out = 1;
  if (r > n) return 0;
  for (std::uint64_t i = 0; i < r; ++i) out *= (n - i);
  return out;
}

inline BigInt factorial(std::uint64_t n) { return falling_factorial(n, n); }

inline BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out *= (n - r + i);
    out /= i;
  }
  return out;
}

inline BigInt pow(const BigInt& base, std::uint64_t e) {
  BigInt result = 1, b = base;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace hchroma
