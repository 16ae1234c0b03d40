#include "hchroma/galois.hpp"

#include <algorithm>

#include "hchroma/error.hpp"

namespace hchroma {

namespace {

// Polynomials over GF(p), low degree first, no trailing zeros (zero is {}).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - factor * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(out), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducible iff gcd(f, x^{p^i} - x) = 1 for 1 <= i <= d/2.
bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  Poly power = {0, 1};  // x^{p^i} mod f
  for (std::size_t i = 1; i <= d / 2; ++i) {
    Poly base = power;
    Poly acc = {1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    power = acc;
    Poly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

std::uint64_t checked_order(std::uint32_t p, int d) {
  std::uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    if (q > kMaxFieldOrder / p) throw CapacityError("field order exceeds 2^32");
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::uint64_t FieldSpec::q() const { return checked_order(p, d); }

FieldSpec make_field_spec(std::uint32_t p, int d, std::vector<std::uint32_t> modulus) {
  if (p == 2 || !is_prime(p)) throw ParameterError("field characteristic must be an odd prime");
  if (d < 1) throw ParameterError("extension degree must be at least 1");
  checked_order(p, d);
  if (modulus.size() != static_cast<std::size_t>(d) + 1 || modulus.back() != 1) {
    throw ParameterError("modulus must be monic of degree d");
  }
  Poly f(modulus.begin(), modulus.end());
  for (auto c : f)
    if (c >= p) throw ParameterError("modulus coefficient out of range");
  if (!irreducible(f, p)) throw ParameterError("modulus is reducible");
  return FieldSpec{p, d, std::move(modulus)};
}

FieldSpec find_irreducible(std::uint32_t p, int d) {
  if (p == 2 || !is_prime(p)) throw ParameterError("field characteristic must be an odd prime");
  if (d < 1) throw ParameterError("extension degree must be at least 1");
  const std::uint64_t count = checked_order(p, d);
  // Lexicographic on (c_0, ..., c_{d-1}): c_0 is the most significant digit.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(d + 1, 0);
    std::uint64_t rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[d] = 1;
    if (irreducible(f, p)) return FieldSpec{p, d, std::vector<std::uint32_t>(f.begin(), f.end())};
  }
  throw std::logic_error("no irreducible polynomial found");
}

nlohmann::json to_json(const FieldSpec& spec) {
  return {{"p", spec.p}, {"d", spec.d}, {"modulus", spec.modulus}};
}

// ------------------------------------------------------------------ Field

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()), place_(spec_.d) {
  std::uint64_t v = 1;
  for (int i = spec_.d - 1; i >= 0; --i) {
    place_[i] = v;
    v *= spec_.p;
  }
}

std::vector<std::uint32_t> Field::coeffs(FieldElement e) const {
  std::vector<std::uint32_t> c(spec_.d);
  for (int i = spec_.d - 1; i >= 0; --i) {
    c[i] = static_cast<std::uint32_t>(e % spec_.p);
    e /= spec_.p;
  }
  return c;
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  FieldElement e = 0;
  for (int i = 0; i < spec_.d; ++i) {
    const std::uint32_t ci = i < static_cast<int>(c.size()) ? c[i] % spec_.p : 0;
    e += ci * place_[i];
  }
  return e;
}

FieldElement Field::scalar(std::uint32_t c) const { return (c % spec_.p) * place_[0]; }

FieldElement Field::add(FieldElement a, FieldElement b) const {
  const std::uint64_t p = spec_.p;
  FieldElement out = 0, unit = 1;
  for (int i = 0; i < spec_.d; ++i) {
    out += ((a % p + b % p) % p) * unit;
    a /= p;
    b /= p;
    unit *= p;
  }
  return out;
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  const std::uint64_t p = spec_.p;
  FieldElement out = 0, unit = 1;
  for (int i = 0; i < spec_.d; ++i) {
    out += ((a % p + p - b % p) % p) * unit;
    a /= p;
    b /= p;
    unit *= p;
  }
  return out;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  Poly pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
  trim(pa);
  trim(pb);
  Poly m(spec_.modulus.begin(), spec_.modulus.end());
  Poly r = poly_mulmod(pa, pb, m, spec_.p);
  return from_coeffs(std::vector<std::uint32_t>(r.begin(), r.end()));
}

FieldElement Field::inv(FieldElement a) const {
  if (a == 0) throw DomainError("inverse of zero");
  // Extended Euclid on (a, modulus).
  const std::uint64_t p = spec_.p;
  const auto ca = coeffs(a);
  Poly r0(spec_.modulus.begin(), spec_.modulus.end()), r1(ca.begin(), ca.end());
  trim(r1);
  Poly s0 = {}, s1 = {1};
  while (r1.size() > 1) {
    // Quotient of r0 by r1.
    Poly rem = r0, quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    const std::uint64_t lead_inv = inv_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::uint64_t factor = rem.back() * lead_inv % p;
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + p - factor * r1[i] % p) % p;
      trim(rem);
    }
    // s2 = s0 - quot * s1.
    Poly prod(quot.size() + s1.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] = (prod[i + j] + quot[i] * s1[j]) % p;
    Poly s2(std::max(s0.size(), prod.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const std::uint64_t x = i < s0.size() ? s0[i] : 0, y = i < prod.size() ? prod[i] : 0;
      s2[i] = (x + p - y) % p;
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c; the inverse is s1 / c.
  const std::uint64_t c_inv = inv_mod(r1[0], p);
  for (auto& c : s1) c = c * c_inv % p;
  return from_coeffs(std::vector<std::uint32_t>(s1.begin(), s1.end()));
}

FieldElement Field::pow(FieldElement a, std::uint64_t n) const {
  FieldElement result = scalar(1), base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

bool Field::is_square(FieldElement a) const {
  if (a == 0) throw DomainError("zero is neither a square nor a non-square");
  return pow(a, (q_ - 1) / 2) == scalar(1);
}

FieldElement Field::primitive_element() const {
  std::vector<std::uint64_t> primes;
  std::uint64_t n = q_ - 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      primes.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) primes.push_back(n);
  for (FieldElement g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint64_t r : primes) {
      if (pow(g, (q_ - 1) / r) == scalar(1)) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive element");
}

nlohmann::json Field::to_json(FieldElement e) const { return coeffs(e); }

// -------------------------------------------------------------- PaleyHost

PaleyHost::PaleyHost(FieldSpec spec) : field_(std::move(spec)) {
  const std::uint64_t q = field_.order();
  if (q % 4 != 1) throw ParameterError("Paley graph requires q = 1 mod 4");
  if (q > kMaxScanOrder) throw CapacityError("Paley host order exceeds 10^6");
  square_.assign(q, 0);
  for (FieldElement x = 1; x < q; ++x) square_[field_.mul(x, x)] = 1;
  for (FieldElement x = 1; x < q; ++x)
    if (square_[x]) squares_.push_back(x);
}

std::vector<Vertex> PaleyHost::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  out.reserve(squares_.size());
  for (FieldElement s : squares_) out.push_back(field_.add(u, s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string PaleyHost::describe() const {
  return "paley:" + std::to_string(field_.characteristic()) + ":" + std::to_string(field_.degree());
}

// ----------------------------------------------------- SubfieldEmbedding

SubfieldEmbedding::SubfieldEmbedding(const Field& sub, const Field& super) {
  if (sub.characteristic() != super.characteristic()) throw ParameterError("fields of different characteristic");
  if (super.degree() % sub.degree() != 0) throw ParameterError("subfield degree must divide the field degree");
  const auto& m = sub.spec().modulus;
  auto eval = [&](const std::vector<std::uint32_t>& poly, FieldElement r) {
    FieldElement acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = super.add(super.mul(acc, r), super.scalar(*it));
    return acc;
  };
  std::optional<FieldElement> root;
  for (FieldElement r = 0; r < super.order(); ++r) {
    if (eval(m, r) == 0) {
      root = r;
      break;
    }
  }
  if (!root) throw std::logic_error("subfield modulus has no root in the extension");
  image_.resize(sub.order());
  for (FieldElement e = 0; e < sub.order(); ++e) image_[e] = eval(sub.coeffs(e), *root);
}

}  // namespace hchroma
