#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "intrep/errors.hpp"

namespace intrep {

// Exact rational arithmetic backed by GMP.
struct RationalField {
  using Element = mpq_class;
  static constexpr bool is_rational = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return Element(a + b); }
  Element sub(const Element& a, const Element& b) const { return Element(a - b); }
  Element mul(const Element& a, const Element& b) const { return Element(a * b); }
  Element div(const Element& a, const Element& b) const { return Element(a / b); }
  Element neg(const Element& a) const { return Element(-a); }
  Element inv(const Element& a) const { return Element(1 / a); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }

  std::string str(const Element& a) const {
    return a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
  }
  // Accepts "n" and "num/den".
  Element parse(const std::string& s) const {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    v.canonicalize();
    return v;
  }

  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

// The field Z/pZ for a prime p < 2^62, elements stored as residues.
struct PrimeField {
  using Element = std::uint64_t;
  static constexpr bool is_rational = false;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p >= (std::uint64_t{1} << 62) || !detail::is_prime_u64(p))
      throw ParseError("field modulus must be a prime below 2^62: " +
                       std::to_string(prime));
  }

  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  Element from_int(long v) const {
    long long r = static_cast<long long>(v % static_cast<long long>(p));
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element mul(Element a, Element b) const { return detail::mulmod(a, b, p); }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error("division by zero in prime field");
    return detail::powmod(a, p - 2, p);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool eq(Element a, Element b) const { return a == b; }

  std::string str(Element a) const { return std::to_string(a); }
  Element parse(const std::string& s) const {
    try {
      long long v = std::stoll(s);
      return from_int(v);
    } catch (const std::exception&) {
      throw ParseError("bad residue literal: " + s);
    }
  }

  std::string name() const { return "F_" + std::to_string(p); }
  bool operator==(const PrimeField&) const = default;
};

}  // namespace intrep
