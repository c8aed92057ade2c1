#ifndef GENTLE_FIELD_HPP
#define GENTLE_FIELD_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "gentle/error.hpp"

namespace gentle {

// Prime field with a runtime modulus. Elements are canonical residues.
struct Fq {
  using Elem = uint32_t;

  uint32_t p = 3;

  Fq() = default;
  explicit Fq(uint32_t prime) : p(prime) {
    if (prime < 2 || !is_prime(prime)) fail(Err::Semantic, "modulus must be a prime >= 2");
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return uint32_t((uint64_t(a) * b) % p); }
  Elem inv(Elem a) const {
    if (a == 0) fail(Err::Semantic, "division by zero in F_p");
    // Fermat: a^(p-2)
    uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    return Elem(r);
  }
  Elem from_int(int64_t v) const {
    int64_t r = v % int64_t(p);
    if (r < 0) r += p;
    return Elem(r);
  }
  std::string to_string(Elem a) const { return std::to_string(a); }
  bool operator==(const Fq& o) const { return p == o.p; }
};

// Exact rational with 64-bit numerator/denominator, normalized, den > 0.
struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}
  Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(Err::Semantic, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

struct Rationals {
  using Elem = Rat;

  static int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(Err::Internal, "rational overflow");
    return int64_t(v);
  }
  static Rat make(__int128 n, __int128 d) {
    if (d == 0) fail(Err::Semantic, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = checked(n);
    r.den = checked(d);
    return r;
  }

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  bool is_zero(Rat a) const { return a.num == 0; }
  Rat add(Rat a, Rat b) const {
    return make(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  Rat sub(Rat a, Rat b) const {
    return make(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  Rat neg(Rat a) const { return Rat(-a.num, a.den); }
  Rat mul(Rat a, Rat b) const { return make(__int128(a.num) * b.num, __int128(a.den) * b.den); }
  Rat inv(Rat a) const {
    if (a.num == 0) fail(Err::Semantic, "division by zero");
    return make(a.den, a.num);
  }
  Rat from_int(int64_t v) const { return Rat(v); }
  std::string to_string(Rat a) const {
    return a.den == 1 ? std::to_string(a.num) : std::to_string(a.num) + "/" + std::to_string(a.den);
  }
  bool operator==(const Rationals&) const { return true; }
};

}  // namespace gentle

#endif
