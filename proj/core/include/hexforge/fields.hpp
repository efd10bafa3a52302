#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "hexforge/errors.hpp"

namespace hexforge {

// A field is a small value-type context; elements are plain data that only
// make sense relative to their context. All arithmetic is exact.
template <typename K>
concept Field = requires(const K k, const typename K::Elem a, const typename K::Elem b) {
  typename K::Elem;
  { k.zero() } -> std::same_as<typename K::Elem>;
  { k.one() } -> std::same_as<typename K::Elem>;
  { k.add(a, b) } -> std::same_as<typename K::Elem>;
  { k.sub(a, b) } -> std::same_as<typename K::Elem>;
  { k.mul(a, b) } -> std::same_as<typename K::Elem>;
  { k.neg(a) } -> std::same_as<typename K::Elem>;
  { k.inv(a) } -> std::same_as<typename K::Elem>;
  { k.from_int(long(0)) } -> std::same_as<typename K::Elem>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.eq(a, b) } -> std::same_as<bool>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.characteristic() } -> std::same_as<std::uint64_t>;
};

// ---------------------------------------------------------------------------
// Q with arbitrary-precision arithmetic. mpq_class keeps values reduced with
// positive denominator, so structural equality is canonical equality.

class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem add(const Elem& a, const Elem& b) const { return mpq_class(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return mpq_class(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return mpq_class(a * b); }
  Elem neg(const Elem& a) const { return mpq_class(-a); }
  Elem inv(const Elem& a) const {
    if (a == 0) throw InvalidInput("division by zero in Q");
    return mpq_class(1 / a);
  }
  Elem from_int(long n) const { return mpq_class(n); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::uint64_t characteristic() const { return 0; }

  static Elem parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
    q.canonicalize();
    return q;
  }

  // Exact square test with witness; fails on negatives and non-square num/den.
  static bool sqrt_exact(const Elem& a, Elem& root);
};

inline bool Rationals::sqrt_exact(const Elem& a, Elem& root) {
  if (a < 0) return false;
  const mpz_class num = a.get_num(), den = a.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn) / mpq_class(rd);
  return true;
}

// ---------------------------------------------------------------------------
// F_p for an odd prime p < 2^62. Elements are canonical residues in [0, p).

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) {
      throw InvalidInput("prime field modulus must be an odd prime");
    }
    if (p >= (std::uint64_t(1) << 62)) throw InvalidInput("prime too large");
  }

  std::uint64_t p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw InvalidInput("division by zero in F_p");
    return pow(a, p_ - 2);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem from_int(long n) const {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
  }
  Elem from_mpz(const mpz_class& n) const {
    mpz_class pz(static_cast<unsigned long>(p_)), r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    return static_cast<Elem>(mpz_get_ui(r.get_mpz_t()));
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::uint64_t characteristic() const { return p_; }

  bool is_square(Elem a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

  // Tonelli-Shanks.
  bool sqrt_exact(Elem a, Elem& root) const;

  static bool is_prime_u64(std::uint64_t n);

 private:
  std::uint64_t p_;
};

inline bool PrimeField::is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulm = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powm = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powm(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulm(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline bool PrimeField::sqrt_exact(Elem a, Elem& root) const {
  if (a == 0) {
    root = 0;
    return true;
  }
  if (!is_square(a)) return false;
  if (p_ % 4 == 3) {
    root = pow(a, (p_ + 1) / 4);
    return true;
  }
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  Elem z = 2;
  while (is_square(z)) ++z;
  Elem m = static_cast<Elem>(s), c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
  while (t != 1) {
    Elem t2 = t;
    std::uint64_t i = 0;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elem b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = static_cast<Elem>(i);
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  root = r;
  return true;
}

}  // namespace hexforge
