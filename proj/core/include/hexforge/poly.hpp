#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexforge/errors.hpp"
#include "hexforge/fields.hpp"

namespace hexforge {

// Dense univariate polynomial over a field context K. Invariant: either the
// coefficient vector is empty (the zero polynomial) or its last entry is a
// nonzero element of K. Degree of the zero polynomial is -1.
template <Field K>
struct Poly {
  std::vector<typename K::Elem> c;  // c[i] multiplies x^i

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <Field K>
void trim(const K& k, Poly<K>& f) {
  while (!f.c.empty() && k.is_zero(f.c.back())) f.c.pop_back();
}

template <Field K>
Poly<K> poly_zero(const K&) {
  return {};
}

template <Field K>
Poly<K> poly_const(const K& k, typename K::Elem a) {
  Poly<K> f;
  if (!k.is_zero(a)) f.c.push_back(std::move(a));
  return f;
}

template <Field K>
Poly<K> poly_x(const K& k) {
  Poly<K> f;
  f.c = {k.zero(), k.one()};
  return f;
}

template <Field K>
Poly<K> poly_from(const K& k, std::vector<typename K::Elem> coeffs) {
  Poly<K> f;
  f.c = std::move(coeffs);
  trim(k, f);
  return f;
}

template <Field K>
typename K::Elem coeff(const K& k, const Poly<K>& f, int i) {
  if (i < 0 || i >= static_cast<int>(f.c.size())) return k.zero();
  return f.c[i];
}

template <Field K>
typename K::Elem lc(const K& k, const Poly<K>& f) {
  if (f.is_zero()) throw InternalError("leading coefficient of zero polynomial");
  return f.c.back();
}

template <Field K>
bool poly_eq(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.c.size() != g.c.size()) return false;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (!k.eq(f.c[i], g.c[i])) return false;
  }
  return true;
}

template <Field K>
Poly<K> add(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r;
  r.c.resize(std::max(f.c.size(), g.c.size()), k.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.add(coeff(k, f, int(i)), coeff(k, g, int(i)));
  trim(k, r);
  return r;
}

template <Field K>
Poly<K> sub(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r;
  r.c.resize(std::max(f.c.size(), g.c.size()), k.zero());
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = k.sub(coeff(k, f, int(i)), coeff(k, g, int(i)));
  trim(k, r);
  return r;
}

template <Field K>
Poly<K> neg(const K& k, const Poly<K>& f) {
  Poly<K> r = f;
  for (auto& a : r.c) a = k.neg(a);
  return r;
}

template <Field K>
Poly<K> mul(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  Poly<K> r;
  r.c.assign(f.c.size() + g.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (k.is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      r.c[i + j] = k.add(r.c[i + j], k.mul(f.c[i], g.c[j]));
    }
  }
  trim(k, r);
  return r;
}

template <Field K>
Poly<K> scale(const K& k, const Poly<K>& f, const typename K::Elem& a) {
  if (k.is_zero(a)) return {};
  Poly<K> r = f;
  for (auto& x : r.c) x = k.mul(x, a);
  trim(k, r);
  return r;
}

// f = q*g + r with deg r < deg g. Requires g != 0.
template <Field K>
std::pair<Poly<K>, Poly<K>> divrem(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw InvalidInput("polynomial division by zero");
  Poly<K> q, r = f;
  if (f.deg() < g.deg()) return {q, r};
  q.c.assign(f.deg() - g.deg() + 1, k.zero());
  const auto ilc = k.inv(lc(k, g));
  while (!r.is_zero() && r.deg() >= g.deg()) {
    const int d = r.deg() - g.deg();
    const auto t = k.mul(lc(k, r), ilc);
    q.c[d] = k.add(q.c[d], t);
    for (int i = 0; i <= g.deg(); ++i) {
      r.c[i + d] = k.sub(r.c[i + d], k.mul(t, g.c[i]));
    }
    trim(k, r);
  }
  trim(k, q);
  return {q, r};
}

template <Field K>
Poly<K> rem(const K& k, const Poly<K>& f, const Poly<K>& g) {
  return divrem(k, f, g).second;
}

template <Field K>
Poly<K> quo_exact(const K& k, const Poly<K>& f, const Poly<K>& g) {
  auto [q, r] = divrem(k, f, g);
  if (!r.is_zero()) throw InternalError("exact polynomial division left a remainder");
  return q;
}

template <Field K>
Poly<K> monic(const K& k, const Poly<K>& f) {
  if (f.is_zero()) return f;
  return scale(k, f, k.inv(lc(k, f)));
}

template <Field K>
Poly<K> gcd_monic(const K& k, Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <Field K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> xgcd(const K& k, Poly<K> a, Poly<K> b) {
  Poly<K> u0 = poly_const(k, k.one()), v0 = poly_zero(k);
  Poly<K> u1 = poly_zero(k), v1 = poly_const(k, k.one());
  while (!b.is_zero()) {
    auto [q, r] = divrem(k, a, b);
    a = std::move(b);
    b = std::move(r);
    Poly<K> u2 = sub(k, u0, mul(k, q, u1));
    Poly<K> v2 = sub(k, v0, mul(k, q, v1));
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (a.is_zero()) return {a, u0, v0};
  const auto s = k.inv(lc(k, a));
  return {scale(k, a, s), scale(k, u0, s), scale(k, v0, s)};
}

template <Field K>
Poly<K> derivative(const K& k, const Poly<K>& f) {
  Poly<K> r;
  if (f.deg() < 1) return r;
  r.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) {
    r.c[i - 1] = k.mul(f.c[i], k.from_int(static_cast<long>(i)));
  }
  trim(k, r);
  return r;
}

template <Field K>
typename K::Elem eval(const K& k, const Poly<K>& f, const typename K::Elem& x) {
  auto r = k.zero();
  for (int i = f.deg(); i >= 0; --i) r = k.add(k.mul(r, x), f.c[i]);
  return r;
}

// f(g(x)) by Horner over the polynomial ring.
template <Field K>
Poly<K> compose(const K& k, const Poly<K>& f, const Poly<K>& g) {
  Poly<K> r;
  for (int i = f.deg(); i >= 0; --i) {
    r = mul(k, r, g);
    r = add(k, r, poly_const(k, f.c[i]));
  }
  return r;
}

// f(x^2); cheaper than compose.
template <Field K>
Poly<K> substitute_square(const K& k, const Poly<K>& f) {
  Poly<K> r;
  if (f.is_zero()) return r;
  r.c.assign(2 * f.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) r.c[2 * i] = f.c[i];
  trim(k, r);
  return r;
}

template <Field K>
Poly<K> pow_mod(const K& k, Poly<K> base, mpz_class e, const Poly<K>& m) {
  Poly<K> r = poly_const(k, k.one());
  base = rem(k, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = rem(k, mul(k, r, base), m);
    base = rem(k, mul(k, base, base), m);
    e >>= 1;
  }
  return r;
}

// Res(f, g) under the convention Res(f,g) = lc(f)^{deg g} * prod g(alpha_i)
// over the roots of f, computed by the Euclidean remainder recursion:
//   Res(f, g) = lc(f)^{deg g - deg r} * (-1)^{deg f * deg g} * Res(g -> ...)
// in the standard reciprocity form. Zero iff gcd(f, g) is nonconstant.
template <Field K>
typename K::Elem resultant(const K& k, Poly<K> f, Poly<K> g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) {
    // Empty product convention when the other side is a nonzero constant.
    const Poly<K>& other = f.is_zero() ? g : f;
    return other.deg() >= 1 ? k.zero() : k.one();
  }
  auto res = k.one();
  bool negate = false;
  while (true) {
    if (g.deg() == 0) {
      // Res(f, const c) = c^{deg f}.
      auto c = g.c[0];
      auto acc = k.one();
      for (int i = 0; i < f.deg(); ++i) acc = k.mul(acc, c);
      res = k.mul(res, acc);
      break;
    }
    if (f.deg() == 0) {
      auto c = f.c[0];
      auto acc = k.one();
      for (int i = 0; i < g.deg(); ++i) acc = k.mul(acc, c);
      res = k.mul(res, acc);
      break;
    }
    if (f.deg() < g.deg()) {
      if ((f.deg() & 1) && (g.deg() & 1)) negate = !negate;
      std::swap(f, g);
      continue;
    }
    // deg f >= deg g >= 1: Res(f,g) = (-1)^{mf mg} Res(g,f),
    // Res(g, f) = lc(g)^{deg f - deg r} Res(g, r) with r = f mod g.
    auto r = rem(k, f, g);
    if (r.is_zero()) return k.zero();
    if ((f.deg() & 1) && (g.deg() & 1)) negate = !negate;
    auto l = lc(k, g);
    auto acc = k.one();
    for (int i = 0; i < f.deg() - r.deg(); ++i) acc = k.mul(acc, l);
    res = k.mul(res, acc);
    f = std::move(g);
    g = std::move(r);
  }
  return negate ? k.neg(res) : res;
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <Field K>
typename K::Elem discriminant(const K& k, const Poly<K>& f) {
  const int n = f.deg();
  if (n < 1) throw InvalidInput("discriminant requires degree >= 1");
  auto df = derivative(k, f);
  typename K::Elem r = df.is_zero() ? k.zero() : resultant(k, f, df);
  r = k.mul(r, k.inv(lc(k, f)));
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) r = k.neg(r);
  return r;
}

template <Field K>
bool is_separable(const K& k, const Poly<K>& f) {
  if (f.deg() < 1) return true;
  auto df = derivative(k, f);
  if (df.is_zero()) return false;
  return gcd_monic(k, f, df).deg() == 0;
}

// Repeated-factor reducer (monic). Exact radical in characteristic zero and
// over prime fields; over imperfect fields it only shrinks multiplicities,
// which is all its callers (modulus reduction) rely on.
template <Field K>
Poly<K> squarefree_part(const K& k, const Poly<K>& f) {
  if (f.deg() < 1) return monic(k, f);
  auto df = derivative(k, f);
  if (df.is_zero()) {
    const std::uint64_t p = k.characteristic();
    if (p == 0) throw InternalError("zero derivative in characteristic 0");
    // f = g(x^p); over F_p this equals g(x)^p, so reduce g.
    Poly<K> g;
    g.c.assign(f.c.size() / static_cast<std::size_t>(p) + 1, k.zero());
    for (std::size_t i = 0; i * p < f.c.size(); ++i) g.c[i] = f.c[i * p];
    trim(k, g);
    return squarefree_part(k, g);
  }
  return monic(k, quo_exact(k, f, gcd_monic(k, f, df)));
}

template <Field K>
std::string poly_to_string(const K& k, const Poly<K>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.deg(); i >= 0; --i) {
    if (k.is_zero(f.c[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + k.to_string(f.c[i]) + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace hexforge
