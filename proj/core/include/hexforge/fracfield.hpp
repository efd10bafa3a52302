#pragma once

#include <string>
#include <utility>

#include "hexforge/fields.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

// Fraction field K(t) of the polynomial ring over a base field context.
// Elements are reduced fractions with monic denominator; structural equality
// is canonical equality.
template <Field K>
class RatFunc {
 public:
  struct Elem {
    Poly<K> num, den;  // den monic, gcd(num, den) = 1, den = 1 when num = 0
  };

  RatFunc(K base, std::string var) : base_(std::move(base)), var_(std::move(var)) {}

  const K& base() const { return base_; }
  const std::string& var() const { return var_; }

  Elem make(Poly<K> num, Poly<K> den) const {
    if (den.is_zero()) throw InvalidInput("zero denominator in rational function");
    return normalize(std::move(num), std::move(den));
  }
  Elem from_poly(Poly<K> num) const { return Elem{std::move(num), poly_const(base_, base_.one())}; }

  Elem zero() const { return from_poly(poly_zero(base_)); }
  Elem one() const { return from_poly(poly_const(base_, base_.one())); }
  Elem add(const Elem& a, const Elem& b) const {
    return normalize(hexforge::add(base_, mul_(a.num, b.den), mul_(b.num, a.den)), mul_(a.den, b.den));
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return normalize(hexforge::sub(base_, mul_(a.num, b.den), mul_(b.num, a.den)), mul_(a.den, b.den));
  }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(mul_(a.num, b.num), mul_(a.den, b.den)); }
  Elem neg(const Elem& a) const { return Elem{hexforge::neg(base_, a.num), a.den}; }
  Elem inv(const Elem& a) const {
    if (a.num.is_zero()) throw InvalidInput("division by zero in rational function field");
    return normalize(a.den, a.num);
  }
  Elem from_int(long n) const { return from_poly(poly_const(base_, base_.from_int(n))); }
  bool is_zero(const Elem& a) const { return a.num.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const {
    return poly_eq(base_, a.num, b.num) && poly_eq(base_, a.den, b.den);
  }
  std::string to_string(const Elem& a) const {
    if (a.den.deg() == 0) return "(" + poly_to_string(base_, a.num, var_) + ")";
    return "(" + poly_to_string(base_, a.num, var_) + ")/(" + poly_to_string(base_, a.den, var_) + ")";
  }
  std::uint64_t characteristic() const { return base_.characteristic(); }

  bool is_poly(const Elem& a) const { return a.den.deg() == 0; }

 private:
  Poly<K> mul_(const Poly<K>& a, const Poly<K>& b) const { return hexforge::mul(base_, a, b); }

  Elem normalize(Poly<K> num, Poly<K> den) const {
    if (num.is_zero()) return Elem{{}, poly_const(base_, base_.one())};
    auto g = gcd_monic(base_, num, den);
    if (g.deg() > 0) {
      num = quo_exact(base_, num, g);
      den = quo_exact(base_, den, g);
    }
    const auto ilc = base_.inv(lc(base_, den));
    return Elem{scale(base_, num, ilc), scale(base_, den, ilc)};
  }

  K base_;
  std::string var_;
};

// F_p(t), the function field used throughout the paper-facing interfaces.
using FpRatFunc = RatFunc<PrimeField>;

// Square test in K(t) for odd characteristic: a reduced fraction is a square
// iff numerator and denominator are squares in K[t] (they are coprime).
// Polynomial square roots are found by top-down coefficient recursion.
template <Field K>
bool poly_sqrt_exact(const K& k, const Poly<K>& f, Poly<K>& root,
                     bool (*leaf_sqrt)(const K&, const typename K::Elem&, typename K::Elem&)) {
  if (f.is_zero()) {
    root = {};
    return true;
  }
  if (f.deg() % 2 != 0) return false;
  typename K::Elem lead;
  if (!leaf_sqrt(k, lc(k, f), lead)) return false;
  const int h = f.deg() / 2;
  Poly<K> r;
  r.c.assign(h + 1, k.zero());
  r.c[h] = lead;
  const auto inv2l = k.inv(k.add(lead, lead));
  for (int i = h - 1; i >= 0; --i) {
    // Coefficient of x^{i+h} in r^2 must match f: 2*lead*r_i + cross terms.
    auto cross = k.zero();
    for (int j = i + 1; j <= h; ++j) {
      const int other = i + h - j;
      if (other <= h && other > i) cross = k.add(cross, k.mul(r.c[j], r.c[other]));
    }
    r.c[i] = k.mul(k.sub(coeff(k, f, i + h), cross), inv2l);
  }
  trim(k, r);
  if (!poly_eq(k, mul(k, r, r), f)) return false;
  root = r;
  return true;
}

inline bool fp_leaf_sqrt(const PrimeField& k, const std::uint64_t& a, std::uint64_t& out) {
  return k.sqrt_exact(a, out);
}

inline bool fp_ratfunc_sqrt(const FpRatFunc& kt, const FpRatFunc::Elem& a, FpRatFunc::Elem& out) {
  Poly<PrimeField> rn, rd;
  if (!poly_sqrt_exact(kt.base(), a.num, rn, &fp_leaf_sqrt)) return false;
  if (!poly_sqrt_exact(kt.base(), a.den, rd, &fp_leaf_sqrt)) return false;
  out = kt.make(rn, rd);
  return true;
}

inline bool fp_ratfunc_is_square(const FpRatFunc& kt, const FpRatFunc::Elem& a) {
  FpRatFunc::Elem w;
  return fp_ratfunc_sqrt(kt, a, w);
}

}  // namespace hexforge
