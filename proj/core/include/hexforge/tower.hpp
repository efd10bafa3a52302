#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hexforge/fields.hpp"
#include "hexforge/fracfield.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

using QPoly = Poly<Rationals>;

// Number-field tower over Q: first floor Q[x]/(m) with m monic irreducible of
// degree <= 6, optional second floor adjoining y with y^2 = d for a first-floor
// element d that is not a square there. Elements are re + im*y with re, im
// reduced mod m. Deeper towers are rejected.
//
// Irreducibility of m is a caller-checked precondition (factor_over_Q); the
// constructor validates shape only.
class TowerField {
 public:
  struct Elem {
    QPoly re, im;
  };

  explicit TowerField(QPoly m) : m_(std::move(m)) { validate(); }
  TowerField(QPoly m, QPoly d) : m_(std::move(m)), d_(std::move(d)) {
    validate();
    if (d_->deg() >= m_.deg()) d_ = rem(q_, *d_, m_);
    if (d_->is_zero()) throw InvalidInput("square-root floor over zero");
  }

  const QPoly& modulus() const { return m_; }
  bool has_sqrt_floor() const { return d_.has_value(); }
  const QPoly& sqrt_of() const {
    if (!d_) throw InternalError("tower has no square-root floor");
    return *d_;
  }
  int degree_over_Q() const { return m_.deg() * (d_ ? 2 : 1); }

  Elem zero() const { return {{}, {}}; }
  Elem one() const { return {poly_const(q_, mpq_class(1)), {}}; }
  Elem from_int(long n) const { return {poly_const(q_, mpq_class(n)), {}}; }
  Elem from_base(QPoly f) const { return {rem(q_, f, m_), {}}; }
  Elem from_rational(const mpq_class& a) const { return {poly_const(q_, a), {}}; }
  // The class of x (the first-floor generator).
  Elem gen() const { return from_base(poly_x(q_)); }
  // The class of y when the second floor exists.
  Elem sqrt_gen() const {
    if (!d_) throw InternalError("tower has no square-root floor");
    return {{}, poly_const(q_, mpq_class(1))};
  }

  Elem add(const Elem& a, const Elem& b) const {
    return {hexforge::add(q_, a.re, b.re), hexforge::add(q_, a.im, b.im)};
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return {hexforge::sub(q_, a.re, b.re), hexforge::sub(q_, a.im, b.im)};
  }
  Elem neg(const Elem& a) const { return {hexforge::neg(q_, a.re), hexforge::neg(q_, a.im)}; }
  Elem mul(const Elem& a, const Elem& b) const {
    // (a.re + a.im y)(b.re + b.im y) = re*re + d*im*im + (re*im + im*re) y
    QPoly re = mul_mod(a.re, b.re);
    QPoly im;
    if (d_) {
      re = hexforge::add(q_, re, mul_mod(mul_mod(a.im, b.im), *d_));
      im = hexforge::add(q_, mul_mod(a.re, b.im), mul_mod(a.im, b.re));
    } else if (!a.im.is_zero() || !b.im.is_zero()) {
      throw InternalError("imaginary part in a tower without square-root floor");
    }
    return {re, im};
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw InvalidInput("division by zero in tower field");
    if (!d_ || a.im.is_zero()) {
      if (!a.im.is_zero()) throw InternalError("imaginary part in a tower without square-root floor");
      return {inv_mod(a.re), {}};
    }
    // (re - im y) / (re^2 - d im^2); the norm is nonzero because d is a
    // non-square on the first floor.
    QPoly n = hexforge::sub(q_, mul_mod(a.re, a.re), mul_mod(mul_mod(a.im, a.im), *d_));
    if (n.is_zero()) throw InternalError("vanishing relative norm: square-root floor is degenerate");
    QPoly in = inv_mod(n);
    return {mul_mod(a.re, in), hexforge::neg(q_, mul_mod(a.im, in))};
  }
  bool is_zero(const Elem& a) const { return a.re.is_zero() && a.im.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const {
    return poly_eq(q_, a.re, b.re) && poly_eq(q_, a.im, b.im);
  }
  std::string to_string(const Elem& a) const {
    std::string s = "(" + poly_to_string(q_, a.re, "x") + ")";
    if (!a.im.is_zero()) s += " + (" + poly_to_string(q_, a.im, "x") + ")*y";
    return s;
  }
  std::uint64_t characteristic() const { return 0; }

  // Characteristic polynomial over Q of multiplication by a first-floor
  // element, via Res_x(m(x), T - z(x)).
  QPoly charpoly_first_floor(const QPoly& z) const;

 private:
  void validate() const {
    if (m_.deg() < 1 || m_.deg() > 6) {
      throw UnsupportedTower("first floor degree must be between 1 and 6");
    }
    if (lc(q_, m_) != 1) throw InvalidInput("tower modulus must be monic");
  }
  QPoly mul_mod(const QPoly& a, const QPoly& b) const { return rem(q_, hexforge::mul(q_, a, b), m_); }
  QPoly inv_mod(const QPoly& a) const {
    auto [g, u, v] = xgcd(q_, a, m_);
    if (g.deg() != 0) throw InternalError("non-invertible element: tower modulus is reducible");
    return rem(q_, u, m_);
  }

  Rationals q_;
  QPoly m_;
  std::optional<QPoly> d_;
};

inline QPoly TowerField::charpoly_first_floor(const QPoly& z) const {
  Rationals q;
  RatFunc<Rationals> qt(q, "T");
  using E = RatFunc<Rationals>::Elem;
  Poly<RatFunc<Rationals>> mm, g;
  mm.c.reserve(m_.c.size());
  for (const auto& a : m_.c) mm.c.push_back(qt.from_poly(poly_const(q, a)));
  trim(qt, mm);
  // g = T - z(x) as a polynomial in x over Q(T)
  g.c.assign(std::max<std::size_t>(z.c.size(), 1), qt.zero());
  for (std::size_t i = 0; i < z.c.size(); ++i) g.c[i] = qt.from_poly(poly_const(q, -z.c[i]));
  g.c[0] = qt.add(g.c[0], qt.from_poly(poly_x(q)));
  trim(qt, g);
  E res = resultant(qt, mm, g);
  if (!qt.is_poly(res)) throw InternalError("characteristic polynomial resultant is not polynomial");
  return monic(q, res.num);
}

// Full characteristic polynomial over Q of a tower element (degree 2n when the
// square-root floor is present): first the relative charpoly over the first
// floor, then Res_x(m, .).
QPoly tower_charpoly(const TowerField& L, const TowerField::Elem& z);

// Roots of Y^2 - z in the tower: Trager-style. Returns a witness w with
// w^2 = z if one exists. Requires factor_over_Q (linked from factor.cpp).
std::optional<TowerField::Elem> tower_sqrt(const TowerField& L, const TowerField::Elem& z);

inline bool tower_is_square(const TowerField& L, const TowerField::Elem& z) {
  return tower_sqrt(L, z).has_value();
}

}  // namespace hexforge
