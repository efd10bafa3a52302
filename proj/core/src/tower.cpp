#include "hexforge/tower.hpp"

#include "hexforge/factor.hpp"

namespace hexforge {

namespace {

// Res_x(m(x), g(x)) for g with coefficients in Q[T], returned as an element of
// Q[T]. Realized over the fraction field Q(T).
QPoly resultant_in_T(const QPoly& m, const std::vector<QPoly>& g_coeffs_in_T) {
  Rationals q;
  RatFunc<Rationals> qt(q, "T");
  Poly<RatFunc<Rationals>> mm, g;
  for (const auto& a : m.c) mm.c.push_back(qt.from_poly(poly_const(q, a)));
  trim(qt, mm);
  for (const auto& cT : g_coeffs_in_T) g.c.push_back(qt.from_poly(cT));
  trim(qt, g);
  auto res = resultant(qt, mm, g);
  if (!qt.is_poly(res)) throw InternalError("resultant over Q(T) has a denominator");
  return res.num;
}

}  // namespace

QPoly tower_charpoly(const TowerField& L, const TowerField::Elem& z) {
  Rationals q;
  if (!L.has_sqrt_floor()) {
    if (!z.im.is_zero()) throw InternalError("imaginary part without square-root floor");
    return L.charpoly_first_floor(z.re);
  }
  // Relative characteristic polynomial over the first floor:
  //   T^2 - (2 re) T + (re^2 - d im^2),
  // then eliminate x with the modulus. Coefficients are polynomials in x; we
  // assemble the bivariate polynomial in x whose coefficients live in Q[T].
  const QPoly& m = L.modulus();
  QPoly tr = scale(q, z.re, mpq_class(2));
  QPoly nm = sub(q, rem(q, mul(q, z.re, z.re), m), rem(q, mul(q, mul(q, z.im, z.im), L.sqrt_of()), m));
  // As a polynomial in x: sum_j (nm_j - tr_j T + [j = 0] T^2) x^j.
  const int dx = std::max({tr.deg(), nm.deg(), 0});
  std::vector<QPoly> coeffs(static_cast<std::size_t>(dx) + 1);
  for (int j = 0; j <= dx; ++j) {
    std::vector<mpq_class> cj = {coeff(q, nm, j), -coeff(q, tr, j)};
    if (j == 0) {
      cj.push_back(mpq_class(1));
    }
    coeffs[static_cast<std::size_t>(j)] = poly_from(q, std::move(cj));
  }
  return monic(q, resultant_in_T(m, coeffs));
}

std::optional<TowerField::Elem> tower_sqrt(const TowerField& L, const TowerField::Elem& z) {
  if (L.has_sqrt_floor()) {
    throw UnsupportedTower("square roots are computed on the first floor only");
  }
  Rationals q;
  if (z.re.is_zero()) return L.zero();
  const QPoly& m = L.modulus();
  if (m.deg() == 1) {
    // First floor is Q itself.
    mpq_class v = eval(q, z.re, -m.c[0]);
    mpq_class r;
    if (!Rationals::sqrt_exact(v, r)) return std::nullopt;
    return L.from_rational(r);
  }
  // Trager: shift Y -> Y - s*x until the norm of Y^2 - z is squarefree, factor
  // the norm over Q, then read roots off degree-one gcds in the tower.
  // Bad shifts are bounded by collisions among the 2n conjugate roots, so a
  // couple hundred candidates is far more than enough at degree <= 6.
  for (long s = 0; s <= 200; ++s) {
    // norm_s(Y) = Res_x(m(x), (Y - s x)^2 - z(x)) in Q[Y]
    //           = Res_x(m(x), s^2 x^2 - 2 s x Y + Y^2 - z(x)).
    const int dx = std::max(z.re.deg(), 2);
    std::vector<QPoly> coeffs(static_cast<std::size_t>(dx) + 1);
    for (int j = 0; j <= dx; ++j) {
      std::vector<mpq_class> cj = {-coeff(q, z.re, j), mpq_class(0), mpq_class(0)};
      if (j == 1) cj[1] = mpq_class(-2 * s);
      if (j == 2) cj[0] += mpq_class(s) * mpq_class(s);
      if (j == 0) cj[2] = mpq_class(1);
      coeffs[static_cast<std::size_t>(j)] = poly_from(q, std::move(cj));
    }
    QPoly norm = resultant_in_T(m, coeffs);
    if (!is_separable(q, norm)) continue;
    for (auto& [h, mult] : factor_over_Q(norm)) {
      if (h.deg() > 2 * m.deg()) continue;
      // gcd over the tower of h(Y + s*x) and Y^2 - z.
      Poly<TowerField> hh, target;
      {
        // h(Y + s*x) by composition over L.
        Poly<TowerField> hl;
        for (const auto& a : h.c) hl.c.push_back(L.from_rational(a));
        trim(L, hl);
        Poly<TowerField> shift;
        shift.c = {L.mul(L.from_int(s), L.gen()), L.one()};
        hh = compose(L, hl, shift);
      }
      target.c = {L.neg(TowerField::Elem{z.re, {}}), L.zero(), L.one()};
      trim(L, target);
      Poly<TowerField> g = gcd_monic(L, hh, target);
      if (g.deg() == 1) {
        TowerField::Elem w = L.neg(g.c[0]);
        if (L.eq(L.mul(w, w), TowerField::Elem{rem(q, z.re, m), {}})) return w;
        throw InternalError("tower square root witness failed verification");
      }
    }
    return std::nullopt;  // squarefree norm fully decides
  }
  throw InternalError("no squarefree norm shift found for tower square root");
}

}  // namespace hexforge
