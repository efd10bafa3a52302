#pragma once

#include <utility>
#include <vector>

#include "hexforge/extfield.hpp"
#include "hexforge/forms.hpp"
#include "hexforge/fracfield.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

// Bivariate polynomials over K as dense vectors in v with K[u] coefficients.
template <Field K>
using BiPoly = std::vector<Poly<K>>;  // index = power of v

namespace detail_smooth {

template <Field K>
void btrim(const K&, BiPoly<K>& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

template <Field K>
int bdeg_v(const BiPoly<K>& f) {
  return static_cast<int>(f.size()) - 1;
}

template <Field K>
bool bis_unit_scalar(const BiPoly<K>& f) {
  return f.size() == 1 && f[0].deg() == 0;
}

template <Field K>
BiPoly<K> bsub(const K& k, const BiPoly<K>& a, const BiPoly<K>& b) {
  BiPoly<K> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Poly<K> pa = i < a.size() ? a[i] : Poly<K>{};
    const Poly<K> pb = i < b.size() ? b[i] : Poly<K>{};
    r[i] = sub(k, pa, pb);
  }
  btrim(k, r);
  return r;
}

template <Field K>
BiPoly<K> bscale(const K& k, const BiPoly<K>& a, const Poly<K>& c) {
  if (c.is_zero()) return {};
  BiPoly<K> r = a;
  for (auto& x : r) x = mul(k, x, c);
  return r;
}

template <Field K>
BiPoly<K> bshift(const K&, const BiPoly<K>& a, int n) {
  if (a.empty()) return {};
  BiPoly<K> r(a.size() + static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(n)] = a[i];
  return r;
}

template <Field K>
BiPoly<K> bmul(const K& k, const BiPoly<K>& a, const BiPoly<K>& b) {
  if (a.empty() || b.empty()) return {};
  BiPoly<K> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add(k, r[i + j], mul(k, a[i], b[j]));
    }
  }
  btrim(k, r);
  return r;
}

// Pseudo-remainder: lc(B)^{deg A - deg B + 1} A = Q B + R with deg R < deg B.
template <Field K>
BiPoly<K> bprem(const K& k, BiPoly<K> A, const BiPoly<K>& B) {
  const Poly<K> d = B.back();
  int steps = bdeg_v(A) - bdeg_v(B) + 1;
  while (!A.empty() && bdeg_v(A) >= bdeg_v(B)) {
    BiPoly<K> t = bscale(k, bshift(k, B, bdeg_v(A) - bdeg_v(B)), A.back());
    A = bsub(k, bscale(k, A, d), t);
    --steps;
  }
  for (; steps > 0; --steps) A = bscale(k, A, d);
  return A;
}

template <Field K>
Poly<K> bcontent(const K& k, const BiPoly<K>& f) {
  Poly<K> content;
  for (const auto& c : f) {
    if (c.is_zero()) continue;
    content = content.is_zero() ? monic(k, c) : gcd_monic(k, content, c);
    if (content.deg() == 0) break;
  }
  return content;
}

template <Field K>
BiPoly<K> bprimitive(const K& k, BiPoly<K> f) {
  btrim(k, f);
  if (f.empty()) return f;
  const Poly<K> content = bcontent(k, f);
  if (content.deg() > 0) {
    for (auto& c : f) c = c.is_zero() ? Poly<K>{} : quo_exact(k, c, content);
  }
  // normalize the leading coefficient monic for determinism
  const auto s = k.inv(lc(k, f.back()));
  for (auto& c : f) c = scale(k, c, s);
  return f;
}

// Dehomogenize a ternary form in the chart T_chart = 1; remaining variables
// in index order give (u, v).
template <Field K>
BiPoly<K> dehomogenize(const K& k, const TernaryForm<K>& f, int chart) {
  int iu = -1, iv = -1;
  for (int j = 0; j < 3; ++j) {
    if (j == chart) continue;
    (iu < 0 ? iu : iv) = j;
  }
  BiPoly<K> out;
  for (const auto& [e, c] : f.terms) {
    const int ev = e[iv], eu = e[iu];
    if (static_cast<int>(out.size()) <= ev) out.resize(static_cast<std::size_t>(ev) + 1);
    Poly<K>& slot = out[static_cast<std::size_t>(ev)];
    if (static_cast<int>(slot.c.size()) <= eu) slot.c.resize(static_cast<std::size_t>(eu) + 1, k.zero());
    slot.c[static_cast<std::size_t>(eu)] = k.add(slot.c[static_cast<std::size_t>(eu)], c);
  }
  for (auto& slot : out) trim(k, slot);
  btrim(k, out);
  return out;
}

// Resultant in v by the subresultant PRS; fraction-free over K[u].
template <Field K>
Poly<K> bires_v(const K& k, BiPoly<K> A, BiPoly<K> B) {
  btrim(k, A);
  btrim(k, B);
  if (A.empty() || B.empty()) throw InternalError("resultant of a zero polynomial");
  bool negate = false;
  if (bdeg_v(A) < bdeg_v(B)) {
    if ((bdeg_v(A) & 1) && (bdeg_v(B) & 1)) negate = !negate;
    std::swap(A, B);
  }
  auto pow_poly = [&](const Poly<K>& b, int e) {
    Poly<K> r = poly_const(k, k.one());
    for (int i = 0; i < e; ++i) r = mul(k, r, b);
    return r;
  };
  if (bdeg_v(B) == 0) {
    Poly<K> r = pow_poly(B[0], bdeg_v(A));
    return negate ? neg(k, r) : r;
  }
  Poly<K> g = poly_const(k, k.one());
  Poly<K> h = poly_const(k, k.one());
  while (true) {
    const int delta = bdeg_v(A) - bdeg_v(B);
    if ((bdeg_v(A) & 1) && (bdeg_v(B) & 1)) negate = !negate;
    BiPoly<K> R = bprem(k, A, B);
    if (R.empty()) return {};
    A = std::move(B);
    const Poly<K> divisor = mul(k, g, pow_poly(h, delta));
    B = std::move(R);
    for (auto& c : B) c = c.is_zero() ? Poly<K>{} : quo_exact(k, c, divisor);
    g = A.back();
    if (delta > 0) h = quo_exact(k, pow_poly(g, delta), pow_poly(h, delta - 1));
    if (bdeg_v(B) == 0) break;
  }
  Poly<K> res = quo_exact(k, pow_poly(B[0], bdeg_v(A)), pow_poly(h, bdeg_v(A) - 1));
  return negate ? neg(k, res) : res;
}

// Primitive-PRS gcd in v combined with the content gcd; fraction-free.
template <Field K>
BiPoly<K> bigcd(const K& k, BiPoly<K> A, BiPoly<K> B) {
  btrim(k, A);
  btrim(k, B);
  if (A.empty()) return B;
  if (B.empty()) return A;
  const Poly<K> ca = bcontent(k, A), cb = bcontent(k, B);
  A = bprimitive(k, std::move(A));
  B = bprimitive(k, std::move(B));
  if (bdeg_v(A) < bdeg_v(B)) std::swap(A, B);
  while (!B.empty()) {
    BiPoly<K> R = bprimitive(k, bprem(k, A, B));
    A = std::move(B);
    B = std::move(R);
  }
  const Poly<K> cg = gcd_monic(k, ca, cb);
  if (cg.deg() > 0) {
    for (auto& c : A) c = mul(k, c, cg);
  }
  return A;
}

template <Field K>
BiPoly<K> bidiv_exact(const K& k, const BiPoly<K>& a, const BiPoly<K>& b) {
  RatFunc<K> ku(k, "u");
  auto lift = [&](const BiPoly<K>& f) {
    Poly<RatFunc<K>> out;
    for (const auto& c : f) out.c.push_back(ku.from_poly(c));
    trim(ku, out);
    return out;
  };
  auto [q, r] = divrem(ku, lift(a), lift(b));
  if (!r.is_zero()) throw InternalError("inexact bivariate division");
  BiPoly<K> out;
  for (const auto& c : q.c) {
    if (ku.is_zero(c)) {
      out.push_back({});
      continue;
    }
    if (c.den.deg() != 0) throw InternalError("bivariate quotient has a denominator");
    out.push_back(scale(k, c.num, k.inv(c.den.c[0])));
  }
  btrim(k, out);
  return out;
}

// Dynamic-evaluation query: does some root alpha of the modulus (in the
// algebraic closure) admit a common v-root of all the given bivariate
// polynomials? Splits the modulus whenever a leading coefficient turns out to
// be a zero divisor. Correct for any modulus of positive degree.
template <Field K>
bool branch_common_root(const K& k, const Poly<K>& modulus, std::vector<BiPoly<K>> polys) {
  if (modulus.deg() < 1) return false;
  std::vector<BiPoly<K>> live;
  for (auto& f : polys) {
    BiPoly<K> g;
    for (const auto& c : f) g.push_back(rem(k, c, modulus));
    btrim(k, g);
    if (!g.empty()) live.push_back(std::move(g));  // identically-zero: no constraint
  }
  if (live.empty()) return true;
  for (auto& f : live) {
    while (!f.empty()) {
      const Poly<K> g = gcd_monic(k, f.back(), modulus);
      if (g.deg() == 0) break;  // invertible at every root
      if (g.deg() == modulus.deg()) {
        f.pop_back();  // leading coefficient vanishes on this whole branch
        continue;
      }
      return branch_common_root(k, g, live) ||
             branch_common_root(k, quo_exact(k, modulus, g), live);
    }
    if (f.empty()) return branch_common_root(k, modulus, live);  // re-filter
  }
  for (const auto& f : live) {
    if (bdeg_v(f) == 0) return false;  // nonvanishing scalar on this branch
  }
  if (live.size() == 1) return true;  // positive v-degree at every root
  // One Euclidean step between the two smallest members, then recurse.
  std::size_t ia = 0, ib = 1;
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (bdeg_v(live[i]) < bdeg_v(live[ia])) {
      ib = ia;
      ia = i;
    } else if (i != ia && bdeg_v(live[i]) < bdeg_v(live[ib])) {
      ib = i;
    }
  }
  BiPoly<K>&small = live[ia], &big = live[ib];
  const Poly<K> inv_lc = [&] {
    auto [g, u, v] = xgcd(k, small.back(), modulus);
    if (g.deg() != 0) throw InternalError("non-unit survived normalization");
    return rem(k, u, modulus);
  }();
  while (!big.empty() && bdeg_v(big) >= bdeg_v(small)) {
    const int d = bdeg_v(big) - bdeg_v(small);
    const Poly<K> factor = rem(k, mul(k, big.back(), inv_lc), modulus);
    for (int i = 0; i <= bdeg_v(small); ++i) {
      auto& slot = big[static_cast<std::size_t>(i + d)];
      slot = rem(k, sub(k, slot, mul(k, factor, small[static_cast<std::size_t>(i)])), modulus);
    }
    btrim(k, big);
  }
  return branch_common_root(k, modulus, live);
}

// Do the given nonzero bivariate polynomials share a zero over the closure?
template <Field K>
bool common_zero_exists(const K& k, std::vector<BiPoly<K>> polys) {
  for (const auto& f : polys) {
    if (bis_unit_scalar(f)) return false;
  }
  if (polys.empty()) return true;
  if (polys.size() == 1) return true;  // nonconstant bivariate always vanishes somewhere

  // A nonconstant factor common to everything settles it.
  BiPoly<K> w = polys[0];
  for (std::size_t i = 1; i < polys.size(); ++i) w = bigcd(k, w, polys[i]);
  if (bdeg_v(w) >= 1 || (w.size() == 1 && w[0].deg() >= 1)) return true;

  // Pure-u members pin candidate abscissas directly.
  std::vector<BiPoly<K>> positive;
  Poly<K> u_candidates;
  bool have_u = false;
  for (auto& f : polys) {
    if (bdeg_v(f) == 0) {
      u_candidates = have_u ? gcd_monic(k, u_candidates, f[0]) : monic(k, f[0]);
      have_u = true;
    } else {
      positive.push_back(std::move(f));
    }
  }
  if (have_u) {
    if (u_candidates.deg() < 1) return false;
    if (positive.empty()) return true;
    return branch_common_root(k, squarefree_part(k, u_candidates), positive);
  }

  // All members have positive v-degree: candidates from pairwise resultants.
  Poly<K> cand;
  bool have_res = false;
  for (std::size_t i = 0; i < positive.size() && !(have_res && cand.deg() == 0); ++i) {
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      Poly<K> r = bires_v(k, positive[i], positive[j]);
      if (r.is_zero()) continue;
      cand = have_res ? gcd_monic(k, cand, r) : monic(k, r);
      have_res = true;
      if (cand.deg() == 0) break;
    }
  }
  if (have_res) {
    if (cand.deg() < 1) return false;
    return branch_common_root(k, squarefree_part(k, cand), positive);
  }

  // Every pair shares a factor while the global gcd is trivial: split along a
  // shared component. Degrees drop strictly, so this terminates.
  BiPoly<K> w01 = bigcd(k, positive[0], positive[1]);
  std::vector<BiPoly<K>> with_component{w01};
  for (std::size_t i = 2; i < positive.size(); ++i) with_component.push_back(positive[i]);
  if (common_zero_exists(k, std::move(with_component))) return true;
  std::vector<BiPoly<K>> reduced;
  reduced.push_back(bidiv_exact(k, positive[0], w01));
  reduced.push_back(bidiv_exact(k, positive[1], w01));
  for (std::size_t i = 2; i < positive.size(); ++i) reduced.push_back(positive[i]);
  for (auto& f : reduced) {
    btrim(k, f);
    if (f.empty()) throw InternalError("vanishing member after component split");
  }
  return common_zero_exists(k, std::move(reduced));
}

}  // namespace detail_smooth

// True iff the three partials of Q have no common projective zero over the
// algebraic closure: iterated resultants per affine chart with candidate roots
// verified against all partials in modular (dynamic-evaluation) arithmetic.
template <Field K>
bool smoothness(const K& k, const TernaryForm<K>& Q) {
  if (Q.is_zero()) throw InvalidInput("smoothness of the zero form");
  TernaryForm<K> partials[3] = {ternary_partial(k, Q, 0), ternary_partial(k, Q, 1),
                                ternary_partial(k, Q, 2)};
  for (int chart = 0; chart < 3; ++chart) {
    std::vector<BiPoly<K>> polys;
    bool all_vanish = true;
    for (const auto& p : partials) {
      auto d = detail_smooth::dehomogenize(k, p, chart);
      if (!d.empty()) {
        polys.push_back(std::move(d));
        all_vanish = false;
      }
    }
    if (all_vanish) return false;  // partials vanish on the whole chart
    if (detail_smooth::common_zero_exists(k, std::move(polys))) return false;
  }
  return true;
}

// F_p(t) fast path: a single specialization t -> tau (over F_{p^k}) at which
// the curve is smooth certifies generic smoothness, because the Macaulay
// resultant of the three partials is a polynomial in t that commutes with
// specialization. Falls back to the generic exact routine when no smooth
// specialization is found (in particular whenever the curve is singular).
bool smoothness(const FpRatFunc& k, const TernaryForm<FpRatFunc>& Q);

}  // namespace hexforge
