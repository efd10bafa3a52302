#include "hexforge/factor.hpp"

#include <algorithm>
#include <map>

#include "hexforge/errors.hpp"

namespace hexforge {
namespace {

// --- integer polynomial layer for Zassenhaus -------------------------------

using ZV = std::vector<mpz_class>;  // dense, trailing zeros trimmed

void ztrim(ZV& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZV& f) { return static_cast<int>(f.size()) - 1; }

ZV zmul(const ZV& a, const ZV& b) {
  if (a.empty() || b.empty()) return {};
  ZV r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

mpz_class zcontent(const ZV& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZV zprimitive(ZV f) {
  ztrim(f);
  if (f.empty()) return f;
  mpz_class g = zcontent(f);
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Exact division test of primitive integer polynomials: g | f.
bool zdivides(const ZV& g, ZV f) {
  if (g.empty()) return false;
  ztrim(f);
  while (zdeg(f) >= zdeg(g)) {
    const mpz_class& l = g.back();
    mpz_class q = f.back() / l;
    if (q * l != f.back()) return false;
    const int d = zdeg(f) - zdeg(g);
    for (std::size_t i = 0; i < g.size(); ++i) f[i + d] -= q * g[i];
    if (!f.empty() && f.back() != 0) return false;  // top failed to cancel
    ztrim(f);
  }
  return f.empty();
}

ZV zquo_exact(const ZV& f, const ZV& g) {
  ZV r = f, q(std::max<std::size_t>(f.size() - g.size() + 1, 1), mpz_class(0));
  ztrim(r);
  while (zdeg(r) >= zdeg(g)) {
    const int d = zdeg(r) - zdeg(g);
    mpz_class c = r.back() / g.back();
    q[d] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[i + d] -= c * g[i];
    ztrim(r);
  }
  if (!r.empty()) throw InternalError("inexact integer polynomial division");
  ztrim(q);
  return q;
}

QPoly z_to_q(const ZV& f) {
  Rationals Q;
  std::vector<mpq_class> c;
  c.reserve(f.size());
  for (const auto& x : f) c.emplace_back(x);
  return poly_from(Q, std::move(c));
}

ZV q_to_z_primitive(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZV out;
  out.reserve(f.c.size());
  for (const auto& c : f.c) {
    mpq_class v = c * mpq_class(l);
    out.push_back(v.get_num());
  }
  return zprimitive(std::move(out));
}

ZV zderiv(const ZV& f) {
  ZV r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
  ztrim(r);
  return r;
}

// --- F_p layer --------------------------------------------------------------

FpPoly fp_from_z(const PrimeField& F, const ZV& f) {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& x : f) c.push_back(F.from_mpz(x));
  return poly_from(F, std::move(c));
}

FpPoly fp_pow_xq(const PrimeField& F, const FpPoly& h, const FpPoly& mod) {
  // h^p mod 'mod'
  return pow_mod(F, h, mpz_class(static_cast<unsigned long>(F.p())), mod);
}

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d factors.
void fp_equal_degree(const PrimeField& F, const FpPoly& f, int d, std::mt19937_64& rng,
                     std::vector<FpPoly>& out) {
  if (f.deg() == d) {
    out.push_back(monic(F, f));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.deg()), 0);
    for (auto& x : rc) x = rng() % F.p();
    FpPoly r = poly_from(F, std::move(rc));
    if (r.deg() < 1) continue;
    FpPoly s = pow_mod(F, r, e, f);
    s = sub(F, s, poly_const(F, F.one()));
    FpPoly g = gcd_monic(F, s, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      fp_equal_degree(F, g, d, rng, out);
      fp_equal_degree(F, quo_exact(F, f, g), d, rng, out);
      return;
    }
  }
}

// --- Hensel lifting (linear, all factors at once) ---------------------------

struct ModCtx {
  mpz_class pk;  // current modulus p^k
  mpz_class half;
  void set(const mpz_class& m) {
    pk = m;
    half = m / 2;
  }
  mpz_class sym(mpz_class a) const {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
    if (a > half) a -= pk;
    return a;
  }
};

ZV zmod(const ZV& f, const mpz_class& m) {
  ZV r = f;
  for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

// Lift f = b * prod(w_i) from mod p to mod p^l, w_i monic. sigma_i are the
// partial-fraction inverses mod p: sigma_i = (prod_{j!=i} w_j)^{-1} mod w_i.
std::vector<ZV> hensel_lift(const ZV& f, std::uint64_t p, int l, const PrimeField& F,
                            std::vector<FpPoly> w0) {
  const std::size_t r = w0.size();
  std::vector<FpPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly prod = poly_const(F, F.one());
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) prod = rem(F, mul(F, prod, w0[j]), w0[i]);
    }
    auto [g, u, v] = xgcd(F, prod, w0[i]);
    if (g.deg() != 0) throw InternalError("modular factors not coprime in Hensel lift");
    sigma[i] = rem(F, u, w0[i]);
  }
  // integer copies of the factors, coefficients in [0, p)
  std::vector<ZV> w(r);
  for (std::size_t i = 0; i < r; ++i) {
    w[i].assign(w0[i].c.size(), mpz_class(0));
    for (std::size_t j = 0; j < w0[i].c.size(); ++j) w[i][j] = mpz_class(static_cast<unsigned long>(w0[i].c[j]));
  }
  const mpz_class b = f.back();
  const std::uint64_t binv = F.inv(F.from_mpz(b));
  mpz_class pk(static_cast<unsigned long>(p));
  for (int k = 1; k < l; ++k) {
    // E = f - b*prod(w) ; by construction E == 0 mod p^k
    ZV prod = {mpz_class(1)};
    for (const auto& wi : w) prod = zmul(prod, wi);
    ZV e = f;
    e.resize(std::max(e.size(), prod.size()), mpz_class(0));
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= b * prod[i];
    ztrim(e);
    if (e.empty()) break;
    for (auto& c : e) {
      mpz_class q, rr;
      mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      if (rr != 0) throw InternalError("Hensel error term not divisible by p^k");
      c = q;
    }
    FpPoly ebar = fp_from_z(F, e);
    ebar = scale(F, ebar, binv);
    for (std::size_t i = 0; i < r; ++i) {
      FpPoly di = rem(F, mul(F, ebar, sigma[i]), w0[i]);
      for (std::size_t j = 0; j < di.c.size(); ++j) {
        if (j >= w[i].size()) throw InternalError("Hensel update exceeds factor degree");
        w[i][j] += pk * mpz_class(static_cast<unsigned long>(di.c[j]));
      }
    }
    pk *= static_cast<unsigned long>(p);
  }
  return w;
}

// --- squarefree factorization over Q (Yun) ----------------------------------

std::vector<std::pair<QPoly, int>> yun_squarefree(const QPoly& f) {
  Rationals Q;
  std::vector<std::pair<QPoly, int>> out;
  QPoly g = monic(Q, f);
  QPoly d = derivative(Q, g);
  QPoly a = gcd_monic(Q, g, d);
  QPoly b = quo_exact(Q, g, a);
  QPoly c = quo_exact(Q, d, a);
  int i = 1;
  while (b.deg() > 0) {
    QPoly t = sub(Q, c, derivative(Q, b));
    QPoly part = gcd_monic(Q, b, t);
    if (part.deg() > 0) out.emplace_back(part, i);
    b = quo_exact(Q, b, part);
    c = quo_exact(Q, t, part);
    ++i;
  }
  return out;
}

// Factor a primitive squarefree integer polynomial into primitive irreducibles.
std::vector<ZV> factor_squarefree_z(ZV f) {
  std::vector<ZV> out;
  ztrim(f);
  if (zdeg(f) <= 0) return out;
  if (f[0] == 0) {
    out.push_back({mpz_class(0), mpz_class(1)});  // the factor x
    ZV g(f.begin() + 1, f.end());
    auto rest = factor_squarefree_z(std::move(g));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  if (zdeg(f) == 1) {
    out.push_back(f);
    return out;
  }

  // Pick the good prime with the fewest modular factors among the first few.
  const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best_factors;
  int tried = 0;
  for (std::uint64_t p : primes) {
    PrimeField F(p);
    if (F.from_mpz(f.back()) == 0) continue;
    FpPoly fp = monic(F, fp_from_z(F, f));
    if (!is_separable(F, fp)) continue;
    auto factors = fp_factor_squarefree(F, fp, rng);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(factors);
    }
    if (++tried >= 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw InternalError("no usable prime for factorization (degree cap 12)");
  if (best_factors.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Landau-Mignotte style bound on coefficients of lc(f) * (any monic factor).
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= zdeg(f);
  mpz_class babs = abs(f.back());
  bound *= babs;
  PrimeField F(best_p);
  int l = 1;
  mpz_class pl(static_cast<unsigned long>(best_p));
  while (pl <= 2 * bound) {
    pl *= static_cast<unsigned long>(best_p);
    ++l;
  }
  auto lifted = hensel_lift(f, best_p, l, F, best_factors);
  ModCtx ctx;
  ctx.set(pl);

  // Subset recombination, smallest subsets first.
  std::vector<int> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  ZV rest = f;
  std::vector<int> subset;
  auto try_subsets = [&](auto&& self, int card, int start) -> bool {
    if (static_cast<int>(subset.size()) == card) {
      ZV cand = {rest.back()};
      for (int idx : subset) cand = zmod(zmul(cand, lifted[static_cast<std::size_t>(idx)]), ctx.pk);
      for (auto& c : cand) c = ctx.sym(c);
      ztrim(cand);
      cand = zprimitive(std::move(cand));
      if (!cand.empty() && zdeg(cand) >= 1 && zdivides(cand, rest)) {
        out.push_back(cand);
        rest = zquo_exact(rest, cand);
        std::vector<int> remaining;
        for (int idx : pool) {
          if (std::find(subset.begin(), subset.end(), idx) == subset.end()) remaining.push_back(idx);
        }
        pool = std::move(remaining);
        return true;
      }
      return false;
    }
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      subset.push_back(pool[static_cast<std::size_t>(i)]);
      if (self(self, card, i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (int card = 1; card <= static_cast<int>(pool.size()) / 2;) {
    subset.clear();
    if (try_subsets(try_subsets, card, 0)) {
      // factor removed; retry the same cardinality on the reduced pool
      continue;
    }
    ++card;
  }
  if (zdeg(rest) >= 1) out.push_back(zprimitive(std::move(rest)));
  return out;
}

}  // namespace

std::vector<FpPoly> fp_factor_squarefree(const PrimeField& F, const FpPoly& f, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  for (auto& [prod, d] : fp_distinct_degree(F, monic(F, f))) {
    fp_equal_degree(F, prod, d, rng, out);
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.c < b.c;
  });
  return out;
}

std::vector<std::pair<FpPoly, int>> fp_distinct_degree(const PrimeField& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly h = poly_x(F);
  int d = 0;
  while (f.deg() > 0 && 2 * (d + 1) <= f.deg()) {
    ++d;
    h = fp_pow_xq(F, h, f);
    FpPoly g = gcd_monic(F, sub(F, h, poly_x(F)), f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = quo_exact(F, f, g);
      h = rem(F, h, f);
    }
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

FpPoly reduce_mod_p(const QPoly& f, const PrimeField& F) {
  std::vector<std::uint64_t> c;
  c.reserve(f.c.size());
  for (const auto& q : f.c) {
    const std::uint64_t den = F.from_mpz(q.get_den());
    if (den == 0) throw BadPrime("denominator divisible by p");
    c.push_back(F.mul(F.from_mpz(q.get_num()), F.inv(den)));
  }
  auto r = poly_from(F, std::move(c));
  if (r.deg() != f.deg()) throw BadPrime("leading coefficient divisible by p");
  return r;
}

std::vector<int> ddf_cycle_type(const QPoly& f, std::uint64_t p) {
  PrimeField F(p);
  FpPoly fp = monic(F, reduce_mod_p(f, F));
  if (!is_separable(F, fp)) throw BadPrime("not squarefree mod p");
  std::vector<int> type;
  for (auto& [prod, d] : fp_distinct_degree(F, fp)) {
    for (int i = 0; i < prod.deg() / d; ++i) type.push_back(d);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<std::pair<QPoly, int>> factor_over_Q(const QPoly& f) {
  Rationals Q;
  if (f.deg() > 12) throw InvalidInput("factorization degree cap is 12");
  std::vector<std::pair<QPoly, int>> out;
  if (f.deg() <= 0) return out;
  for (auto& [part, mult] : yun_squarefree(f)) {
    for (auto& zf : factor_squarefree_z(q_to_z_primitive(part))) {
      out.emplace_back(monic(Q, z_to_q(zf)), mult);
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i) {
      if (a.first.c[static_cast<std::size_t>(i)] != b.first.c[static_cast<std::size_t>(i)]) {
        return a.first.c[static_cast<std::size_t>(i)] < b.first.c[static_cast<std::size_t>(i)];
      }
    }
    return false;
  });
  return out;
}

bool is_square_in_Q(const mpq_class& a) {
  mpq_class r;
  return Rationals::sqrt_exact(a, r);
}

}  // namespace hexforge
