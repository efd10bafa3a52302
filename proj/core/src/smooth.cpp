#include "hexforge/smooth.hpp"

#include <random>

#include "hexforge/factor.hpp"

namespace hexforge {

namespace {

using Ext = SimpleExt<PrimeField>;

// Specialize t -> class of x in F_p[x]/(m); nullopt when a denominator dies.
std::optional<TernaryForm<Ext>> specialize(const FpRatFunc& k, const TernaryForm<FpRatFunc>& Q,
                                           const Ext& ext) {
  TernaryForm<Ext> out = TernaryForm<Ext>::zero(Q.degree);
  const Ext::Elem tau = ext.gen();
  auto eval_poly = [&](const FpPoly& f) {
    Ext::Elem r = ext.zero();
    for (int i = f.deg(); i >= 0; --i) {
      r = ext.add(ext.mul(r, tau), poly_const(k.base(), f.c[static_cast<std::size_t>(i)]));
    }
    return r;
  };
  for (const auto& [e, c] : Q.terms) {
    const Ext::Elem den = eval_poly(c.den);
    if (ext.is_zero(den)) return std::nullopt;
    const Ext::Elem num = eval_poly(c.num);
    ternary_set(ext, out, e, ext.mul(num, ext.inv(den)));
  }
  return out;
}

bool is_irreducible_mod_p(const PrimeField& F, const FpPoly& f) {
  if (!is_separable(F, f)) return false;
  auto blocks = fp_distinct_degree(F, monic(F, f));
  return blocks.size() == 1 && blocks[0].second == f.deg();
}

}  // namespace

bool smoothness(const FpRatFunc& k, const TernaryForm<FpRatFunc>& Q) {
  if (Q.is_zero()) throw InvalidInput("smoothness of the zero form");
  const PrimeField& F = k.base();
  std::mt19937_64 rng(0x51300d5ULL);
  // A smooth specialization certifies generic smoothness; scan small fields
  // first, then random extensions large enough to dodge the bad locus.
  for (int deg = 1; deg <= 8; ++deg) {
    const int tries = deg == 1 ? static_cast<int>(std::min<std::uint64_t>(F.p(), 64)) : 40;
    for (int attempt = 0; attempt < tries; ++attempt) {
      FpPoly m;
      if (deg == 1) {
        m = poly_from(F, {F.neg(F.from_int(attempt)), F.one()});
      } else {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1, 0);
        for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = rng() % F.p();
        c[static_cast<std::size_t>(deg)] = 1;
        m = poly_from(F, std::move(c));
        if (!is_irreducible_mod_p(F, m)) continue;
      }
      Ext ext(F, m);
      auto special = specialize(k, Q, ext);
      if (!special) continue;
      if (smoothness(ext, *special)) return true;
    }
  }
  // No smooth specialization found: decide exactly over F_p(t).
  TernaryForm<FpRatFunc> partials[3] = {ternary_partial(k, Q, 0), ternary_partial(k, Q, 1),
                                        ternary_partial(k, Q, 2)};
  for (int chart = 0; chart < 3; ++chart) {
    std::vector<BiPoly<FpRatFunc>> polys;
    bool all_vanish = true;
    for (const auto& p : partials) {
      auto d = detail_smooth::dehomogenize(k, p, chart);
      if (!d.empty()) {
        polys.push_back(std::move(d));
        all_vanish = false;
      }
    }
    if (all_vanish) return false;
    if (detail_smooth::common_zero_exists(k, std::move(polys))) return false;
  }
  return true;
}

}  // namespace hexforge
