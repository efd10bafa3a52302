#include "hexforge/kummer.hpp"

#include <algorithm>

#include "hexforge/errors.hpp"
#include "hexforge/fracfield.hpp"

namespace hexforge {

namespace {
Rationals Q;
}

int plan_total_degree(const KummerPlan& plan) {
  int total = 0;
  for (const auto& orbit : plan.orbits) {
    if (const auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      total += static_cast<int>(ro->entries.size());
    } else {
      total += std::get<FieldOrbit>(orbit).m.deg();
    }
  }
  return total;
}

void validate_plan(const KummerPlan& plan) {
  if (plan_total_degree(plan) != 6) throw InvalidInput("orbit sizes must sum to 6");
  for (const auto& orbit : plan.orbits) {
    if (const auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      // Repeated entries are not rejected here: they surface as an
      // inseparable F, which is a resampleable condition.
      for (const auto& entry : ro->entries) {
        if (entry == 0) throw InvalidInput("rational orbit entries must be nonzero");
      }
    } else {
      const auto& fo = std::get<FieldOrbit>(orbit);
      if (fo.m.deg() < 1 || lc(Q, fo.m) != 1) throw InvalidInput("orbit modulus must be monic of positive degree");
      if (fo.a.is_zero() || fo.a.deg() >= fo.m.deg()) throw InvalidInput("orbit representative must be nonzero of degree < deg m");
      if (fo.t.is_zero() || fo.t.deg() >= fo.m.deg()) throw InvalidInput("orbit twist must be nonzero of degree < deg m");
    }
  }
}

QPoly square_twist(const QPoly& m, const QPoly& a, const QPoly& t) {
  if (t.is_zero()) throw InvalidInput("twist must be nonzero");
  return rem(Q, mul(Q, a, mul(Q, t, t)), m);
}

QPoly mult_charpoly(const QPoly& m, const QPoly& a) {
  if (m.deg() < 1 || lc(Q, m) != 1) throw InvalidInput("modulus must be monic of positive degree");
  if (a.deg() >= m.deg()) throw InvalidInput("representative degree must be below deg m");
  {
    auto factors = factor_over_Q(m);
    if (factors.size() != 1 || factors[0].second != 1) {
      throw InvalidInput("modulus must be irreducible over Q");
    }
  }
  RatFunc<Rationals> qt(Q, "T");
  Poly<RatFunc<Rationals>> mm, g;
  for (const auto& coeff : m.c) mm.c.push_back(qt.from_poly(poly_const(Q, coeff)));
  trim(qt, mm);
  // T - a(x) as a polynomial in x over Q(T).
  g.c.assign(std::max<std::size_t>(a.c.size(), 1), qt.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) g.c[i] = qt.from_poly(poly_const(Q, -a.c[i]));
  g.c[0] = qt.add(g.c[0], qt.from_poly(poly_x(Q)));
  trim(qt, g);
  auto res = resultant(qt, mm, g);
  if (!qt.is_poly(res)) throw InternalError("characteristic polynomial is not polynomial in T");
  return monic(Q, res.num);
}

SexticInput<Rationals> assemble_F(const KummerPlan& plan) {
  validate_plan(plan);
  QPoly F = poly_const(Q, mpq_class(1));
  for (const auto& orbit : plan.orbits) {
    if (const auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      for (const auto& A : ro->entries) {
        F = mul(Q, F, poly_from(Q, {-A, mpq_class(1)}));
      }
    } else {
      const auto& fo = std::get<FieldOrbit>(orbit);
      F = mul(Q, F, mult_charpoly(fo.m, square_twist(fo.m, fo.a, fo.t)));
    }
  }
  // The separability failure is the resampleable one, so it is reported
  // first; a non-square constant term is permanent (twists only multiply it
  // by squares).
  if (!is_separable(Q, F)) throw ResampleNeeded("assembled F is not separable");
  const mpq_class a0 = coeff(Q, F, 0);
  if (a0 == 0) throw InvalidInput("assembled constant term vanishes");
  mpq_class c;
  if (!Rationals::sqrt_exact(a0, c)) {
    throw NotA12Compatible("constant term of F is not a square in Q");
  }
  SexticInput<Rationals> out{F, c};
  validate_sextic(Q, out);
  return out;
}

KummerPlan resample(const KummerPlan& plan, std::mt19937_64& rng) {
  validate_plan(plan);
  KummerPlan out = plan;
  std::uniform_int_distribution<int> digit(1, 9);
  std::uniform_int_distribution<int> small(-4, 4);
  for (auto& orbit : out.orbits) {
    if (auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      const std::vector<mpq_class> original = ro->entries;
      bool distinct = false;
      while (!distinct) {
        ro->entries = original;
        for (auto& A : ro->entries) {
          mpq_class sq(digit(rng), digit(rng));
          sq.canonicalize();
          A *= sq * sq;
        }
        distinct = true;
        for (std::size_t i = 0; i < ro->entries.size() && distinct; ++i) {
          for (std::size_t j = i + 1; j < ro->entries.size(); ++j) {
            if (ro->entries[i] == ro->entries[j]) {
              distinct = false;
              break;
            }
          }
        }
      }
    } else {
      auto& fo = std::get<FieldOrbit>(orbit);
      QPoly t;
      do {
        std::vector<mpq_class> c(static_cast<std::size_t>(fo.m.deg()), mpq_class(0));
        for (auto& x : c) x = small(rng);
        t = poly_from(Q, std::move(c));
      } while (t.is_zero());
      fo.t = t;
    }
  }
  return out;
}

}  // namespace hexforge
