#pragma once

#include <random>
#include <variant>
#include <vector>

#include "hexforge/factor.hpp"
#include "hexforge/fields.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

// Monic separable degree-6 input with a chosen square root of the constant
// term. Generic so the construction runs over Q, F_p and F_p(t) alike.
template <Field K>
struct SexticInput {
  Poly<K> F;
  typename K::Elem c;
};

template <Field K>
void validate_sextic(const K& k, const SexticInput<K>& in) {
  if (in.F.deg() != 6) throw InvalidInput("F must have degree 6");
  if (!k.eq(lc(k, in.F), k.one())) throw InvalidInput("F must be monic");
  if (k.is_zero(in.c)) throw InvalidInput("c must be nonzero");
  if (!k.eq(k.mul(in.c, in.c), coeff(k, in.F, 0))) {
    throw InvalidInput("c^2 must equal the constant term of F");
  }
}

template <Field K>
bool sextic_separable(const K& k, const SexticInput<K>& in) {
  return is_separable(k, in.F);
}

// One Galois orbit of lifts: either a list of distinct nonzero rationals
// (orbit size one each) or a field orbit A = a(x) mod m with twist t(x).
struct RationalOrbit {
  std::vector<mpq_class> entries;
};

struct FieldOrbit {
  QPoly m;  // monic irreducible, degree = orbit size
  QPoly a;  // representative of A in Q[x]/(m), deg a < deg m, a != 0
  QPoly t;  // twist, deg t < deg m, t != 0
};

using OrbitSpec = std::variant<RationalOrbit, FieldOrbit>;

struct KummerPlan {
  std::vector<OrbitSpec> orbits;
  std::uint64_t seed = 0;
};

int plan_total_degree(const KummerPlan& plan);
void validate_plan(const KummerPlan& plan);

// A * t^2 reduced mod m; preserves the square class of A in (Q[x]/(m))^*.
QPoly square_twist(const QPoly& m, const QPoly& a, const QPoly& t);

// Characteristic polynomial of multiplication by a on Q[x]/(m), monic in T,
// via Res_x(m(x), T - a(x)). Throws InvalidInput when m is reducible.
QPoly mult_charpoly(const QPoly& m, const QPoly& a);

// Assemble F = prod over orbits, pick c = the nonnegative square root of the
// constant term. Throws NotA12Compatible when a0 is not a rational square and
// ResampleNeeded when F is inseparable.
SexticInput<Rationals> assemble_F(const KummerPlan& plan);

// Redraw twists: rational entries are multiplied by random squares (r/s)^2,
// r, s uniform on {1..9}; field-orbit twists become fresh nonzero polynomials
// of degree < deg m with coefficients uniform on {-4..4}.
KummerPlan resample(const KummerPlan& plan, std::mt19937_64& rng);

}  // namespace hexforge
