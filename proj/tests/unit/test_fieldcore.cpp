#include <doctest.h>

#include <random>
#include <set>

#include "hexforge/factor.hpp"
#include "hexforge/forms.hpp"
#include "hexforge/fracfield.hpp"
#include "hexforge/poly.hpp"

using namespace hexforge;

namespace {

Rationals Q;

QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<mpq_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return poly_from(Q, std::move(c));
}

QPoly random_monic(std::mt19937_64& rng, int deg, int height) {
  std::uniform_int_distribution<long> d(-height, height);
  std::vector<mpq_class> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = d(rng);
  c[static_cast<std::size_t>(deg)] = 1;
  return poly_from(Q, std::move(c));
}

}  // namespace

TEST_CASE("resultant convention on the pinned examples") {
  // linear case straight from the definition
  CHECK(resultant(Q, qp({-2, 1}), qp({-3, 1})) == mpq_class(-1));
  // common factor
  CHECK(resultant(Q, qp({-2, 0, 1}), qp({-2, 0, 1})) == 0);
  // brute force over the roots +-sqrt(2) of T^2-2: (2-3)(2-3) = 1
  CHECK(resultant(Q, qp({-2, 0, 1}), qp({-3, 0, 1})) == mpq_class(1));
  // zero against a nonzero constant keeps the empty-product convention
  CHECK(resultant(Q, QPoly{}, qp({7})) == mpq_class(1));
  CHECK(resultant(Q, qp({0, 1}), QPoly{}) == 0);
  CHECK_THROWS_AS(resultant(Q, QPoly{}, QPoly{}), InvalidInput);
}

TEST_CASE("resultant reciprocity for random monic polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6), n = 1 + static_cast<int>(rng() % 6);
    QPoly f = random_monic(rng, m, 8), g = random_monic(rng, n, 8);
    mpq_class lhs = resultant(Q, f, g);
    mpq_class rhs = resultant(Q, g, f);
    if ((m * n) % 2 != 0) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("discriminant on quadratics and the doubled sextic") {
  // T^2 + bT + c -> b^2 - 4c
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    const long b = d(rng), c = d(rng);
    CHECK(discriminant(Q, qp({c, b, 1})) == mpq_class(b * b - 4 * c));
  }
  CHECK(discriminant(Q, qp({-1, 0, 1})) == mpq_class(4));
  CHECK_THROWS_AS(discriminant(Q, qp({3})), InvalidInput);
  // disc of F(T^2) for F = T^6 + 25 is a nonzero perfect square
  QPoly F = qp({25, 0, 0, 0, 0, 0, 1});
  mpq_class disc = discriminant(Q, substitute_square(Q, F));
  CHECK(disc != 0);
  CHECK(is_square_in_Q(disc));
}

TEST_CASE("discriminant product identity for coprime factors") {
  std::mt19937_64 rng(17);
  int done = 0;
  while (done < 25) {
    QPoly f = random_monic(rng, 2 + static_cast<int>(rng() % 3), 6);
    QPoly g = random_monic(rng, 2 + static_cast<int>(rng() % 3), 6);
    if (!is_separable(Q, f) || !is_separable(Q, g)) continue;
    if (gcd_monic(Q, f, g).deg() != 0) continue;
    const mpq_class res = resultant(Q, f, g);
    CHECK(discriminant(Q, mul(Q, f, g)) == discriminant(Q, f) * discriminant(Q, g) * res * res);
    ++done;
  }
}

TEST_CASE("factor_over_Q pinned examples") {
  auto factors = factor_over_Q(qp({-1, 0, 1}));
  REQUIRE(factors.size() == 2);
  CHECK(poly_eq(Q, factors[0].first, qp({-1, 1})));
  CHECK(poly_eq(Q, factors[1].first, qp({1, 1})));

  // (T^2-2)^2 (T-1)
  QPoly t2m2 = qp({-2, 0, 1});
  QPoly big = mul(Q, mul(Q, t2m2, t2m2), qp({-1, 1}));
  factors = factor_over_Q(big);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].second == 1);
  CHECK(poly_eq(Q, factors[0].first, qp({-1, 1})));
  CHECK(factors[1].second == 2);
  CHECK(poly_eq(Q, factors[1].first, t2m2));

  // T^6 + 25: roundtrip plus DDF-based irreducibility certificate
  QPoly sext = qp({25, 0, 0, 0, 0, 0, 1});
  factors = factor_over_Q(sext);
  QPoly prod = poly_const(Q, mpq_class(1));
  for (const auto& [h, mult] : factors) {
    for (int i = 0; i < mult; ++i) prod = mul(Q, prod, h);
  }
  CHECK(poly_eq(Q, prod, sext));
  for (const auto& [h, mult] : factors) {
    // the possible rational factor degrees are subset sums common to all
    // sampled modular cycle types; {0, deg} certifies irreducibility
    std::set<int> possible;
    for (int i = 0; i <= h.deg(); ++i) possible.insert(i);
    for (std::uint64_t p : {7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
      std::vector<int> type;
      try {
        type = ddf_cycle_type(h, p);
      } catch (const BadPrime&) {
        continue;
      }
      std::set<int> sums{0};
      for (int part : type) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + part);
        sums = std::move(next);
      }
      std::set<int> keep;
      for (int s : possible) {
        if (sums.count(s)) keep.insert(s);
      }
      possible = std::move(keep);
    }
    CHECK(possible == std::set<int>{0, h.deg()});
  }
}

TEST_CASE("factor_over_Q roundtrip on random composites") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly f = poly_const(Q, mpq_class(1));
    const int pieces = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < pieces && f.deg() < 9; ++i) {
      f = mul(Q, f, random_monic(rng, 1 + static_cast<int>(rng() % 3), 5));
    }
    QPoly prod = poly_const(Q, mpq_class(1));
    for (const auto& [h, mult] : factor_over_Q(f)) {
      CHECK(lc(Q, h) == 1);
      for (int i = 0; i < mult; ++i) prod = mul(Q, prod, h);
    }
    CHECK(poly_eq(Q, prod, f));
  }
}

TEST_CASE("ddf cycle types") {
  CHECK(ddf_cycle_type(qp({1, 0, 1}), 3) == std::vector<int>{2});
  CHECK(ddf_cycle_type(qp({-1, 0, 1}), 5) == std::vector<int>{1, 1});

  // T^3 - 2 mod 7, cross-checked against exhaustive root search over F_7
  PrimeField F7(7);
  FpPoly f = poly_from(F7, {F7.from_int(-2), 0, 0, 1});
  int roots = 0;
  for (std::uint64_t x = 0; x < 7; ++x) {
    if (eval(F7, f, x) == 0) ++roots;
  }
  std::vector<int> expected;
  if (roots == 3) {
    expected = {1, 1, 1};
  } else if (roots == 1) {
    expected = {1, 2};
  } else {
    expected = {3};
  }
  CHECK(ddf_cycle_type(qp({-2, 0, 0, 1}), 7) == expected);

  CHECK_THROWS_AS(ddf_cycle_type(mul(Q, qp({-1, 1}), qp({-1, 1})), 5), BadPrime);
  CHECK_THROWS_AS(ddf_cycle_type(qp({-1, 0, 5}), 5), BadPrime);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly f2 = random_monic(rng, 2 + static_cast<int>(rng() % 5), 9);
    for (std::uint64_t p : {5ull, 11ull, 31ull}) {
      try {
        auto type = ddf_cycle_type(f2, p);
        int sum = 0;
        for (int d : type) sum += d;
        CHECK(sum == f2.deg());
      } catch (const BadPrime&) {
      }
    }
  }
}

TEST_CASE("binary square root") {
  auto bf = [&](std::initializer_list<long> c) {
    BinaryForm<Rationals> b = BinaryForm<Rationals>::zero(Q, 4);
    int i = 0;
    for (long x : c) b.c[static_cast<std::size_t>(i++)] = mpq_class(x);
    return b;
  };
  // (s^2 + s t)^2
  auto r = binary_square_root(Q, bf({1, 2, 1, 0, 0}));
  REQUIRE(r.has_value());
  CHECK(r->second == 1);
  // 3 (s^2 - t^2)^2 = 3 s^4 - 6 s^2 t^2 + 3 t^4
  r = binary_square_root(Q, bf({3, 0, -6, 0, 3}));
  REQUIRE(r.has_value());
  CHECK(r->second == 3);
  // s^4 + t^4: the three-coefficient system has no solution
  CHECK(!binary_square_root(Q, bf({1, 0, 0, 0, 1})).has_value());

  // property: a returned pair re-expands exactly
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryForm<Rationals> q2 = BinaryForm<Rationals>::zero(Q, 2);
    for (auto& x : q2.c) x = d(rng);
    if (q2.is_zero(Q)) continue;
    mpq_class gamma = d(rng);
    if (gamma == 0) gamma = 5;
    BinaryForm<Rationals> b = binary_mul(Q, q2, q2);
    for (auto& x : b.c) x *= gamma;
    auto rr = binary_square_root(Q, b);
    REQUIRE(rr.has_value());
    BinaryForm<Rationals> back = binary_mul(Q, rr->first, rr->first);
    for (auto& x : back.c) x *= rr->second;
    CHECK(binary_eq(Q, back, b));
  }
}

TEST_CASE("prime field and rational function field basics") {
  CHECK_THROWS_AS(PrimeField(2), InvalidInput);
  CHECK_THROWS_AS(PrimeField(9), InvalidInput);
  PrimeField F13(13);
  for (std::uint64_t a = 1; a < 13; ++a) CHECK(F13.mul(a, F13.inv(a)) == 1);

  FpRatFunc K(PrimeField(3), "t");
  auto t = K.from_poly(poly_x(K.base()));
  auto e = K.make(poly_x(K.base()), poly_from(K.base(), {1ull, 1ull}));  // t/(1+t)
  CHECK(K.eq(K.mul(e, K.inv(e)), K.one()));
  CHECK(fp_ratfunc_is_square(K, K.mul(t, t)));
  CHECK(!fp_ratfunc_is_square(K, t));
  // 2 is not a square mod 3
  CHECK(!fp_ratfunc_is_square(K, K.from_int(2)));
  CHECK(fp_ratfunc_is_square(K, K.from_int(4)));
}
