#include <doctest.h>

#include <array>
#include <random>
#include <set>
#include <string>

#include "hexforge/frobenius.hpp"

using namespace hexforge;

namespace {

Rationals Q;

QPoly qp(std::initializer_list<long> coeffs) {
  std::vector<mpq_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return poly_from(Q, std::move(c));
}

const QPoly kExample1F = qp({25, -150, 335, -340, 152, -24, 1});

KummerPlan example1_plan() {
  KummerPlan plan;
  plan.orbits.push_back(FieldOrbit{kExample1F, poly_x(Q), poly_const(Q, mpq_class(1))});
  return plan;
}

// The six 2-subsets of {1..4} in the order 12, 13, 14, 23, 24, 34.
int pair_index(int a, int b) {
  static const int table[5][5] = {{0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 2},
                                  {0, 0, 0, 3, 4},
                                  {0, 1, 3, 0, 5},
                                  {0, 2, 4, 5, 0}};
  return a < b ? table[a][b] : table[b][a];
}

Perm two_sets_action(std::array<int, 5> sigma) {
  Perm g(6);
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) g[static_cast<std::size_t>(pair_index(a, b))] = pair_index(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]);
  }
  return g;
}

}  // namespace

TEST_CASE("wreath census sanity: 46080 and 23040") {
  auto bound = group_model_from_plan(example1_plan());
  CHECK(bound.order == 23040);
  auto full = group_model_from_generators(bound.generators, false);
  CHECK(full.order == 46080);
  // the full wreath is consistent with anything a sextic can produce
  auto samples = frobenius_sample(kExample1F, 200);
  CHECK(consistency(samples, full).consistent);
  // the trivial group is not
  GroupModel trivial = group_model_from_generators({}, false);
  CHECK(trivial.order == 1);
  CHECK(!consistency(samples, trivial).consistent);
}

TEST_CASE("sampling smoke inputs") {
  // degree-2 input: 2 is a square mod 7 (3^2 = 9 = 2)
  auto samples = frobenius_sample(qp({-2, 0, 1}), 10);
  bool found7 = false;
  for (const auto& s : samples) {
    int sum_f = 0, sum_f2 = 0;
    for (int d : s.type_F) sum_f += d;
    for (int d : s.type_F2) sum_f2 += d;
    CHECK(sum_f == 2);
    CHECK(sum_f2 == 4);
    if (s.p == 7) {
      found7 = true;
      CHECK(s.type_F == std::vector<int>{1, 1});
    }
  }
  CHECK(found7);

  std::vector<mpq_class> c(7, mpq_class(0));
  c[0] = 25;
  c[6] = 1;
  for (const auto& s : frobenius_sample(poly_from(Q, c), 100)) {
    int sum_f = 0, sum_f2 = 0;
    for (int d : s.type_F) sum_f += d;
    for (int d : s.type_F2) sum_f2 += d;
    CHECK(sum_f == 6);
    CHECK(sum_f2 == 12);
  }
}

TEST_CASE("printed sextic: F-types come from the 2-sets action census") {
  // census of the alternating 4-point group acting on 2-sets, enumerated
  // directly as the independent oracle
  std::vector<Perm> gens = {two_sets_action({0, 2, 1, 4, 3}), two_sets_action({0, 2, 3, 1, 4})};
  std::set<std::vector<int>> census;
  {
    std::set<std::vector<int>> seen;
    std::vector<Perm> stack{perm_identity(6)};
    std::set<std::string> codes;
    auto enc = [](const Perm& p) {
      std::string s;
      for (int x : p) s += static_cast<char>('0' + x);
      return s;
    };
    codes.insert(enc(stack[0]));
    while (!stack.empty()) {
      Perm g = stack.back();
      stack.pop_back();
      census.insert(perm_cycle_type(g));
      for (const auto& s : gens) {
        Perm h = perm_compose(s, g);
        if (codes.insert(enc(h)).second) stack.push_back(h);
      }
    }
  }
  CHECK(census == std::set<std::vector<int>>{{1, 1, 1, 1, 1, 1}, {1, 1, 2, 2}, {3, 3}});
  for (const auto& s : frobenius_sample(kExample1F, 1000)) {
    CHECK(census.count(s.type_F) == 1);
  }
}

TEST_CASE("printed sextic: order-48 candidate group is consistent") {
  // Twisted lifts of the two 2-sets generators plus the kernel flips
  // {delta_i + delta_j : delta even}; extracted once as the lexicographically
  // least lifts inside the unique order-48 subgroup whose census covers all
  // sampled types, then frozen here.
  std::vector<Perm> gens = {
      {0, 1, 8, 9, 6, 7, 5, 4, 3, 2, 10, 11},
      {6, 7, 0, 1, 8, 9, 2, 3, 10, 11, 4, 5},
  };
  auto flip = [&](unsigned mask) {
    Perm g = perm_identity(12);
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) std::swap(g[static_cast<std::size_t>(2 * i)], g[static_cast<std::size_t>(2 * i + 1)]);
    }
    return g;
  };
  gens.push_back(flip(0b110011));
  gens.push_back(flip(0b011110));
  auto model = group_model_from_generators(gens, false);
  CHECK(model.order == 48);
  auto samples = frobenius_sample(kExample1F, 1000);
  auto rep = consistency(samples, model);
  CHECK(rep.consistent);
  CHECK(rep.coverage == doctest::Approx(1.0));
  CHECK(rep.census_types == 5);
}

TEST_CASE("pair refinement invariant") {
  CHECK(pair_refinement_ok({1, 2, 3}, {1, 1, 2, 2, 6}));
  CHECK(pair_refinement_ok({1, 2, 3}, {2, 4, 3, 3}));
  CHECK(!pair_refinement_ok({1, 2, 3}, {1, 1, 1, 3, 6}));
  CHECK(!pair_refinement_ok({6}, {12, 1}));
  for (const auto& s : frobenius_sample(kExample1F, 500)) {
    CHECK(pair_refinement_ok(s.type_F, s.type_F2));
  }
}

TEST_CASE("even_check") {
  std::vector<mpq_class> c(7, mpq_class(0));
  c[0] = 25;
  c[6] = 1;
  CHECK(even_check(poly_from(Q, c)));
  c[0] = 3;
  CHECK(!even_check(poly_from(Q, c)));
  // holds for every input with square constant term
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> d(-10, 10);
  int done = 0;
  while (done < 50) {
    std::vector<mpq_class> cc(7);
    mpq_class root = d(rng);
    if (root == 0) continue;
    cc[0] = root * root;
    for (int i = 1; i < 6; ++i) cc[static_cast<std::size_t>(i)] = d(rng);
    cc[6] = 1;
    QPoly F = poly_from(Q, std::move(cc));
    if (!is_separable(Q, F)) continue;
    CHECK(even_check(F));
    ++done;
  }
}
