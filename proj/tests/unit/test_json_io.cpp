#include <doctest.h>

#include "hexforge/fixtures.hpp"
#include "hexforge/json_io.hpp"
#include "hexforge/smooth.hpp"

using namespace hexforge;

namespace {
Rationals Q;
}

TEST_CASE("field tags round-trip") {
  for (const Json tag : {Json("Q"), Json{{"Fp", 11}}, Json{{"Fp_t", 3}}}) {
    AnyField f = field_from_json(tag);
    CHECK(field_to_json(f) == tag);
  }
  CHECK_THROWS_AS(field_from_json(Json("R")), InvalidInput);
}

TEST_CASE("polynomial round-trips per field") {
  QPoly f = poly_from(Q, {mpq_class(1, 2), mpq_class(-3), mpq_class(0), mpq_class(7)});
  Json j = poly_to_json(Q, f, "Q", "T");
  CHECK(poly_eq(Q, poly_from_json(Q, j), f));
  CHECK(j.at("coeffs")[0] == "1/2");
  CHECK(j.at("coeffs")[1] == "-3");

  PrimeField F7(7);
  FpPoly g = poly_from(F7, {3ull, 0ull, 6ull});
  CHECK(poly_eq(F7, poly_from_json(F7, poly_to_json(F7, g, Json{{"Fp", 7}}, "T")), g));

  FpRatFunc K(PrimeField(3), "t");
  Poly<FpRatFunc> h;
  h.c = {K.make(poly_x(K.base()), poly_from(K.base(), {1ull, 1ull})), K.one()};
  CHECK(poly_eq(K, poly_from_json(K, poly_to_json(K, h, Json{{"Fp_t", 3}}, "T")), h));
}

TEST_CASE("plan round-trip") {
  KummerPlan plan;
  plan.orbits.push_back(RationalOrbit{{mpq_class(2), mpq_class(3)}});
  plan.orbits.push_back(FieldOrbit{poly_from(Q, {mpq_class(-2), mpq_class(0), mpq_class(0), mpq_class(0), mpq_class(1)}),
                                   poly_x(Q), poly_const(Q, mpq_class(1))});
  plan.seed = 42;
  KummerPlan back = plan_from_json(plan_to_json(plan));
  CHECK(back.seed == 42);
  REQUIRE(back.orbits.size() == 2);
  CHECK(std::get<RationalOrbit>(back.orbits[0]).entries == std::get<RationalOrbit>(plan.orbits[0]).entries);
  CHECK(poly_eq(Q, std::get<FieldOrbit>(back.orbits[1]).m, std::get<FieldOrbit>(plan.orbits[1]).m));
}

TEST_CASE("model and ternary round-trip") {
  SexticInput<Rationals> in{poly_from(Q, {mpq_class(1), mpq_class(-5), mpq_class(0), mpq_class(9),
                                          mpq_class(-2), mpq_class(-3), mpq_class(1)}),
                            mpq_class(1)};
  auto qm = quartic(Q, in, Sign::Minus);
  Json j = model_to_json(Q, qm, "Q", true);
  CHECK(j.at("sign") == "minus");
  CHECK(j.at("smooth") == true);
  TernaryForm<Rationals> back = ternary_from_json(Q, j.at("Q"));
  CHECK(ternary_eq(Q, back, qm.Q));
  SexticInput<Rationals> in_back = sextic_from_json<Rationals>(Q, j);
  CHECK(poly_eq(Q, in_back.F, in.F));
  CHECK(in_back.c == in.c);
}

TEST_CASE("hexad report serializes with towers and certificates") {
  SexticInput<Rationals> in{poly_from(Q, {mpq_class(1), mpq_class(-5), mpq_class(0), mpq_class(9),
                                          mpq_class(-2), mpq_class(-3), mpq_class(1)}),
                            mpq_class(1)};
  HexadReport rep = hexad_report(in, Sign::Plus);
  Json j = hexad_to_json(rep);
  CHECK(j.at("total_lines") == 12);
  CHECK(j.at("lines_distinct") == true);
  REQUIRE(j.at("fibres").size() == rep.fibres.size());
  for (const auto& fj : j.at("fibres")) {
    CHECK(fj.contains("m"));
    CHECK(fj.contains("d"));
    CHECK(fj.contains("line_plus"));
    CHECK(fj.contains("certificate_minus"));
  }
}

TEST_CASE("corrupted fixture fails a structure or smoothness check") {
  auto fixtures = builtin_q_fixtures();
  REQUIRE(!fixtures.empty());
  auto bad = fixtures[0].quartic;
  // degree structure violation is caught by the form invariant
  CHECK_THROWS_AS(ternary_set(Q, bad, {1, 1, 1}, mpq_class(1)), InvalidInput);
  // a coefficient change that forces a singular curve is caught by smoothness:
  // replace the quartic by a perfect square
  TernaryForm<Rationals> conic = TernaryForm<Rationals>::zero(2);
  ternary_set(Q, conic, {2, 0, 0}, mpq_class(1));
  ternary_set(Q, conic, {0, 2, 0}, mpq_class(1));
  ternary_set(Q, conic, {0, 0, 2}, mpq_class(1));
  CHECK(!smoothness(Q, ternary_mul(Q, conic, conic)));
}
