#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hexforge/construct.hpp"
#include "hexforge/fracfield.hpp"
#include "hexforge/hexlines.hpp"
#include "hexforge/kummer.hpp"

namespace hexforge {

using Json = nlohmann::json;

// Runtime-tagged field for the CLI boundary: "Q" | {"Fp": p} | {"Fp_t": p}.
using AnyField = std::variant<Rationals, PrimeField, FpRatFunc>;

AnyField field_from_json(const Json& j);
Json field_to_json(const AnyField& f);

// Coefficient encodings: Q as decimal "num/den" (or "num"), F_p as a residue
// string, F_p(t) as {"num": [...], "den": [...]} with residue strings from
// degree 0 upward.
Json elem_to_json(const Rationals& k, const mpq_class& a);
Json elem_to_json(const PrimeField& k, const std::uint64_t& a);
Json elem_to_json(const FpRatFunc& k, const FpRatFunc::Elem& a);
mpq_class elem_from_json(const Rationals& k, const Json& j);
std::uint64_t elem_from_json(const PrimeField& k, const Json& j);
FpRatFunc::Elem elem_from_json(const FpRatFunc& k, const Json& j);

template <Field K>
Json poly_to_json(const K& k, const Poly<K>& f, const Json& field_tag, const std::string& var) {
  Json coeffs = Json::array();
  for (const auto& c : f.c) coeffs.push_back(elem_to_json(k, c));
  return Json{{"field", field_tag}, {"var", var}, {"coeffs", coeffs}};
}

template <Field K>
Poly<K> poly_from_json(const K& k, const Json& j) {
  if (!j.contains("coeffs")) throw InvalidInput("polynomial JSON lacks coeffs");
  std::vector<typename K::Elem> c;
  for (const auto& cj : j.at("coeffs")) c.push_back(elem_from_json(k, cj));
  return poly_from(k, std::move(c));
}

template <Field K>
Json binary_to_json(const K& k, const BinaryForm<K>& b) {
  Json coeffs = Json::array();
  for (const auto& c : b.c) coeffs.push_back(elem_to_json(k, c));
  return Json{{"degree", b.degree}, {"coeffs", coeffs}};
}

template <Field K>
Json ternary_to_json(const K& k, const TernaryForm<K>& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms) {
    terms.push_back(Json{{"exp", Json::array({e[0], e[1], e[2]})}, {"coeff", elem_to_json(k, c)}});
  }
  return Json{{"degree", f.degree}, {"terms", terms}};
}

template <Field K>
TernaryForm<K> ternary_from_json(const K& k, const Json& j) {
  TernaryForm<K> f = TernaryForm<K>::zero(j.at("degree").get<int>());
  for (const auto& tj : j.at("terms")) {
    const auto& ej = tj.at("exp");
    ternary_addto(k, f, {ej.at(0).get<int>(), ej.at(1).get<int>(), ej.at(2).get<int>()},
                  elem_from_json(k, tj.at("coeff")));
  }
  return f;
}

Json plan_to_json(const KummerPlan& plan);
KummerPlan plan_from_json(const Json& j);

// Sextic input document: {"field":..., "F": <poly>, "c": <coeff>}.
template <Field K>
Json sextic_to_json(const K& k, const SexticInput<K>& in, const Json& field_tag) {
  return Json{{"field", field_tag},
              {"F", poly_to_json(k, in.F, field_tag, "T")},
              {"c", elem_to_json(k, in.c)}};
}

template <Field K>
SexticInput<K> sextic_from_json(const K& k, const Json& j) {
  SexticInput<K> in{poly_from_json<K>(k, j.at("F")), elem_from_json(k, j.at("c"))};
  validate_sextic(k, in);
  return in;
}

// Full construct output document for one sign.
template <Field K>
Json model_to_json(const K& k, const QuarticModel<K>& qm, const Json& field_tag, bool smooth) {
  const auto& b = qm.bundle;
  Json m = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(binary_to_json(k, b.M.entry[i][j]));
    m.push_back(row);
  }
  return Json{{"field", field_tag},
              {"sign", sign_name(b.sign)},
              {"F", poly_to_json(k, b.input.F, field_tag, "T")},
              {"c", elem_to_json(k, b.input.c)},
              {"g", binary_to_json(k, b.gh.g)},
              {"h", binary_to_json(k, b.gh.h)},
              {"M", m},
              {"Q0", ternary_to_json(k, b.Q0)},
              {"Q1", ternary_to_json(k, b.Q1)},
              {"Q2", ternary_to_json(k, b.Q2)},
              {"Q", ternary_to_json(k, qm.Q)},
              {"smooth", smooth}};
}

Json tower_elem_to_json(const TowerField& L, const TowerField::Elem& e);
Json hexad_to_json(const HexadReport& report);

}  // namespace hexforge
