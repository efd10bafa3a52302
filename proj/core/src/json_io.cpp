#include "hexforge/json_io.hpp"

namespace hexforge {

namespace {
Rationals Q;
}

AnyField field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Rationals{};
  if (j.is_object() && j.contains("Fp")) return PrimeField(j.at("Fp").get<std::uint64_t>());
  if (j.is_object() && j.contains("Fp_t")) {
    return FpRatFunc(PrimeField(j.at("Fp_t").get<std::uint64_t>()), "t");
  }
  throw InvalidInput("unrecognized field tag");
}

Json field_to_json(const AnyField& f) {
  if (std::holds_alternative<Rationals>(f)) return "Q";
  if (const auto* fp = std::get_if<PrimeField>(&f)) return Json{{"Fp", fp->p()}};
  return Json{{"Fp_t", std::get<FpRatFunc>(f).base().p()}};
}

Json elem_to_json(const Rationals&, const mpq_class& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_str();
}

Json elem_to_json(const PrimeField&, const std::uint64_t& a) { return std::to_string(a); }

Json elem_to_json(const FpRatFunc& k, const FpRatFunc::Elem& a) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : a.num.c) num.push_back(std::to_string(c));
  for (const auto& c : a.den.c) den.push_back(std::to_string(c));
  (void)k;
  return Json{{"num", num}, {"den", den}};
}

mpq_class elem_from_json(const Rationals&, const Json& j) {
  if (!j.is_string()) throw InvalidInput("rational coefficients are decimal strings");
  return Rationals::parse(j.get<std::string>());
}

std::uint64_t elem_from_json(const PrimeField& k, const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>() % k.p();
  if (!j.is_string()) throw InvalidInput("prime field coefficients are residue strings");
  mpz_class z;
  if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad residue literal");
  return k.from_mpz(z);
}

FpRatFunc::Elem elem_from_json(const FpRatFunc& k, const Json& j) {
  if (j.is_string() || j.is_number_unsigned()) {
    // plain residue: a constant rational function
    return k.from_poly(poly_const(k.base(), elem_from_json(k.base(), j)));
  }
  if (!j.is_object() || !j.contains("num")) {
    throw InvalidInput("function field coefficients are {num, den} objects");
  }
  std::vector<std::uint64_t> num, den;
  for (const auto& cj : j.at("num")) num.push_back(elem_from_json(k.base(), cj));
  if (j.contains("den")) {
    for (const auto& cj : j.at("den")) den.push_back(elem_from_json(k.base(), cj));
  } else {
    den.push_back(1);
  }
  return k.make(poly_from(k.base(), std::move(num)), poly_from(k.base(), std::move(den)));
}

Json plan_to_json(const KummerPlan& plan) {
  Json orbits = Json::array();
  for (const auto& orbit : plan.orbits) {
    if (const auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      Json entries = Json::array();
      for (const auto& a : ro->entries) entries.push_back(elem_to_json(Q, a));
      orbits.push_back(Json{{"rational", entries}});
    } else {
      const auto& fo = std::get<FieldOrbit>(orbit);
      orbits.push_back(Json{{"m", poly_to_json(Q, fo.m, "Q", "x")},
                            {"a", poly_to_json(Q, fo.a, "Q", "x")},
                            {"t", poly_to_json(Q, fo.t, "Q", "x")}});
    }
  }
  return Json{{"orbits", orbits}, {"seed", plan.seed}};
}

KummerPlan plan_from_json(const Json& j) {
  KummerPlan plan;
  if (!j.contains("orbits")) throw InvalidInput("plan JSON lacks orbits");
  for (const auto& oj : j.at("orbits")) {
    if (oj.contains("rational")) {
      RationalOrbit ro;
      for (const auto& aj : oj.at("rational")) ro.entries.push_back(elem_from_json(Q, aj));
      plan.orbits.push_back(std::move(ro));
    } else {
      FieldOrbit fo{poly_from_json(Q, oj.at("m")), poly_from_json(Q, oj.at("a")),
                    poly_from_json(Q, oj.at("t"))};
      plan.orbits.push_back(std::move(fo));
    }
  }
  if (j.contains("seed")) plan.seed = j.at("seed").get<std::uint64_t>();
  validate_plan(plan);
  return plan;
}

Json tower_elem_to_json(const TowerField& L, const TowerField::Elem& e) {
  Json re = Json::array(), im = Json::array();
  for (const auto& c : e.re.c) re.push_back(elem_to_json(Q, c));
  for (const auto& c : e.im.c) im.push_back(elem_to_json(Q, c));
  (void)L;
  return Json{{"re", re}, {"im", im}};
}

Json hexad_to_json(const HexadReport& report) {
  Json fibres = Json::array();
  for (const auto& fr : report.fibres) {
    const TowerField& L = fr.fibre.tower;
    auto line_json = [&](const LinearForm<TowerField>& line) {
      Json a = Json::array();
      for (const auto& c : line.a) a.push_back(tower_elem_to_json(L, c));
      return a;
    };
    auto cert_json = [&](const BitangencyCertificate& cert) {
      Json q = Json::array();
      for (const auto& c : cert.q.c) q.push_back(tower_elem_to_json(L, c));
      return Json{{"q", q}, {"gamma", tower_elem_to_json(L, cert.gamma)}};
    };
    fibres.push_back(Json{
        {"m", poly_to_json(Q, fr.fibre.m, "Q", "x")},
        {"embeddings", fr.fibre.embeddings},
        {"d", tower_elem_to_json(L, fr.fibre.d)},
        {"sqrt_floor", fr.fibre.used_sqrt_floor},
        {"tower_degree", fr.tower_degree_over_Q},
        {"line_plus", line_json(fr.fibre.line_plus)},
        {"line_minus", line_json(fr.fibre.line_minus)},
        {"certificate_plus", cert_json(fr.cert_plus)},
        {"certificate_minus", cert_json(fr.cert_minus)},
    });
  }
  return Json{{"fibres", fibres},
              {"total_lines", report.total_lines},
              {"lines_distinct", report.lines_distinct}};
}

}  // namespace hexforge
