#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "hexforge/fixtures.hpp"
#include "hexforge/frobenius.hpp"
#include "hexforge/hexlines.hpp"
#include "hexforge/json_io.hpp"
#include "hexforge/smooth.hpp"
#include "hexforge/weyl.hpp"

namespace {

using namespace hexforge;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNotA12 = 2;
constexpr int kExitNotSmooth = 3;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string out_name(const std::string& base, Sign sign) {
  const std::string suffix = std::string(".") + sign_name(sign) + ".json";
  const auto dot = base.rfind(".json");
  if (dot != std::string::npos && dot == base.size() - 5) {
    return base.substr(0, dot) + suffix;
  }
  return base + suffix;
}

struct ConstructOptions {
  std::string input;
  std::string out = "model.json";
  std::string sign = "both";
  int max_resamples = 5;
  std::uint64_t seed = 0;
};

template <Field K>
int construct_for_field(const K& k, const SexticInput<K>& in, const Json& field_tag,
                        const ConstructOptions& opt, bool resampleable, const KummerPlan* plan) {
  std::vector<Sign> signs;
  if (opt.sign == "both") {
    signs = {Sign::Plus, Sign::Minus};
  } else if (opt.sign == "plus" || opt.sign == "+") {
    signs = {Sign::Plus};
  } else if (opt.sign == "minus" || opt.sign == "-") {
    signs = {Sign::Minus};
  } else {
    throw InvalidInput("--sign must be both, plus, or minus");
  }

  SexticInput<K> current = in;
  KummerPlan current_plan;
  if (plan) current_plan = *plan;
  std::mt19937_64 rng(opt.seed);

  for (int attempt = 0;; ++attempt) {
    bool all_smooth = true;
    std::vector<std::pair<Sign, QuarticModel<K>>> models;
    for (Sign s : signs) {
      QuarticModel<K> qm = quartic(k, current, s);
      all_smooth = all_smooth && smoothness(k, qm.Q);
      models.emplace_back(s, std::move(qm));
    }
    if (all_smooth || !resampleable || attempt >= opt.max_resamples) {
      for (auto& [s, qm] : models) {
        const bool smooth = smoothness(k, qm.Q);
        const std::string path = signs.size() == 2 ? out_name(opt.out, s) : opt.out;
        save_json(path, model_to_json(k, qm, field_tag, smooth));
        std::cout << path << ": sign " << sign_name(s) << ", smooth " << (smooth ? "yes" : "no")
                  << "\n";
      }
      return all_smooth ? kExitOk : kExitNotSmooth;
    }
    // resample the plan and reassemble (plans are rational-field only)
    if constexpr (std::is_same_v<K, Rationals>) {
      current_plan = resample(current_plan, rng);
      try {
        current = assemble_F(current_plan);
      } catch (const ResampleNeeded&) {
        continue;
      }
    }
  }
}

int cmd_construct(const ConstructOptions& opt) {
  const Json j = load_json(opt.input);
  if (j.contains("orbits")) {
    KummerPlan plan = plan_from_json(j);
    std::mt19937_64 rng(opt.seed ? opt.seed : plan.seed);
    SexticInput<Rationals> in{};
    int attempt = 0;
    for (;; ++attempt) {
      try {
        in = assemble_F(plan);
        break;
      } catch (const ResampleNeeded&) {
        if (attempt >= opt.max_resamples) throw;
        plan = resample(plan, rng);
      }
    }
    return construct_for_field(Rationals{}, in, "Q", opt, true, &plan);
  }
  if (!j.contains("F")) throw InvalidInput("input must contain either orbits or F");
  const AnyField field = field_from_json(j.contains("field") ? j.at("field") : Json("Q"));
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        SexticInput<K> in = sextic_from_json<K>(k, j);
        return construct_for_field(k, in, field_to_json(field), opt, false, nullptr);
      },
      field);
}

int cmd_bitangents(const std::string& model_path, const std::string& out_path, int jobs) {
  const Json j = load_json(model_path);
  const AnyField field = field_from_json(j.at("field"));
  if (!std::holds_alternative<Rationals>(field)) {
    throw InvalidInput("bitangent certification runs over Q models");
  }
  Rationals k;
  SexticInput<Rationals> in{poly_from_json(k, j.at("F")), elem_from_json(k, j.at("c"))};
  validate_sextic(k, in);
  const Sign sign = j.at("sign").get<std::string>() == "plus" ? Sign::Plus : Sign::Minus;
  HexadReport report = hexad_report(in, sign, jobs);
  save_json(out_path, hexad_to_json(report));
  std::cout << out_path << ": " << report.total_lines << " certified lines over "
            << report.fibres.size() << " fibre classes\n";
  return kExitOk;
}

int cmd_frobenius(const std::string& sextic_path, const std::string& group_path,
                  std::uint64_t primes, int jobs) {
  Rationals k;
  const Json fj = load_json(sextic_path);
  QPoly F = poly_from_json(k, fj.contains("F") ? fj.at("F") : fj);

  GroupModel model;
  const Json gj = load_json(group_path);
  if (gj.contains("orbits")) {
    model = group_model_from_plan(plan_from_json(gj));
  } else if (gj.contains("generators")) {
    std::vector<Perm> gens;
    for (const auto& pj : gj.at("generators")) {
      Perm g;
      for (const auto& x : pj) g.push_back(x.get<int>());
      gens.push_back(std::move(g));
    }
    model = group_model_from_generators(std::move(gens),
                                        gj.value("restrict_even", false));
  } else {
    throw InvalidInput("group file must contain orbits or generators");
  }

  int skipped = 0;
  auto samples = frobenius_sample(F, primes, jobs, &skipped);
  bool refinement = true;
  for (const auto& s : samples) refinement = refinement && pair_refinement_ok(s.type_F, s.type_F2);
  const auto rep = consistency(samples, model);

  Json out{{"samples", samples.size()},
           {"skipped_bad_primes", skipped},
           {"model_order", model.order},
           {"census_types", rep.census_types},
           {"observed_types", rep.observed_types},
           {"coverage", rep.coverage},
           {"consistent", rep.consistent},
           {"pair_refinement", refinement},
           {"even_check", even_check(F)},
           {"verdict", rep.consistent ? "consistent with the model" : "inconsistent with the model"}};
  if (!rep.violating_primes.empty()) out["violating_primes"] = rep.violating_primes;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_groups(int degree, const std::string& report_format) {
  Json out;
  if (degree == 3) {
    WeylAction e6 = weyl_action(3);
    PermGroup we6(static_cast<int>(e6.classes.size()), e6.gens);
    out = Json{{"degree", 3}, {"exceptional_classes", e6.classes.size()}, {"weyl_order", we6.order()}};
  } else if (degree == 2) {
    WeylAction e7 = weyl_action(2);
    PermGroup we7(static_cast<int>(e7.classes.size()), e7.gens);
    GeiserBlocks gb = geiser_blocks(e7);
    PermGroup g28(28, gb.gens28);
    PiMap pm = pi_map(e7, gb);
    U63Report u = u63_structure(e7, gb, pm);
    E6Report e = e6_applications(e7, gb, pm);
    out = Json{{"degree", 2},
               {"exceptional_classes", e7.classes.size()},
               {"weyl_order", we7.order()},
               {"blocks", gb.blocks.size()},
               {"block_quotient_order", g28.order()},
               {"quotient_dimension", 6},
               {"steiner_fibres", pm.fibres.size()},
               {"pairs", pm.pairs.size()},
               {"u63",
                Json{{"order", u.u63_order},
                     {"index", u.index},
                     {"orbits_on_28", u.orbit_sizes_28},
                     {"faithful_on_12", u.faithful_on_12},
                     {"image12_order", u.image12_order},
                     {"preserves_six_pairs", u.preserves_six_pairs},
                     {"image12_even", u.image12_even}}},
               {"e6",
                Json{{"weyl_order", e.we6_order},
                     {"lines", e.lines},
                     {"double_sixes", e.double_sixes},
                     {"uds_order", e.uds_order},
                     {"uds_index_in_we7", e.uds_index_in_we7},
                     {"uds_orbits_27", e.uds_orbits_27},
                     {"uds_orbits_56", e.uds_orbits_56},
                     {"uds_in_u63_conjugate", e.uds_image_in_u63_conjugate},
                     {"ul_order", e.ul_order},
                     {"ul_index", e.line_stab_index},
                     {"ul_orbits_27", e.ul_orbits_27},
                     {"ul_orbits_56", e.ul_orbits_56},
                     {"ul_in_u63_conjugate", e.ul_image_in_u63_conjugate}}}};
  } else {
    throw InvalidInput("--degree must be 2 or 3");
  }
  if (report_format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : out.items()) std::cout << key << ": " << value.dump() << "\n";
  }
  return kExitOk;
}

int cmd_twist(const std::string& model_path, const std::string& lambda_str,
              const std::string& out_path) {
  const Json j = load_json(model_path);
  const AnyField field = field_from_json(j.at("field"));
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        TernaryForm<K> Q4 = ternary_from_json<K>(k, j.at("Q"));
        const auto lambda = elem_from_json(k, Json(lambda_str));
        DelPezzoModel<K> model = twist(k, Q4, lambda);
        DelPezzoModel<K> trivial{k.one(), Q4};
        Json out{{"field", field_to_json(field)},
                 {"lambda", elem_to_json(k, model.lambda)},
                 {"Q", ternary_to_json(k, model.Q)},
                 {"equivalent_to_trivial", twist_equivalent(k, model, trivial)}};
        save_json(out_path, out);
        std::cout << out_path << ": lambda recorded\n";
        return kExitOk;
      },
      field);
}

int cmd_verify_fixtures() {
  bool all_smooth = true;
  for (const auto& o : verify_fixtures()) {
    const char* match = o.diagnostic_match_plus   ? "matches +c output"
                        : o.diagnostic_match_minus ? "matches -c output"
                                                   : "no match in search space";
    std::cout << (o.smooth ? "[ok]   " : "[FAIL] ") << o.label << ": smooth=" << (o.smooth ? "yes" : "no")
              << ", diagnostic: " << match << "\n       " << o.diagnostic << "\n";
    all_smooth = all_smooth && o.smooth;
  }
  return all_smooth ? kExitOk : kExitNotSmooth;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hexforge: plane quartics with a prescribed Steiner hexad, exact certificates,\n"
               "and the finite-group verifications behind them"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain visible after a subcommand name

  std::uint64_t seed = 0;
  int jobs = 1;
  std::uint64_t primes = 1000;
  int max_resamples = 5;
  app.add_option("--seed", seed, "seed for all randomized steps");
  app.add_option("--jobs", jobs, "worker threads for frobenius sampling and per-fibre work");
  app.add_option("--primes", primes, "prime bound for frobenius sampling");
  app.add_option("--max-resamples", max_resamples, "resampling attempts before giving up");

  ConstructOptions copt;
  auto* construct_cmd = app.add_subcommand("construct", "build the quartic pair from a plan or sextic");
  construct_cmd->add_option("--input", copt.input, "plan.json or sextic.json")->required();
  construct_cmd->add_option("--out", copt.out, "output model path (suffixed per sign for both)");
  construct_cmd->add_option("--sign", copt.sign, "both | plus | minus");

  std::string model_path, out_path = "hexad.json";
  auto* bit_cmd = app.add_subcommand("bitangents", "certify the twelve hexad bitangents of a model");
  bit_cmd->add_option("--model", model_path, "model.json from construct")->required();
  bit_cmd->add_option("--out", out_path, "output hexad path");

  std::string sextic_path, group_path;
  auto* frob_cmd = app.add_subcommand("frobenius", "cycle-type statistics against a group model");
  frob_cmd->add_option("--sextic", sextic_path, "sextic.json (or bare polynomial)")->required();
  frob_cmd->add_option("--group", group_path, "plan.json or generators.json")->required();

  int degree = 2;
  std::string report_format = "json";
  auto* groups_cmd = app.add_subcommand("groups", "lattice and Weyl-group verification report");
  groups_cmd->add_option("--degree", degree, "del Pezzo degree: 2 or 3");
  groups_cmd->add_option("--report", report_format, "json | text");

  std::string lambda_str = "1", twist_model, twist_out = "twisted.json";
  auto* twist_cmd = app.add_subcommand("twist", "record a quadratic twist of a model");
  twist_cmd->add_option("--model", twist_model, "model.json")->required();
  twist_cmd->add_option("--lambda", lambda_str, "twisting scalar (field coefficient literal)");
  twist_cmd->add_option("--out", twist_out, "output path");

  app.add_subcommand("verify-fixtures", "smoothness and normalization diagnostics for bundled curves");

  CLI11_PARSE(app, argc, argv);

  try {
    copt.seed = seed;
    copt.max_resamples = max_resamples;
    if (construct_cmd->parsed()) return cmd_construct(copt);
    if (bit_cmd->parsed()) return cmd_bitangents(model_path, out_path, jobs);
    if (frob_cmd->parsed()) return cmd_frobenius(sextic_path, group_path, primes, jobs);
    if (groups_cmd->parsed()) return cmd_groups(degree, report_format);
    if (twist_cmd->parsed()) return cmd_twist(twist_model, lambda_str, twist_out);
    return cmd_verify_fixtures();
  } catch (const NotA12Compatible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotA12;
  } catch (const NotSmooth& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotSmooth;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
