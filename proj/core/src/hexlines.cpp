#include "hexforge/hexlines.hpp"

#include <algorithm>
#include <future>

#include "hexforge/factor.hpp"
#include "hexforge/smooth.hpp"

namespace hexforge {

namespace {

Rationals Q;

TowerField::Elem eval_at(const TowerField& L, const QPoly& f, const TowerField::Elem& x) {
  TowerField::Elem r = L.zero();
  for (int i = f.deg(); i >= 0; --i) {
    r = L.add(L.mul(r, x), L.from_rational(f.c[static_cast<std::size_t>(i)]));
  }
  return r;
}

TernaryForm<TowerField> lift_ternary(const TowerField& L, const TernaryForm<Rationals>& f) {
  TernaryForm<TowerField> out = TernaryForm<TowerField>::zero(f.degree);
  for (const auto& [e, c] : f.terms) out.terms[e] = L.from_rational(c);
  return out;
}

// Scale so the first nonzero coefficient (T0, T1, T2 order) becomes 1;
// returns the divisor applied.
TowerField::Elem normalize_line(const TowerField& L, LinearForm<TowerField>& line) {
  for (auto& a : line.a) {
    if (L.is_zero(a)) continue;
    const TowerField::Elem unit = a;
    const TowerField::Elem inv = L.inv(unit);
    for (auto& b : line.a) b = L.mul(b, inv);
    return unit;
  }
  throw InternalError("zero line cannot be normalized");
}

}  // namespace

SplitFibre split_fibre(const ConicBundleModel<Rationals>& model, const QPoly& m) {
  if (m.deg() < 1) throw InvalidInput("fibre factor must have positive degree");
  if (!rem(Q, model.input.F, m).is_zero()) throw InvalidInput("factor does not divide F");

  TowerField first(m);
  const TowerField::Elem t0 = first.gen();
  const TowerField::Elem t0sq = first.mul(t0, t0);
  // M(1, t0) entries relative to (T0, T1, T2).
  const TowerField::Elem m11 = first.sub(t0sq, t0);
  const TowerField::Elem m12 = t0;
  const TowerField::Elem m13 = eval_at(first, binary_dehomogenize(Q, model.gh.g), t0);
  const TowerField::Elem m22 = first.one();
  const TowerField::Elem m23 = t0sq;
  const TowerField::Elem m33 = eval_at(first, binary_dehomogenize(Q, model.gh.h), t0);

  // Complete the square at T1 (its diagonal entry is 1):
  //   q = (T1 + m12 T0 + m23 T2)^2 + alpha T0^2 + beta T0 T2 + gamma T2^2.
  const TowerField::Elem alpha = first.sub(m11, first.mul(m12, m12));
  const TowerField::Elem beta =
      first.mul(first.from_int(2), first.sub(m13, first.mul(m12, m23)));
  const TowerField::Elem gamma = first.sub(m33, first.mul(m23, m23));
  if (first.is_zero(alpha)) throw InternalError("degenerate pivot: rank of M(1,t0) below 2");
  const TowerField::Elem disc =
      first.sub(first.mul(beta, beta),
                first.mul(first.from_int(4), first.mul(alpha, gamma)));
  if (!first.is_zero(disc)) throw InternalError("rank of M(1,t0) is not 2");
  // alpha = -t0, so the residual rank-one form is -t0 * (T0 + beta/(2 alpha) T2)^2
  // and the conic splits over the square root of d = t0.
  const TowerField::Elem d = first.neg(alpha);
  if (!first.eq(d, t0)) throw InternalError("completed square does not reproduce t0");
  const TowerField::Elem slope =
      first.mul(beta, first.inv(first.mul(first.from_int(2), alpha)));

  const auto witness = tower_sqrt(first, d);
  const bool need_floor = !witness.has_value();
  TowerField tower = need_floor ? TowerField(m, poly_x(Q)) : first;
  auto lift = [&](const TowerField::Elem& e) {
    return need_floor ? TowerField::Elem{e.re, {}} : e;
  };
  const TowerField::Elem w = need_floor ? tower.sqrt_gen() : *witness;

  // l_pm = (T1 + m12 T0 + m23 T2) -+ w * (T0 + slope T2)
  LinearForm<TowerField> lp, lm;
  lp.a = {tower.sub(lift(m12), w), tower.one(), tower.sub(lift(m23), tower.mul(w, lift(slope)))};
  lm.a = {tower.add(lift(m12), w), tower.one(), tower.add(lift(m23), tower.mul(w, lift(slope)))};

  SplitFibre out{m,     m.deg(), tower, lift(d), need_floor, lp, lm,
                 tower.one(), TernaryForm<TowerField>::zero(2)};
  // Fibre conic over the tower for the re-expansion invariant.
  auto& conic = out.fibre_conic;
  ternary_set(tower, conic, {2, 0, 0}, lift(m11));
  ternary_set(tower, conic, {0, 2, 0}, lift(m22));
  ternary_set(tower, conic, {0, 0, 2}, lift(m33));
  ternary_set(tower, conic, {1, 1, 0}, tower.mul(tower.from_int(2), lift(m12)));
  ternary_set(tower, conic, {1, 0, 1}, tower.mul(tower.from_int(2), lift(m13)));
  ternary_set(tower, conic, {0, 1, 1}, tower.mul(tower.from_int(2), lift(m23)));

  const TowerField::Elem up = normalize_line(tower, out.line_plus);
  const TowerField::Elem um = normalize_line(tower, out.line_minus);
  out.product_unit = tower.mul(up, um);

  bool proportional = true;
  for (int i = 0; i < 3; ++i) {
    if (!tower.eq(out.line_plus.a[static_cast<std::size_t>(i)],
                  out.line_minus.a[static_cast<std::size_t>(i)])) {
      proportional = false;
      break;
    }
  }
  if (proportional) throw InternalError("fibre lines are proportional");

  // product_unit * (l+ l-) = conic, exactly.
  TernaryForm<TowerField> prod = ternary_mul(
      tower, linear_to_ternary(tower, out.line_plus), linear_to_ternary(tower, out.line_minus));
  prod = ternary_scale(tower, prod, out.product_unit);
  if (!ternary_eq(tower, prod, conic)) throw InternalError("fibre line product mismatch");
  return out;
}

std::optional<BitangencyCertificate> bitangency_certificate(const TowerField& L,
                                                            const TernaryForm<Rationals>& Q4,
                                                            const LinearForm<TowerField>& line) {
  bool all_zero = true;
  for (const auto& a : line.a) all_zero = all_zero && L.is_zero(a);
  if (all_zero) throw InvalidInput("zero line");

  BitangencyCertificate cert;
  const auto& a = line.a;
  if (!L.is_zero(a[0])) {
    const auto inv = L.inv(a[0]);
    cert.p1 = {L.neg(L.mul(a[1], inv)), L.one(), L.zero()};
    cert.p2 = {L.neg(L.mul(a[2], inv)), L.zero(), L.one()};
  } else if (!L.is_zero(a[1])) {
    const auto inv = L.inv(a[1]);
    cert.p1 = {L.one(), L.neg(L.mul(a[0], inv)), L.zero()};
    cert.p2 = {L.zero(), L.neg(L.mul(a[2], inv)), L.one()};
  } else {
    cert.p1 = {L.one(), L.zero(), L.zero()};
    cert.p2 = {L.zero(), L.one(), L.zero()};
  }
  cert.restriction = ternary_restrict(L, lift_ternary(L, Q4), cert.p1, cert.p2);
  auto sq = binary_square_root(L, cert.restriction);
  if (!sq) return std::nullopt;
  cert.q = sq->first;
  cert.gamma = sq->second;
  return cert;
}

namespace {

// Certify the twelve embedded lines pairwise distinct. Each line contributes
// the element a0 + N a2 + N^2 a1 of its tower; the characteristic polynomials
// collect the values under all embeddings, and a separable degree-12 product
// proves the twelve coefficient vectors distinct. For a fibre with a square
// root floor the two lines are conjugate under y -> -y, so a single charpoly
// of degree 2 deg(m) already covers both; otherwise each line contributes its
// own charpoly of degree deg(m). A proper-subfield or cross-fibre collision
// spoils at most finitely many N, so a bounded scan suffices.
bool certify_distinct(const std::vector<FibreReport>& fibres) {
  for (long shift = 0; shift <= 200; ++shift) {
    QPoly prod = poly_const(Q, mpq_class(1));
    int degree_seen = 0;
    for (const auto& fr : fibres) {
      const TowerField& L = fr.fibre.tower;
      auto combined = [&](const LinearForm<TowerField>& line) {
        TowerField::Elem e = L.add(line.a[0], L.mul(L.from_int(shift), line.a[2]));
        return L.add(e, L.mul(L.from_int(shift * shift), line.a[1]));
      };
      if (fr.fibre.used_sqrt_floor) {
        QPoly chi = tower_charpoly(L, combined(fr.fibre.line_plus));
        degree_seen += chi.deg();
        prod = mul(Q, prod, chi);
      } else {
        for (const LinearForm<TowerField>* line : {&fr.fibre.line_plus, &fr.fibre.line_minus}) {
          QPoly chi = tower_charpoly(L, combined(*line));
          degree_seen += chi.deg();
          prod = mul(Q, prod, chi);
        }
      }
    }
    if (degree_seen != 12) throw InternalError("embedding count is not twelve");
    if (is_separable(Q, prod)) return true;
  }
  return false;
}

}  // namespace

HexadReport hexad_report(const SexticInput<Rationals>& input, Sign sign, int jobs) {
  QuarticModel<Rationals> model = quartic(Q, input, sign);
  if (!smoothness(Q, model.Q)) throw NotSmooth("constructed quartic is singular");

  std::vector<QPoly> factors;
  for (const auto& [m, mult] : factor_over_Q(input.F)) {
    if (mult != 1) throw InternalError("separable F produced a repeated factor");
    factors.push_back(m);
  }

  auto process = [&](const QPoly& m) {
    SplitFibre fibre = split_fibre(model.bundle, m);
    auto cp = bitangency_certificate(fibre.tower, model.Q, fibre.line_plus);
    auto cm = bitangency_certificate(fibre.tower, model.Q, fibre.line_minus);
    if (!cp || !cm) throw InternalError("fibre line failed the bitangency certificate");
    const int tower_degree = fibre.tower.degree_over_Q();
    return FibreReport{std::move(fibre), std::move(*cp), std::move(*cm), tower_degree};
  };

  HexadReport report{model, {}, 0, false};
  if (jobs > 1 && factors.size() > 1) {
    std::vector<std::future<FibreReport>> futures;
    for (const auto& m : factors) {
      futures.push_back(std::async(std::launch::async, process, m));
    }
    for (auto& f : futures) report.fibres.push_back(f.get());
  } else {
    for (const auto& m : factors) report.fibres.push_back(process(m));
  }
  for (const auto& fr : report.fibres) report.total_lines += 2 * fr.fibre.embeddings;
  if (report.total_lines != 12) throw InternalError("hexad does not contain twelve lines");
  report.lines_distinct = certify_distinct(report.fibres);
  if (!report.lines_distinct) throw InternalError("could not certify pairwise distinct lines");
  return report;
}

}  // namespace hexforge
