#include "hexforge/fixtures.hpp"

#include "hexforge/smooth.hpp"

namespace hexforge {

namespace {

Rationals QQ;

TernaryForm<Rationals> q_quartic(std::initializer_list<std::pair<std::array<int, 3>, long>> terms) {
  TernaryForm<Rationals> f = TernaryForm<Rationals>::zero(4);
  for (const auto& [e, c] : terms) ternary_set(QQ, f, e, mpq_class(c));
  return f;
}

QPoly q_poly(std::initializer_list<long> coeffs) {
  std::vector<mpq_class> c;
  for (long x : coeffs) c.emplace_back(x);
  return poly_from(QQ, std::move(c));
}

FpRatFunc::Elem t_poly(const FpRatFunc& k, std::initializer_list<int> coeffs) {
  std::vector<std::uint64_t> c;
  for (int x : coeffs) c.push_back(k.base().from_int(x));
  return k.from_poly(poly_from(k.base(), std::move(c)));
}

TernaryForm<FpRatFunc> t_quartic(
    const FpRatFunc& k,
    std::initializer_list<std::pair<std::array<int, 3>, std::initializer_list<int>>> terms) {
  TernaryForm<FpRatFunc> f = TernaryForm<FpRatFunc>::zero(4);
  for (const auto& [e, c] : terms) ternary_set(k, f, e, t_poly(k, c));
  return f;
}

}  // namespace

std::vector<QFixture> builtin_q_fixtures() {
  std::vector<QFixture> out;
  const QPoly F1 = q_poly({25, -150, 335, -340, 152, -24, 1});
  out.push_back(QFixture{
      "q_sextic1_c_plus5",
      {F1, mpq_class(5)},
      q_quartic({{{3, 0, 1}, -2},
                 {{2, 1, 1}, 37},
                 {{2, 0, 2}, 67},
                 {{1, 3, 0}, 2},
                 {{1, 2, 1}, -10},
                 {{1, 1, 2}, 114},
                 {{1, 0, 3}, 166},
                 {{0, 4, 0}, 4},
                 {{0, 3, 1}, -168},
                 {{0, 2, 2}, 42},
                 {{0, 1, 3}, 369},
                 {{0, 0, 4}, -45}})});
  out.push_back(QFixture{
      "q_sextic1_c_minus5",
      {F1, mpq_class(-5)},
      q_quartic({{{3, 0, 1}, -2},
                 {{2, 1, 1}, 43},
                 {{2, 0, 2}, 480},
                 {{1, 3, 0}, 2},
                 {{1, 2, 1}, -36},
                 {{1, 1, 2}, -2460},
                 {{1, 0, 3}, 8700},
                 {{0, 4, 0}, 2},
                 {{0, 3, 1}, -189},
                 {{0, 2, 2}, 5170},
                 {{0, 1, 3}, -31255},
                 {{0, 0, 4}, 40250}})});
  const QPoly F3 = q_poly({1, -5, 0, 9, -2, -3, 1});
  out.push_back(QFixture{
      "q_sextic2_c_plus1",
      {F3, mpq_class(1)},
      q_quartic({{{3, 0, 1}, -1},
                 {{2, 1, 1}, -2},
                 {{2, 0, 2}, 14},
                 {{1, 3, 0}, -2},
                 {{1, 2, 1}, 9},
                 {{1, 1, 2}, 4},
                 {{1, 0, 3}, -7},
                 {{0, 4, 0}, 1},
                 {{0, 3, 1}, -2},
                 {{0, 2, 2}, -7},
                 {{0, 0, 4}, 3}})});
  out.push_back(QFixture{
      "q_sextic2_c_minus1",
      {F3, mpq_class(-1)},
      q_quartic({{{3, 0, 1}, -1},
                 {{2, 1, 1}, -2},
                 {{2, 0, 2}, 6},
                 {{1, 3, 0}, -2},
                 {{1, 2, 1}, 9},
                 {{1, 1, 2}, 12},
                 {{1, 0, 3}, -3},
                 {{0, 4, 0}, 1},
                 {{0, 3, 1}, 6},
                 {{0, 2, 2}, 5},
                 {{0, 1, 3}, -4},
                 {{0, 0, 4}, -1}})});
  return out;
}

std::vector<F3tFixture> builtin_f3t_fixtures() {
  FpRatFunc K(PrimeField(3), "t");
  std::vector<F3tFixture> out;

  // First function-field sextic: c = t^6 + 1, a0 = c^2.
  SexticInput<FpRatFunc> inA;
  {
    const auto c = t_poly(K, {1, 0, 0, 0, 0, 0, 1});
    std::vector<FpRatFunc::Elem> Fc = {
        K.mul(c, c),
        t_poly(K, {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2}),
        t_poly(K, {0, 0, 2, 0, 2, 0, 1, 0, 1}),
        t_poly(K, {1, 0, 1, 0, 2, 0, 2}),
        t_poly(K, {0, 0, 2, 0, 2}),
        K.zero(),
        K.one()};
    inA = SexticInput<FpRatFunc>{poly_from(K, std::move(Fc)), c};
  }
  out.push_back(F3tFixture{
      "f3t_sextic1_first",
      inA,
      t_quartic(K, {{{4, 0, 0}, {1}},
                    {{3, 1, 0}, {2}},
                    {{3, 0, 1}, {0, 0, 1, 0, 1, 0, 2}},
                    {{2, 1, 1}, {1, 0, 1, 0, 1}},
                    {{2, 0, 2}, {2, 0, 1, 0, 2}},
                    {{1, 2, 1}, {1}},
                    {{1, 1, 2}, {2, 0, 0, 0, 2, 0, 2}},
                    {{1, 0, 3}, {2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1}},
                    {{0, 3, 1}, {1}},
                    {{0, 2, 2}, {2, 0, 0, 0, 2}},
                    {{0, 1, 3}, {1, 0, 1, 0, 0, 0, 1, 0, 1}},
                    {{0, 0, 4}, {0, 0, 2}}})});
  out.push_back(F3tFixture{
      "f3t_sextic1_second",
      inA,
      t_quartic(K, {{{4, 0, 0}, {1}},
                    {{3, 1, 0}, {2}},
                    {{3, 0, 1}, {2, 0, 1, 0, 1, 0, 1}},
                    {{2, 1, 1}, {1, 0, 1, 0, 1}},
                    {{2, 0, 2}, {1, 0, 0, 0, 1, 0, 2, 0, 2, 0, 2}},
                    {{1, 2, 1}, {1}},
                    {{1, 1, 2}, {2, 0, 0, 0, 2, 0, 2}},
                    {{1, 0, 3}, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1}},
                    {{0, 3, 1}, {1}},
                    {{0, 2, 2}, {1, 0, 0, 0, 2, 0, 2}},
                    {{0, 1, 3}, {2, 0, 2, 0, 1, 0, 2, 0, 2, 0, 1}},
                    {{0, 0, 4}, {2, 0, 2, 0, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0, 0, 2}}})});

  // Second function-field sextic: c = t^7 + t^4 + t^2 + 1,
  // F = T^6 + 2t^2 T^5 + t^4 T^4 + c' (T^3 + t^2 T^2) + c^2 with c' = 2t^7 + t^4 + t^2 + 1.
  SexticInput<FpRatFunc> inB;
  {
    const auto c = t_poly(K, {1, 0, 1, 0, 1, 0, 0, 1});
    const auto cp = t_poly(K, {1, 0, 1, 0, 1, 0, 0, 2});
    std::vector<FpRatFunc::Elem> Fc = {
        K.mul(c, c),
        K.zero(),
        K.mul(cp, t_poly(K, {0, 0, 1})),
        cp,
        t_poly(K, {0, 0, 0, 0, 1}),
        t_poly(K, {0, 0, 2}),
        K.one()};
    inB = SexticInput<FpRatFunc>{poly_from(K, std::move(Fc)), c};
  }
  out.push_back(F3tFixture{
      "f3t_sextic2_first",
      inB,
      t_quartic(K, {{{4, 0, 0}, {1}},
                    {{3, 1, 0}, {2}},
                    {{3, 0, 1}, {0, 0, 0, 0, 2, 0, 0, 2}},
                    {{2, 1, 1}, {1, 0, 1}},
                    {{2, 0, 2}, {2, 0, 2, 0, 2, 0, 0, 2, 0, 1}},
                    {{1, 2, 1}, {1, 0, 2}},
                    {{1, 1, 2}, {2, 0, 0, 0, 1, 0, 2}},
                    {{1, 0, 3}, {2, 0, 1, 0, 1, 0, 1, 1, 0, 2, 0, 2}},
                    {{0, 3, 1}, {1}},
                    {{0, 2, 2}, {2, 0, 1}},
                    {{0, 1, 3}, {1, 0, 2, 0, 2, 0, 1, 1, 0, 1}},
                    {{0, 0, 4}, {0, 0, 0, 0, 1, 0, 2, 0, 0, 2, 0, 1, 1, 2, 1}}})});
  out.push_back(F3tFixture{
      "f3t_sextic2_second",
      inB,
      t_quartic(K, {{{4, 0, 0}, {1}},
                    {{3, 1, 0}, {2}},
                    {{3, 0, 1}, {2, 0, 2, 0, 1, 0, 0, 1}},
                    {{2, 1, 1}, {1, 0, 1}},
                    {{2, 0, 2}, {1, 0, 0, 0, 0, 0, 2, 1}},
                    {{1, 2, 1}, {1, 0, 2}},
                    {{1, 1, 2}, {2, 0, 1, 0, 2, 0, 0, 0, 0, 1}},
                    {{1, 0, 3}, {1, 0, 2, 0, 1, 0, 2, 1, 2, 2, 0, 2, 0, 0, 1}},
                    {{0, 3, 1}, {1}},
                    {{0, 2, 2}, {1, 0, 0, 0, 2, 0, 0, 2}},
                    {{0, 1, 3}, {2, 0, 1, 0, 1, 0, 2, 2, 0, 2}},
                    {{0, 0, 4}, {2, 0, 1, 0, 0, 0, 1, 0, 2, 2, 1, 1, 0, 2, 2, 0, 0, 0, 1}}})});
  return out;
}

namespace {

template <Field K>
FixtureOutcome check_one(const K& k, const std::string& label, const SexticInput<K>& input,
                         const TernaryForm<K>& printed) {
  FixtureOutcome out;
  out.label = label;
  out.smooth = smoothness(k, printed);
  const auto [plus, minus] = both_twists(k, input);
  const NormalizationMatch mp = search_normalization(k, plus.Q, printed);
  const NormalizationMatch mm = search_normalization(k, minus.Q, printed);
  out.diagnostic_match_plus = mp.found;
  out.diagnostic_match_minus = mm.found;
  auto describe = [](const NormalizationMatch& m) {
    std::string s = "T_i -> sign_i * T_perm(i), perm = (";
    for (int i = 0; i < 3; ++i) s += std::to_string(m.perm[static_cast<std::size_t>(i)]) + (i < 2 ? " " : ")");
    s += ", signs = (";
    for (int i = 0; i < 3; ++i) s += std::to_string(m.sign[static_cast<std::size_t>(i)]) + (i < 2 ? " " : ")");
    s += ", scale = " + m.scale;
    return s;
  };
  if (mp.found) {
    out.diagnostic = "matches the c branch via " + describe(mp);
  } else if (mm.found) {
    out.diagnostic = "matches the -c branch via " + describe(mm);
  } else {
    out.diagnostic = "no match found in the signed-permutation/scalar search space";
  }
  return out;
}

}  // namespace

std::vector<FixtureOutcome> verify_fixtures() {
  std::vector<FixtureOutcome> out;
  for (const auto& f : builtin_q_fixtures()) {
    out.push_back(check_one(QQ, f.label, f.input, f.quartic));
  }
  FpRatFunc K(PrimeField(3), "t");
  for (const auto& f : builtin_f3t_fixtures()) {
    out.push_back(check_one(K, f.label, f.input, f.quartic));
  }
  return out;
}

}  // namespace hexforge
