#pragma once

#include <string>
#include <vector>

#include "hexforge/construct.hpp"

namespace hexforge {

// Bundled reference curves: eight quartics over Q and F_3(t) together with
// the sextic inputs they came from. Coefficients are transcribed verbatim
// from the printed source; the relationship to our canonical output is probed
// by the normalization diagnostic, not assumed.
struct QFixture {
  std::string label;
  SexticInput<Rationals> input;
  TernaryForm<Rationals> quartic;
};

struct F3tFixture {
  std::string label;
  SexticInput<FpRatFunc> input;
  TernaryForm<FpRatFunc> quartic;
};

std::vector<QFixture> builtin_q_fixtures();
std::vector<F3tFixture> builtin_f3t_fixtures();

struct FixtureOutcome {
  std::string label;
  bool smooth = false;
  bool diagnostic_match_plus = false;   // printed matches our c = +c output
  bool diagnostic_match_minus = false;  // printed matches our c = -c output
  std::string diagnostic;               // human-readable transform or no-match note
};

std::vector<FixtureOutcome> verify_fixtures();

}  // namespace hexforge
