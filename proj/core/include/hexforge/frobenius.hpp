#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hexforge/factor.hpp"
#include "hexforge/kummer.hpp"
#include "hexforge/perm.hpp"

namespace hexforge {

// Factorization degree patterns of F and F(T^2) at one good prime.
struct CycleTypeSample {
  std::uint64_t p = 0;
  std::vector<int> type_F;   // sorted ascending, sums to deg F
  std::vector<int> type_F2;  // sorted ascending, sums to 2 deg F
};

// A subgroup of S2 wr S6 on twelve points (six labeled pairs (2i, 2i+1)),
// given by generators; the census enumerates every element's cycle type.
struct GroupModel {
  std::vector<Perm> generators;  // degree 12
  bool restrict_even = false;    // intersect with A12 during the census
  unsigned long long order = 0;
  std::set<std::vector<int>> census;  // distinct cycle types
};

GroupModel group_model_from_generators(std::vector<Perm> gens, bool restrict_even = false);

// Structural upper bound determined by a plan: the product over orbits of
// S2 wr S_{orbit size}, intersected with A12. Rational entries are orbits of
// size one. The exact realized subgroup is out of scope; samples from any
// honest input are contained in this bound.
GroupModel group_model_from_plan(const KummerPlan& plan);

// Good primes p <= bound (p odd, prime to lc and denominators, both F and
// F(T^2) squarefree mod p); bad primes are skipped and counted.
std::vector<CycleTypeSample> frobenius_sample(const QPoly& F, std::uint64_t primes_up_to,
                                              int jobs = 1, int* skipped = nullptr);

struct ConsistencyReport {
  bool consistent = false;
  std::size_t samples = 0;
  std::vector<std::uint64_t> violating_primes;
  std::size_t observed_types = 0;  // distinct observed F(T^2) types in the census
  std::size_t census_types = 0;
  double coverage = 0.0;  // observed_types / census_types
};

ConsistencyReport consistency(const std::vector<CycleTypeSample>& samples, const GroupModel& model);

// disc(F(T^2)) is a perfect square in Q (forces the image into A12).
bool even_check(const QPoly& F);

// Each part d of the F-type must refine to (d, d) or (2d) in the F(T^2)-type.
bool pair_refinement_ok(std::vector<int> type_F, std::vector<int> type_F2);

}  // namespace hexforge
