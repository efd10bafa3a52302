#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hexforge/fields.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

using QPoly = Poly<Rationals>;
using FpPoly = Poly<PrimeField>;

// Monic irreducible factors with multiplicities; product times lc(f) equals f.
// Mod-p distinct/equal-degree factorization, linear Hensel lifting, subset
// recombination. Degree capped at 12.
std::vector<std::pair<QPoly, int>> factor_over_Q(const QPoly& f);

// Multiset (sorted ascending) of degrees of the irreducible factors of f mod p.
// Throws BadPrime when p divides lc or a denominator, or f mod p is not
// squarefree.
std::vector<int> ddf_cycle_type(const QPoly& f, std::uint64_t p);

// Irreducible factors of a squarefree monic polynomial over F_p.
std::vector<FpPoly> fp_factor_squarefree(const PrimeField& F, const FpPoly& f, std::mt19937_64& rng);

// Distinct-degree split of a squarefree monic polynomial: (product, d) pairs.
std::vector<std::pair<FpPoly, int>> fp_distinct_degree(const PrimeField& F, FpPoly f);

// Reduce a rational polynomial mod p; BadPrime on lc/denominator clash.
FpPoly reduce_mod_p(const QPoly& f, const PrimeField& F);

bool is_square_in_Q(const mpq_class& a);

}  // namespace hexforge
