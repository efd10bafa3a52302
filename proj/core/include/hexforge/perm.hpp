#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hexforge/errors.hpp"

namespace hexforge {

// Permutation of {0..n-1} as its image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& g, const Perm& h);  // (g*h)(x) = g(h(x))
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);
bool perm_is_even(const Perm& g);
std::vector<int> perm_cycle_type(const Perm& g);  // sorted ascending, fixed points included

// Orbits of a set of permutations; each orbit sorted, orbits sorted by least element.
std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens);

// Permutation group with a base and strong generating set, built by the
// deterministic Schreier-Sims procedure. An optional base prefix is honored
// verbatim, which makes point stabilizers directly readable off the chain.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  unsigned long long order() const;
  bool contains(const Perm& g) const;
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& generators() const { return input_gens_; }

  // Generators of the pointwise stabilizer of base()[0..prefix_len).
  std::vector<Perm> stabilizer_generators(std::size_t prefix_len) const;

  std::vector<std::vector<int>> orbits() const { return orbits_of(degree_, input_gens_); }

  // True iff every generator permutes the given blocks among themselves.
  static bool preserves_partition(const std::vector<Perm>& gens,
                                  const std::vector<std::vector<int>>& blocks);

 private:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // point -> u with u(beta) = point
  };

  void rebuild_transversal(std::size_t i);
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void schreier_sims(std::size_t i);
  void ensure_level_for(const Perm& h, std::size_t j);

  int degree_;
  std::vector<Perm> input_gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

}  // namespace hexforge
