#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hexforge/perm.hpp"

namespace hexforge {

// Class in Pic of a del Pezzo surface in the basis (l, e_1, ..., e_n):
// v[0] is the l-coefficient, v[i] the e_i-coefficient. The intersection form
// is v0*w0 - sum v_i*w_i; K = (-3; 1, ..., 1).
struct PicVector {
  std::vector<int> v;

  bool operator==(const PicVector& o) const { return v == o.v; }
  bool operator<(const PicVector& o) const { return v < o.v; }
};

int intersect(const PicVector& a, const PicVector& b);
PicVector canonical_class(int blowups);  // 7 for degree 2, 6 for degree 3

// All classes E with E.E = -1 and E.K = -1, sorted canonically:
// 56 for degree 2, 27 for degree 3.
std::vector<PicVector> exceptional_classes(int degree);

// Weyl group action through reflections s_a(x) = x + (x.a) a in the simple
// roots e_i - e_{i+1} and l - e_1 - e_2 - e_3, as permutations of the classes.
struct WeylAction {
  int degree = 2;
  std::vector<PicVector> classes;
  std::vector<PicVector> simple_roots;
  std::vector<Perm> gens;
};

WeylAction weyl_action(int degree);

// Degree-2 block structure: the Geiser involution pairs E with -K-E over the
// same bitangent; 28 blocks and the induced action on them.
struct GeiserBlocks {
  std::vector<std::array<int, 2>> blocks;  // pairs of class indices, 28 of them
  std::vector<int> block_of;               // class index -> block index
  std::vector<Perm> gens28;                // induced generators on blocks
  Perm geiser56;                           // the involution as a 56-permutation
};

GeiserBlocks geiser_blocks(const WeylAction& e7);

// Pic(S)[pi_*] mod 2, its radical, and the map from block pairs onto the 63
// nonzero vectors of the 6-dimensional symplectic quotient.
struct PiMap {
  int dimV = 0;                         // expected 7
  std::uint8_t radical = 0;             // expected the class of K mod 2
  std::array<std::uint8_t, 6> qbasis{};  // quotient basis lifts
  std::vector<std::uint8_t> class_mod2;  // per exceptional class
  std::array<int, 256> code_table{};     // mod-2 vector -> quotient code, -1 outside the span

  std::vector<std::pair<int, int>> pairs;  // all 378 unordered block pairs
  std::vector<int> pair_value;             // 6-bit nonzero code per pair
  std::vector<std::vector<int>> fibres;    // 63 fibres of size 6 (pair ids), indexed by code-1

  // coordinates of a mod-2 class difference in the quotient
  int classify(std::uint8_t x) const;
};

PiMap pi_map(const WeylAction& e7, const GeiserBlocks& gb);

// Symplectic pairing mod 2 of two mod-2 Pic classes.
inline int f2_pairing(std::uint8_t a, std::uint8_t b) {
  return __builtin_popcount(static_cast<unsigned>(a & b)) & 1;
}

// The twelve-curve criterion: first six mutually skew, last six mutually
// skew, and E_i . E'_j = delta_ij.
bool hexad_criterion(const std::vector<PicVector>& twelve);

// Rank of the 13x13 intersection matrix of the twelve curves plus K, and the
// index of the lattice they span inside Z^{1,7}.
std::pair<int, long> rank8_check(const std::vector<PicVector>& twelve);

// Induced permutations of the 63 quotient values for each generator.
std::vector<Perm> action_on_values(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm);

struct U63Report {
  unsigned long long group28_order = 0;  // 1 451 520
  unsigned long long u63_order = 0;      // 23 040
  long index = 0;                        // 63
  std::vector<int> orbit_sizes_28;       // [12, 16]
  bool faithful_on_12 = false;
  unsigned long long image12_order = 0;  // 23 040
  bool preserves_six_pairs = false;
  bool image12_even = false;
  std::vector<Perm> u63_gens28;
  std::vector<int> twelve_orbit;  // block indices of the stabilized hexad
};

U63Report u63_structure(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm);

struct E6Report {
  unsigned long long we6_order = 0;     // 51 840 (action on the 27 lines)
  unsigned long long we6_in_e7 = 0;     // 51 840 (same group on the 56 classes)
  int lines = 0;                        // 27
  int double_sixes = 0;                 // 36
  unsigned long long uds_order = 0;     // 1 440
  long uds_index_in_we7 = 0;            // 2016
  std::vector<int> uds_orbits_27;       // [12, 15]
  std::vector<int> uds_orbits_56;       // [1, 1, 12, 12, 15, 15]
  bool uds_image_in_u63_conjugate = false;
  unsigned long long ul_order = 0;      // 1 920
  std::vector<int> ul_orbits_27;        // [1, 10, 16]
  std::vector<int> ul_orbits_56;        // [1, 1, 1, 1, 10, 10, 16, 16]
  bool ul_image_in_u63_conjugate = false;
  long line_stab_index = 0;             // 27
  long ds_stab_index = 0;               // 36
};

E6Report e6_applications(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm);

}  // namespace hexforge
