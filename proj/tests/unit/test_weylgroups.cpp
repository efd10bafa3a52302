#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "hexforge/weyl.hpp"

using namespace hexforge;

namespace {

PicVector pv(std::initializer_list<int> coords) {
  PicVector e;
  e.v = coords;
  return e;
}

std::vector<PicVector> standard_hexad() {
  // e_1..e_6 paired with l_17..l_67
  std::vector<PicVector> twelve;
  for (int i = 1; i <= 6; ++i) {
    PicVector e;
    e.v.assign(8, 0);
    e.v[static_cast<std::size_t>(i)] = 1;
    twelve.push_back(e);
  }
  for (int i = 1; i <= 6; ++i) {
    PicVector e;
    e.v.assign(8, 0);
    e.v[0] = 1;
    e.v[static_cast<std::size_t>(i)] = -1;
    e.v[7] = -1;
    twelve.push_back(e);
  }
  return twelve;
}

}  // namespace

TEST_CASE("exceptional class enumeration") {
  auto deg2 = exceptional_classes(2);
  CHECK(deg2.size() == 56);
  auto deg3 = exceptional_classes(3);
  CHECK(deg3.size() == 27);
  const PicVector K7 = canonical_class(7);
  for (const auto& e : deg2) {
    CHECK(intersect(e, e) == -1);
    CHECK(intersect(e, K7) == -1);
  }
}

TEST_CASE("reflections preserve the intersection form") {
  auto e7 = weyl_action(2);
  std::mt19937_64 rng(3);
  for (const auto& g : e7.gens) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t i = rng() % e7.classes.size();
      const std::size_t j = rng() % e7.classes.size();
      const auto& gx = e7.classes[static_cast<std::size_t>(g[i])];
      const auto& gy = e7.classes[static_cast<std::size_t>(g[j])];
      CHECK(intersect(gx, gy) == intersect(e7.classes[i], e7.classes[j]));
    }
  }
}

TEST_CASE("group orders") {
  auto e7 = weyl_action(2);
  PermGroup we7(56, e7.gens);
  CHECK(we7.order() == 2903040ull);
  auto e6 = weyl_action(3);
  PermGroup we6(27, e6.gens);
  CHECK(we6.order() == 51840ull);
}

TEST_CASE("geiser blocks and the induced 28-action") {
  auto e7 = weyl_action(2);
  auto gb = geiser_blocks(e7);
  CHECK(gb.blocks.size() == 28);
  PermGroup g28(28, gb.gens28);
  CHECK(g28.order() == 1451520ull);
  // the kernel of the block quotient is exactly the Geiser involution:
  // the orders force |kernel| = 2, and the involution is a group element
  PermGroup we7(56, e7.gens);
  CHECK(we7.order() / g28.order() == 2);
  CHECK(we7.contains(gb.geiser56));
  CHECK(!perm_is_identity(gb.geiser56));
  // geiser fixes every block
  for (std::size_t b = 0; b < gb.blocks.size(); ++b) {
    CHECK(gb.block_of[static_cast<std::size_t>(gb.geiser56[static_cast<std::size_t>(gb.blocks[b][0])])] == static_cast<int>(b));
  }
}

TEST_CASE("pi map: 63 fibres of size 6, representative independence, symplectic") {
  auto e7 = weyl_action(2);
  auto gb = geiser_blocks(e7);
  auto pm = pi_map(e7, gb);
  CHECK(pm.dimV == 7);
  CHECK(pm.pairs.size() == 378);
  CHECK(pm.fibres.size() == 63);
  for (const auto& f : pm.fibres) CHECK(f.size() == 6);

  // quotient pairing is alternating and nondegenerate of rank 6
  for (int i = 0; i < 6; ++i) CHECK(f2_pairing(pm.qbasis[static_cast<std::size_t>(i)], pm.qbasis[static_cast<std::size_t>(i)]) == 0);
  int rank = 0;
  std::array<std::uint8_t, 6> rows{};
  for (int i = 0; i < 6; ++i) {
    std::uint8_t r = 0;
    for (int j = 0; j < 6; ++j) r |= static_cast<std::uint8_t>(f2_pairing(pm.qbasis[static_cast<std::size_t>(i)], pm.qbasis[static_cast<std::size_t>(j)]) << j);
    rows[static_cast<std::size_t>(i)] = r;
  }
  for (int c = 0; c < 6; ++c) {
    int p = -1;
    for (int r = rank; r < 6; ++r) {
      if (rows[static_cast<std::size_t>(r)] & (1 << c)) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(rows[static_cast<std::size_t>(p)], rows[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < 6; ++r) {
      if (r != rank && (rows[static_cast<std::size_t>(r)] & (1 << c))) rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  CHECK(rank == 6);

  // generators preserve the pairing on the quotient and permute the fibres
  auto on63 = action_on_values(e7, gb, pm);
  CHECK(on63.size() == e7.gens.size());
  for (std::size_t gi = 0; gi < e7.gens.size(); ++gi) {
    const Perm& g56 = e7.gens[gi];
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        // pairing of transformed mod-2 classes of two exceptional curves
        const std::uint8_t a = pm.class_mod2[i], b = pm.class_mod2[j];
        const std::uint8_t ga = pm.class_mod2[static_cast<std::size_t>(g56[i])];
        const std::uint8_t gb2 = pm.class_mod2[static_cast<std::size_t>(g56[j])];
        CHECK(f2_pairing(ga, gb2) == f2_pairing(a, b));
      }
    }
  }
}

TEST_CASE("u63 structure") {
  auto e7 = weyl_action(2);
  auto gb = geiser_blocks(e7);
  auto pm = pi_map(e7, gb);
  auto u = u63_structure(e7, gb, pm);
  CHECK(u.group28_order == 1451520ull);
  CHECK(u.u63_order == 23040ull);
  CHECK(u.index == 63);
  CHECK(u.orbit_sizes_28 == std::vector<int>{12, 16});
  CHECK(u.faithful_on_12);
  CHECK(u.image12_order == 23040ull);
  CHECK(u.preserves_six_pairs);
  CHECK(u.image12_even);
  // 28-action and 63-action are transitive
  PermGroup g28(28, gb.gens28);
  CHECK(g28.orbits().size() == 1);
  auto on63 = action_on_values(e7, gb, pm);
  CHECK(orbits_of(63, on63).size() == 1);
  // the other verified maximal index: the stabilizer of a bitangent block
  PermGroup g28_based(28, gb.gens28, {0});
  PermGroup block_stab(28, g28_based.stabilizer_generators(1));
  CHECK(block_stab.order() == 51840ull);
  CHECK(g28.order() / block_stab.order() == 28);
}

TEST_CASE("hexad criterion") {
  auto twelve = standard_hexad();
  CHECK(hexad_criterion(twelve));
  // substituting e_7 anywhere breaks it
  auto broken = twelve;
  broken[2] = pv({0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(!hexad_criterion(broken));
  // mixing two different fibres breaks it: swap one pair for e_1, l_12-style
  auto mixed = twelve;
  mixed[0] = pv({1, -1, -1, 0, 0, 0, 0, 0});  // l_12 belongs to another fibre
  CHECK(!hexad_criterion(mixed));
}

TEST_CASE("hexad blocks form a single pi fibre") {
  auto e7 = weyl_action(2);
  auto gb = geiser_blocks(e7);
  auto pm = pi_map(e7, gb);
  auto twelve = standard_hexad();
  // look the classes up and check all six block pairs share one value
  std::map<PicVector, int> index;
  for (std::size_t i = 0; i < e7.classes.size(); ++i) index[e7.classes[i]] = static_cast<int>(i);
  int value = -1;
  for (int i = 0; i < 6; ++i) {
    const int bi = gb.block_of[static_cast<std::size_t>(index.at(twelve[static_cast<std::size_t>(i)]))];
    const int bj = gb.block_of[static_cast<std::size_t>(index.at(twelve[static_cast<std::size_t>(i + 6)]))];
    const std::uint8_t d = static_cast<std::uint8_t>(
        pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(bi)][0])] ^
        pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(bj)][0])]);
    const int code = pm.classify(d);
    CHECK(code != 0);
    if (value < 0) value = code;
    CHECK(code == value);
  }
}

TEST_CASE("rank 8 and index 2") {
  auto [rank, index] = rank8_check(standard_hexad());
  CHECK(rank == 8);
  CHECK(index == 2);
}

TEST_CASE("sum of the 56 classes is -28K") {
  auto e7 = weyl_action(2);
  PicVector sum;
  sum.v.assign(8, 0);
  for (const auto& c : e7.classes) {
    for (std::size_t j = 0; j < 8; ++j) sum.v[j] += c.v[j];
  }
  const PicVector K7 = canonical_class(7);
  for (std::size_t j = 0; j < 8; ++j) CHECK(sum.v[j] == -28 * K7.v[j]);
}

TEST_CASE("e6 applications") {
  auto e7 = weyl_action(2);
  auto gb = geiser_blocks(e7);
  auto pm = pi_map(e7, gb);
  auto rep = e6_applications(e7, gb, pm);
  CHECK(rep.we6_order == 51840ull);
  CHECK(rep.we6_in_e7 == 51840ull);
  CHECK(rep.lines == 27);
  CHECK(rep.double_sixes == 36);
  CHECK(rep.uds_order == 1440ull);
  CHECK(rep.ds_stab_index == 36);
  CHECK(rep.uds_index_in_we7 == 2016);
  CHECK(rep.uds_orbits_27 == std::vector<int>{12, 15});
  CHECK(rep.uds_orbits_56 == std::vector<int>{1, 1, 12, 12, 15, 15});
  CHECK(rep.uds_image_in_u63_conjugate);
  CHECK(rep.ul_order == 1920ull);
  CHECK(rep.line_stab_index == 27);
  CHECK(rep.ul_orbits_27 == std::vector<int>{1, 10, 16});
  CHECK(rep.ul_orbits_56 == std::vector<int>{1, 1, 1, 1, 10, 10, 16, 16});
  CHECK(rep.ul_image_in_u63_conjugate);
}

TEST_CASE("schreier-sims agrees with brute force on small groups") {
  // S4 as <(0123), (01)>, order 24
  PermGroup s4(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  CHECK(s4.order() == 24);
  CHECK(s4.contains({3, 2, 1, 0}));
  // A4 via double transpositions and a 3-cycle, order 12
  PermGroup a4(4, {{1, 0, 3, 2}, {0, 2, 3, 1}});
  CHECK(a4.order() == 12);
  CHECK(!a4.contains({1, 0, 2, 3}));
  // forced base prefix exposes point stabilizers
  PermGroup s4b(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, {0});
  auto stab = s4b.stabilizer_generators(1);
  PermGroup stab0(4, stab);
  CHECK(stab0.order() == 6);
}
