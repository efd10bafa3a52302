#include "hexforge/weyl.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "hexforge/errors.hpp"

namespace hexforge {

namespace {

void enumerate_m(int pos, int npts, int sum_left, int sumsq_left, std::vector<int>& m,
                 std::vector<PicVector>& out, int d) {
  if (pos == npts) {
    if (sum_left == 0 && sumsq_left == 0) {
      PicVector e;
      e.v.push_back(d);
      e.v.insert(e.v.end(), m.begin(), m.end());
      out.push_back(std::move(e));
    }
    return;
  }
  const int rest = npts - pos - 1;
  for (int mi = -4; mi <= 4; ++mi) {
    const int sq = mi * mi;
    if (sq > sumsq_left) continue;
    // remaining coordinates must reach sum_left - mi with squares sumsq_left - sq
    const int s = sum_left - mi;
    if (s * s > rest * (sumsq_left - sq) && rest > 0) continue;
    if (rest == 0 && s != 0) continue;
    m.push_back(mi);
    enumerate_m(pos + 1, npts, s, sumsq_left - sq, m, out, d);
    m.pop_back();
  }
}

Perm action_permutation(const std::vector<PicVector>& classes,
                        const std::map<PicVector, int>& index,
                        const PicVector& root) {
  Perm p(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const int num = intersect(classes[i], root);
    PicVector image = classes[i];
    for (std::size_t j = 0; j < image.v.size(); ++j) image.v[j] += num * root.v[j];
    auto it = index.find(image);
    if (it == index.end()) throw InternalError("reflection left the class set");
    p[i] = it->second;
  }
  return p;
}

std::uint8_t mod2_bits(const PicVector& e) {
  std::uint8_t bits = 0;
  for (std::size_t j = 0; j < e.v.size(); ++j) {
    if (e.v[j] & 1) bits |= static_cast<std::uint8_t>(1u << j);
  }
  return bits;
}

std::vector<int> orbit_sizes(int degree, const std::vector<Perm>& gens) {
  std::vector<int> sizes;
  for (const auto& orbit : orbits_of(degree, gens)) sizes.push_back(static_cast<int>(orbit.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Perm> restrict_perms(const std::vector<Perm>& gens, const std::vector<int>& points) {
  std::vector<int> position(gens.empty() ? 0 : gens[0].size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) position[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  std::vector<Perm> out;
  for (const Perm& g : gens) {
    Perm r(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int img = g[static_cast<std::size_t>(points[i])];
      if (position[static_cast<std::size_t>(img)] < 0) throw InternalError("restriction target leaves the set");
      r[i] = position[static_cast<std::size_t>(img)];
    }
    out.push_back(std::move(r));
  }
  return out;
}

Perm combine(const Perm& a, const Perm& b) {
  Perm r = a;
  const int off = static_cast<int>(a.size());
  for (int x : b) r.push_back(x + off);
  return r;
}

}  // namespace

int intersect(const PicVector& a, const PicVector& b) {
  if (a.v.size() != b.v.size()) throw InvalidInput("mixed lattice ranks");
  int s = a.v[0] * b.v[0];
  for (std::size_t i = 1; i < a.v.size(); ++i) s -= a.v[i] * b.v[i];
  return s;
}

PicVector canonical_class(int blowups) {
  PicVector k;
  k.v.assign(static_cast<std::size_t>(blowups) + 1, 1);
  k.v[0] = -3;
  return k;
}

std::vector<PicVector> exceptional_classes(int degree) {
  if (degree != 2 && degree != 3) throw InvalidInput("degree must be 2 or 3");
  const int npts = degree == 2 ? 7 : 6;
  std::vector<PicVector> out;
  std::vector<int> m;
  for (int d = -4; d <= 4; ++d) {
    // E.E = -1: d^2 - sum m^2 = -1; E.K = -1: -3d - sum m = -1.
    const int sumsq = d * d + 1;
    const int sum = 1 - 3 * d;
    if (sum * sum > npts * sumsq) continue;
    enumerate_m(0, npts, sum, sumsq, m, out, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeylAction weyl_action(int degree) {
  WeylAction w;
  w.degree = degree;
  w.classes = exceptional_classes(degree);
  const int npts = degree == 2 ? 7 : 6;
  std::map<PicVector, int> index;
  for (std::size_t i = 0; i < w.classes.size(); ++i) index[w.classes[i]] = static_cast<int>(i);
  for (int i = 1; i < npts; ++i) {
    PicVector r;
    r.v.assign(static_cast<std::size_t>(npts) + 1, 0);
    r.v[static_cast<std::size_t>(i)] = 1;
    r.v[static_cast<std::size_t>(i) + 1] = -1;
    w.simple_roots.push_back(r);
  }
  PicVector r0;
  r0.v.assign(static_cast<std::size_t>(npts) + 1, 0);
  r0.v[0] = 1;
  r0.v[1] = r0.v[2] = r0.v[3] = -1;
  w.simple_roots.push_back(r0);
  for (const auto& root : w.simple_roots) {
    if (intersect(root, root) != -2) throw InternalError("simple root of wrong norm");
    if (intersect(root, canonical_class(npts)) != 0) throw InternalError("simple root meets K");
    w.gens.push_back(action_permutation(w.classes, index, root));
  }
  return w;
}

GeiserBlocks geiser_blocks(const WeylAction& e7) {
  if (e7.degree != 2) throw InvalidInput("blocks require the degree-2 model");
  GeiserBlocks gb;
  std::map<PicVector, int> index;
  for (std::size_t i = 0; i < e7.classes.size(); ++i) index[e7.classes[i]] = static_cast<int>(i);
  const PicVector K = canonical_class(7);
  gb.geiser56.resize(e7.classes.size());
  gb.block_of.assign(e7.classes.size(), -1);
  for (std::size_t i = 0; i < e7.classes.size(); ++i) {
    PicVector partner;
    partner.v.resize(8);
    for (std::size_t j = 0; j < 8; ++j) partner.v[j] = -K.v[j] - e7.classes[i].v[j];
    auto it = index.find(partner);
    if (it == index.end()) throw InternalError("Geiser partner is not exceptional");
    gb.geiser56[i] = it->second;
    if (static_cast<int>(i) < it->second) {
      gb.blocks.push_back({static_cast<int>(i), it->second});
    }
  }
  for (std::size_t b = 0; b < gb.blocks.size(); ++b) {
    gb.block_of[static_cast<std::size_t>(gb.blocks[b][0])] = static_cast<int>(b);
    gb.block_of[static_cast<std::size_t>(gb.blocks[b][1])] = static_cast<int>(b);
  }
  for (const Perm& g : e7.gens) {
    Perm on28(gb.blocks.size());
    for (std::size_t b = 0; b < gb.blocks.size(); ++b) {
      const int target = gb.block_of[static_cast<std::size_t>(g[static_cast<std::size_t>(gb.blocks[b][0])])];
      const int target2 = gb.block_of[static_cast<std::size_t>(g[static_cast<std::size_t>(gb.blocks[b][1])])];
      if (target != target2) throw InternalError("generator does not respect blocks");
      on28[b] = target;
    }
    gb.gens28.push_back(std::move(on28));
  }
  return gb;
}

int PiMap::classify(std::uint8_t x) const {
  const int code = code_table[x];
  if (code < 0) throw InternalError("vector outside Pic[pi_*] mod 2");
  return code;
}

PiMap pi_map(const WeylAction& e7, const GeiserBlocks& gb) {
  PiMap pm;
  pm.class_mod2.resize(e7.classes.size());
  for (std::size_t i = 0; i < e7.classes.size(); ++i) pm.class_mod2[i] = mod2_bits(e7.classes[i]);

  // Span of all differences mod 2.
  std::vector<std::uint8_t> basis;
  auto reduce = [&](std::uint8_t x) {
    for (std::uint8_t row : basis) {
      const std::uint8_t pivot = row & static_cast<std::uint8_t>(-row);
      if (x & pivot) x ^= row;
    }
    return x;
  };
  auto insert = [&](std::uint8_t x) {
    x = reduce(x);
    if (x == 0) return;
    // keep rows echelonized: eliminate the new pivot from existing rows
    const std::uint8_t pivot = x & static_cast<std::uint8_t>(-x);
    for (auto& row : basis) {
      if (row & pivot) row ^= x;
    }
    basis.push_back(x);
    std::sort(basis.begin(), basis.end(), [](std::uint8_t a, std::uint8_t b) {
      return (a & static_cast<std::uint8_t>(-a)) < (b & static_cast<std::uint8_t>(-b));
    });
  };
  for (std::size_t i = 1; i < e7.classes.size(); ++i) {
    insert(pm.class_mod2[i] ^ pm.class_mod2[0]);
  }
  pm.dimV = static_cast<int>(basis.size());
  if (pm.dimV != 7) throw InternalError("Pic[pi_*] mod 2 does not have dimension 7");

  // Radical of the pairing restricted to the span.
  std::vector<std::uint8_t> radical_elems;
  for (unsigned mask = 1; mask < (1u << basis.size()); ++mask) {
    std::uint8_t x = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask & (1u << i)) x ^= basis[i];
    }
    bool in_radical = true;
    for (std::uint8_t row : basis) in_radical = in_radical && f2_pairing(x, row) == 0;
    if (in_radical) radical_elems.push_back(x);
  }
  if (radical_elems.size() != 1) throw InternalError("radical is not one-dimensional");
  pm.radical = radical_elems[0];
  const std::uint8_t k_mod2 = mod2_bits(canonical_class(7));
  if (pm.radical != k_mod2) throw InternalError("radical is not generated by K mod 2");

  // Quotient basis: six echelon rows independent of the radical.
  std::vector<std::uint8_t> qb;
  for (std::uint8_t row : basis) {
    // drop one row to account for the radical: keep rows whose span misses it
    std::vector<std::uint8_t> trial = qb;
    trial.push_back(row);
    // check radical not in span(trial)
    std::uint8_t r = pm.radical;
    for (std::uint8_t t : trial) {
      const std::uint8_t pivot = t & static_cast<std::uint8_t>(-t);
      if (r & pivot) r ^= t;
    }
    if (r != 0 && qb.size() < 6) qb = std::move(trial);
    if (qb.size() == 6) break;
  }
  if (qb.size() != 6) throw InternalError("no 6-dimensional complement of the radical");
  for (int i = 0; i < 6; ++i) pm.qbasis[static_cast<std::size_t>(i)] = qb[static_cast<std::size_t>(i)];

  // Quotient coordinates by exhaustive table over the 128-element span:
  // x = sum a_i qbasis_i + b radical gets code bits a_i (independent of b).
  pm.code_table.fill(-1);
  for (unsigned a = 0; a < 64; ++a) {
    std::uint8_t x = 0;
    for (int i = 0; i < 6; ++i) {
      if (a & (1u << i)) x ^= pm.qbasis[static_cast<std::size_t>(i)];
    }
    for (int b = 0; b < 2; ++b) {
      const std::uint8_t y = b ? static_cast<std::uint8_t>(x ^ pm.radical) : x;
      if (pm.code_table[y] >= 0 && pm.code_table[y] != static_cast<int>(a)) {
        throw InternalError("quotient coordinates are inconsistent");
      }
      pm.code_table[y] = static_cast<int>(a);
    }
  }

  // All block pairs and their values.
  const int nb = static_cast<int>(gb.blocks.size());
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) pm.pairs.emplace_back(i, j);
  }
  pm.fibres.assign(63, {});
  pm.pair_value.resize(pm.pairs.size());
  for (std::size_t p = 0; p < pm.pairs.size(); ++p) {
    const auto [bi, bj] = pm.pairs[p];
    const std::uint8_t d1 = pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(bi)][0])];
    const std::uint8_t d2 = pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(bj)][0])];
    const int code = pm.classify(static_cast<std::uint8_t>(d1 ^ d2));
    // representative independence within the blocks
    const std::uint8_t alt = pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(bi)][1])];
    if (pm.classify(static_cast<std::uint8_t>(alt ^ d2)) != code) {
      throw InternalError("pair value depends on the block representative");
    }
    if (code == 0) throw InternalError("block pair maps to the zero class");
    pm.pair_value[p] = code;
    pm.fibres[static_cast<std::size_t>(code - 1)].push_back(static_cast<int>(p));
  }
  for (const auto& fibre : pm.fibres) {
    if (fibre.size() != 6) throw InternalError("a Steiner fibre does not have size 6");
  }
  return pm;
}

bool hexad_criterion(const std::vector<PicVector>& twelve) {
  if (twelve.size() != 12) throw InvalidInput("hexad criterion expects 12 classes");
  for (const auto& e : twelve) {
    if (intersect(e, e) != -1) return false;
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (intersect(twelve[static_cast<std::size_t>(i)], twelve[static_cast<std::size_t>(j)]) != 0) return false;
      if (intersect(twelve[static_cast<std::size_t>(6 + i)], twelve[static_cast<std::size_t>(6 + j)]) != 0) return false;
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const int expected = i == j ? 1 : 0;
      if (intersect(twelve[static_cast<std::size_t>(i)], twelve[static_cast<std::size_t>(6 + j)]) != expected) return false;
    }
  }
  return true;
}

std::pair<int, long> rank8_check(const std::vector<PicVector>& twelve) {
  if (twelve.size() != 12) throw InvalidInput("rank check expects 12 classes");
  std::vector<PicVector> gens = twelve;
  gens.push_back(canonical_class(7));
  // Rank of the 13x13 Gram matrix over Q.
  const int n = 13;
  std::vector<std::vector<mpq_class>> gram(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          intersect(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]);
    }
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row) {
      if (gram[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(gram[static_cast<std::size_t>(pivot)], gram[static_cast<std::size_t>(rank)]);
    for (int row = 0; row < n; ++row) {
      if (row == rank) continue;
      const mpq_class f = gram[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                          gram[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
      for (int c2 = 0; c2 < n; ++c2) {
        gram[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] -=
            f * gram[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
      }
    }
    ++rank;
  }

  // Index in Z^{1,7} via the Smith normal form of the 13x8 coordinate matrix.
  std::vector<std::vector<mpz_class>> a(13, std::vector<mpz_class>(8));
  for (int i = 0; i < 13; ++i) {
    for (int j = 0; j < 8; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gens[static_cast<std::size_t>(i)].v[static_cast<std::size_t>(j)];
  }
  const int rows = 13, cols = 8;
  mpz_class det_product = 1;
  int r = 0, c = 0;
  while (r < rows && c < cols) {
    int pi = -1, pj = -1;
    mpz_class best = 0;
    for (int i = r; i < rows; ++i) {
      for (int j = c; j < cols; ++j) {
        const mpz_class& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (x != 0 && (pi < 0 || abs(x) < best)) {
          best = abs(x);
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[static_cast<std::size_t>(pi)], a[static_cast<std::size_t>(r)]);
    for (int i = 0; i < rows; ++i) std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)], a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    bool reduced = true;
    for (int i = r + 1; i < rows; ++i) {
      const mpz_class q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (q != 0) {
        for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= q * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) reduced = false;
    }
    for (int j = c + 1; j < cols; ++j) {
      const mpz_class q = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (q != 0) {
        for (int i = r; i < rows; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      }
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] != 0) reduced = false;
    }
    if (!reduced) continue;
    det_product *= abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    ++r;
    ++c;
  }
  long index = r == 8 ? static_cast<long>(det_product.get_si()) : 0;
  return {rank, index};
}

std::vector<Perm> action_on_values(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm) {
  std::vector<Perm> out;
  for (std::size_t gi = 0; gi < e7.gens.size(); ++gi) {
    const Perm& g28 = gb.gens28[gi];
    Perm on63(63, -1);
    for (std::size_t p = 0; p < pm.pairs.size(); ++p) {
      const auto [bi, bj] = pm.pairs[p];
      const int v = pm.pair_value[p];
      const int ti = g28[static_cast<std::size_t>(bi)], tj = g28[static_cast<std::size_t>(bj)];
      const std::uint8_t d =
          static_cast<std::uint8_t>(pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(ti)][0])] ^
                                    pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(tj)][0])]);
      const int tv = pm.classify(d);
      if (on63[static_cast<std::size_t>(v - 1)] < 0) {
        on63[static_cast<std::size_t>(v - 1)] = tv - 1;
      } else if (on63[static_cast<std::size_t>(v - 1)] != tv - 1) {
        throw InternalError("generator does not permute Steiner fibres");
      }
    }
    out.push_back(std::move(on63));
  }
  return out;
}

U63Report u63_structure(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm) {
  U63Report rep;
  PermGroup g28(28, gb.gens28);
  rep.group28_order = g28.order();

  const std::vector<Perm> on63 = action_on_values(e7, gb, pm);
  std::vector<Perm> combined;
  for (std::size_t i = 0; i < gb.gens28.size(); ++i) combined.push_back(combine(gb.gens28[i], on63[i]));
  const int hexad_point = 28;  // stabilize the fibre of value code 1
  PermGroup big(28 + 63, combined, {hexad_point});
  std::vector<Perm> stab_combined = big.stabilizer_generators(1);
  std::vector<Perm> stab28;
  for (const Perm& g : stab_combined) stab28.push_back(Perm(g.begin(), g.begin() + 28));
  PermGroup u63(28, stab28);
  rep.u63_order = u63.order();
  rep.index = rep.u63_order == 0 ? 0 : static_cast<long>(rep.group28_order / rep.u63_order);
  rep.orbit_sizes_28 = orbit_sizes(28, stab28);
  rep.u63_gens28 = stab28;

  // The 12-orbit consists of the blocks in the stabilized hexad.
  std::vector<int> twelve;
  for (int pair_id : pm.fibres[0]) {
    twelve.push_back(pm.pairs[static_cast<std::size_t>(pair_id)].first);
    twelve.push_back(pm.pairs[static_cast<std::size_t>(pair_id)].second);
  }
  std::sort(twelve.begin(), twelve.end());
  rep.twelve_orbit = twelve;
  std::vector<Perm> on12 = restrict_perms(stab28, twelve);
  PermGroup image12(12, on12);
  rep.image12_order = image12.order();
  rep.faithful_on_12 = rep.image12_order == rep.u63_order;
  rep.image12_even = true;
  for (const Perm& g : on12) rep.image12_even = rep.image12_even && perm_is_even(g);
  std::vector<std::vector<int>> six_pairs;
  for (int pair_id : pm.fibres[0]) {
    const auto [bi, bj] = pm.pairs[static_cast<std::size_t>(pair_id)];
    const int pi = static_cast<int>(std::lower_bound(twelve.begin(), twelve.end(), bi) - twelve.begin());
    const int pj = static_cast<int>(std::lower_bound(twelve.begin(), twelve.end(), bj) - twelve.begin());
    six_pairs.push_back({pi, pj});
  }
  rep.preserves_six_pairs = PermGroup::preserves_partition(on12, six_pairs);
  return rep;
}

E6Report e6_applications(const WeylAction& e7, const GeiserBlocks& gb, const PiMap& pm) {
  if (e7.degree != 2) throw InvalidInput("degree-2 model required");
  E6Report rep;
  {
    PermGroup we6_27(static_cast<int>(weyl_action(3).classes.size()), weyl_action(3).gens);
    rep.we6_order = we6_27.order();
  }

  // The 27 lines inside the 56: classes orthogonal to e7 (last coordinate 0).
  std::vector<int> lines;
  for (std::size_t i = 0; i < e7.classes.size(); ++i) {
    if (e7.classes[i].v[7] == 0) lines.push_back(static_cast<int>(i));
  }
  rep.lines = static_cast<int>(lines.size());

  // W(E6) inside W(E7): reflections in the simple roots with no e7 part.
  std::vector<Perm> we6_gens56;
  for (std::size_t r = 0; r < e7.simple_roots.size(); ++r) {
    if (e7.simple_roots[r].v[7] == 0) we6_gens56.push_back(e7.gens[r]);
  }
  if (we6_gens56.size() != 6) throw InternalError("expected six E6 simple roots inside E7");
  PermGroup we6_56(56, we6_gens56);
  rep.we6_in_e7 = we6_56.order();

  // Double-sixes among the 27 lines: mutually skew sixers paired by the
  // complementary sixer meeting each member once off-index.
  std::vector<std::vector<int>> adjacency(lines.size());
  auto meets = [&](int a, int b) {
    return intersect(e7.classes[static_cast<std::size_t>(lines[static_cast<std::size_t>(a)])],
                     e7.classes[static_cast<std::size_t>(lines[static_cast<std::size_t>(b)])]);
  };
  std::vector<std::vector<int>> sixers;
  std::vector<int> current;
  auto extend = [&](auto&& self, int start) -> void {
    if (current.size() == 6) {
      sixers.push_back(current);
      return;
    }
    for (int x = start; x < static_cast<int>(lines.size()); ++x) {
      bool skew = true;
      for (int y : current) skew = skew && meets(y, x) == 0;
      if (skew) {
        current.push_back(x);
        self(self, x + 1);
        current.pop_back();
      }
    }
  };
  extend(extend, 0);
  // pair each sixer with its partner: E'_i is the unique line meeting all
  // E_j, j != i, and skew to E_i
  std::map<std::vector<int>, int> sixer_id;
  for (std::size_t i = 0; i < sixers.size(); ++i) sixer_id[sixers[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> double_sixes;  // each: sorted 12 line indices
  std::map<std::vector<int>, int> ds_id;
  for (const auto& six : sixers) {
    std::vector<int> partner;
    bool good = true;
    for (int i = 0; i < 6 && good; ++i) {
      int found = -1;
      for (int x = 0; x < static_cast<int>(lines.size()); ++x) {
        bool ok = meets(six[static_cast<std::size_t>(i)], x) == 0;
        for (int j = 0; j < 6 && ok; ++j) {
          if (j != i) ok = meets(six[static_cast<std::size_t>(j)], x) == 1;
        }
        if (ok) {
          found = x;
          break;
        }
      }
      if (found < 0) {
        good = false;
      } else {
        partner.push_back(found);
      }
    }
    if (!good) continue;
    std::vector<int> all = six;
    all.insert(all.end(), partner.begin(), partner.end());
    std::sort(all.begin(), all.end());
    if (ds_id.find(all) == ds_id.end()) {
      ds_id[all] = static_cast<int>(double_sixes.size());
      double_sixes.push_back(all);
    }
  }
  rep.double_sixes = static_cast<int>(double_sixes.size());

  // Action of the W(E6) generators on the double-sixes.
  std::vector<int> line_pos(56, -1);
  for (std::size_t i = 0; i < lines.size(); ++i) line_pos[static_cast<std::size_t>(lines[i])] = static_cast<int>(i);
  std::vector<Perm> gens_on_ds;
  for (const Perm& g : we6_gens56) {
    Perm p(double_sixes.size());
    for (std::size_t d = 0; d < double_sixes.size(); ++d) {
      std::vector<int> image;
      for (int x : double_sixes[d]) {
        image.push_back(line_pos[static_cast<std::size_t>(g[static_cast<std::size_t>(lines[static_cast<std::size_t>(x)])])]);
      }
      std::sort(image.begin(), image.end());
      auto it = ds_id.find(image);
      if (it == ds_id.end()) throw InternalError("double-six image is not a double-six");
      p[d] = it->second;
    }
    gens_on_ds.push_back(std::move(p));
  }

  const PicVector K7 = canonical_class(7);
  (void)K7;
  PermGroup we7(56, e7.gens);
  const unsigned long long we7_order = we7.order();

  auto analyze = [&](const std::vector<Perm>& stab56, unsigned long long& order_out,
                     std::vector<int>& orbits27, std::vector<int>& orbits56, bool& in_u63) {
    PermGroup stab(56, stab56);
    order_out = stab.order();
    orbits56 = orbit_sizes(56, stab56);
    std::vector<Perm> on27 = restrict_perms(stab56, lines);
    orbits27 = orbit_sizes(27, on27);
    // push through the block quotient and look for a fixed Steiner fibre
    std::vector<Perm> on63;
    for (const Perm& g : stab56) {
      Perm g28(28);
      for (std::size_t b = 0; b < gb.blocks.size(); ++b) {
        g28[b] = gb.block_of[static_cast<std::size_t>(g[static_cast<std::size_t>(gb.blocks[b][0])])];
      }
      Perm v(63);
      for (std::size_t p = 0; p < pm.pairs.size(); ++p) {
        const auto [bi, bj] = pm.pairs[p];
        const std::uint8_t d = static_cast<std::uint8_t>(
            pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(g28[static_cast<std::size_t>(bi)])][0])] ^
            pm.class_mod2[static_cast<std::size_t>(gb.blocks[static_cast<std::size_t>(g28[static_cast<std::size_t>(bj)])][0])]);
        v[static_cast<std::size_t>(pm.pair_value[p] - 1)] = pm.classify(d) - 1;
      }
      on63.push_back(std::move(v));
    }
    in_u63 = false;
    for (const auto& orbit : orbits_of(63, on63)) {
      if (orbit.size() == 1) in_u63 = true;
    }
  };

  {
    // stabilizer of double-six 0 inside W(E6)
    std::vector<Perm> combined;
    for (std::size_t i = 0; i < we6_gens56.size(); ++i) combined.push_back(combine(we6_gens56[i], gens_on_ds[i]));
    PermGroup big(56 + static_cast<int>(double_sixes.size()), combined, {56});
    std::vector<Perm> stab56;
    for (const Perm& g : big.stabilizer_generators(1)) stab56.push_back(Perm(g.begin(), g.begin() + 56));
    analyze(stab56, rep.uds_order, rep.uds_orbits_27, rep.uds_orbits_56, rep.uds_image_in_u63_conjugate);
    rep.uds_index_in_we7 = rep.uds_order == 0 ? 0 : static_cast<long>(we7_order / rep.uds_order);
    rep.ds_stab_index = rep.uds_order == 0 ? 0 : static_cast<long>(rep.we6_in_e7 / rep.uds_order);
  }
  {
    // stabilizer of a line inside W(E6)
    PermGroup big(56, we6_gens56, {lines[0]});
    std::vector<Perm> stab56 = big.stabilizer_generators(1);
    analyze(stab56, rep.ul_order, rep.ul_orbits_27, rep.ul_orbits_56, rep.ul_image_in_u63_conjugate);
    rep.line_stab_index = rep.ul_order == 0 ? 0 : static_cast<long>(rep.we6_in_e7 / rep.ul_order);
  }
  return rep;
}

}  // namespace hexforge
