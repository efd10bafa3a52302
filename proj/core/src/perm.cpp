#include "hexforge/perm.hpp"

#include <algorithm>
#include <numeric>

namespace hexforge {

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  Perm r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(const Perm& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool perm_is_even(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  int transpositions = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, x = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      x = g[static_cast<std::size_t>(x)];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::vector<int> perm_cycle_type(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, x = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      x = g[static_cast<std::size_t>(x)];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Perm>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& g : gens) {
        const int y = g[static_cast<std::size_t>(orbit[head])];
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix)
    : degree_(degree), input_gens_(std::move(generators)) {
  for (const Perm& g : input_gens_) {
    if (static_cast<int>(g.size()) != degree) throw InvalidInput("generator degree mismatch");
  }
  for (int b : base_prefix) {
    levels_.push_back(Level{b, {}, {}});
    base_.push_back(b);
  }
  if (levels_.empty()) {
    // First base point: any point moved by some generator (identity group gets none).
    for (int x = 0; x < degree_ && levels_.empty(); ++x) {
      for (const Perm& g : input_gens_) {
        if (g[static_cast<std::size_t>(x)] != x) {
          levels_.push_back(Level{x, {}, {}});
          base_.push_back(x);
          break;
        }
      }
    }
  }
  if (levels_.empty()) return;  // trivial group
  for (const Perm& g : input_gens_) {
    if (!perm_is_identity(g)) levels_[0].gens.push_back(g);
  }
  // Generators must live at every level whose base prefix they fix.
  for (const Perm& g : levels_[0].gens) {
    for (std::size_t l = 1; l < levels_.size(); ++l) {
      bool fixes = true;
      for (std::size_t m = 0; m < l; ++m) {
        if (g[static_cast<std::size_t>(levels_[m].beta)] != levels_[m].beta) {
          fixes = false;
          break;
        }
      }
      if (fixes) levels_[l].gens.push_back(g);
    }
  }
  schreier_sims(0);
  // Prefix levels the recursion never visited still carry their singleton
  // orbit; materialize it so the order product is right.
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (levels_[l].transversal.empty()) rebuild_transversal(l);
  }
}

void PermGroup::rebuild_transversal(std::size_t i) {
  Level& lvl = levels_[i];
  lvl.transversal.clear();
  lvl.transversal[lvl.beta] = perm_identity(degree_);
  std::vector<int> frontier{lvl.beta};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      const Perm& ux = lvl.transversal[x];
      for (const Perm& g : lvl.gens) {
        const int y = g[static_cast<std::size_t>(x)];
        if (lvl.transversal.find(y) == lvl.transversal.end()) {
          lvl.transversal[y] = perm_compose(g, ux);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int x = g[static_cast<std::size_t>(levels_[l].beta)];
    auto it = levels_[l].transversal.find(x);
    if (it == levels_[l].transversal.end()) return {std::move(g), l};
    g = perm_compose(perm_inverse(it->second), g);
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::ensure_level_for(const Perm& h, std::size_t j) {
  if (j < levels_.size()) return;
  for (int x = 0; x < degree_; ++x) {
    bool in_base = false;
    for (int b : base_) in_base = in_base || (b == x);
    if (!in_base && h[static_cast<std::size_t>(x)] != x) {
      levels_.push_back(Level{x, {}, {}});
      base_.push_back(x);
      return;
    }
  }
  throw InternalError("residue moves no point outside the base");
}

void PermGroup::schreier_sims(std::size_t i) {
  rebuild_transversal(i);
  // levels_ may grow (and reallocate) during the scan, so no references are
  // held across mutations; level i's generators and transversal are stable
  // for the duration of one scan.
  bool restart = true;
  while (restart) {
    restart = false;
    std::vector<int> points;
    points.reserve(levels_[i].transversal.size());
    for (const auto& [p, u] : levels_[i].transversal) points.push_back(p);
    for (std::size_t pi = 0; pi < points.size() && !restart; ++pi) {
      const int x = points[pi];
      for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
        const Perm s = levels_[i].gens[si];
        const Perm ux = levels_[i].transversal.at(x);
        const Perm uy = levels_[i].transversal.at(s[static_cast<std::size_t>(x)]);
        Perm schreier = perm_compose(perm_inverse(uy), perm_compose(s, ux));
        if (perm_is_identity(schreier)) continue;
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (perm_is_identity(h)) continue;
        ensure_level_for(h, j);
        const std::size_t upto = std::min(j, levels_.size() - 1);
        for (std::size_t l = i + 1; l <= upto; ++l) levels_[l].gens.push_back(h);
        for (std::size_t l = upto; l > i; --l) schreier_sims(l);
        restart = true;
        break;
      }
    }
  }
}

unsigned long long PermGroup::order() const {
  unsigned long long n = 1;
  for (const Level& lvl : levels_) n *= static_cast<unsigned long long>(lvl.transversal.size());
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  auto [h, l] = strip(g, 0);
  return perm_is_identity(h);
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t prefix_len) const {
  if (prefix_len >= levels_.size()) {
    // Chain exhausted: the stabilizer is trivial.
    return {};
  }
  std::vector<Perm> out;
  for (const Perm& g : levels_[prefix_len].gens) {
    bool fresh = true;
    for (const Perm& seen : out) fresh = fresh && !(seen == g);
    if (fresh) out.push_back(g);
  }
  return out;
}

bool PermGroup::preserves_partition(const std::vector<Perm>& gens,
                                    const std::vector<std::vector<int>>& blocks) {
  if (gens.empty()) return true;
  std::vector<int> block_of(gens[0].size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  }
  for (const Perm& g : gens) {
    for (const auto& block : blocks) {
      const int target = block_of[static_cast<std::size_t>(g[static_cast<std::size_t>(block[0])])];
      for (int x : block) {
        if (block_of[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])] != target) return false;
      }
    }
  }
  return true;
}

}  // namespace hexforge
