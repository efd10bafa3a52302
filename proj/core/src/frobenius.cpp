#include "hexforge/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

namespace hexforge {

namespace {

Rationals Q;

std::uint64_t encode(const Perm& g) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < g.size(); ++i) code |= static_cast<std::uint64_t>(g[i]) << (4 * i);
  return code;
}

std::vector<std::uint64_t> primes_up_to_n(std::uint64_t n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += 2 * p) sieve[q] = false;
  }
  return out;
}

}  // namespace

GroupModel group_model_from_generators(std::vector<Perm> gens, bool restrict_even) {
  for (const Perm& g : gens) {
    if (g.size() != 12) throw InvalidInput("group model generators must act on 12 points");
  }
  GroupModel model;
  model.generators = std::move(gens);
  model.restrict_even = restrict_even;
  // Full enumeration; the ambient wreath product has order 46080.
  std::unordered_set<std::uint64_t> seen;
  std::vector<Perm> frontier{perm_identity(12)};
  seen.insert(encode(frontier[0]));
  std::vector<Perm> elements = frontier;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier) {
      for (const Perm& s : model.generators) {
        Perm h = perm_compose(s, g);
        if (seen.insert(encode(h)).second) {
          elements.push_back(h);
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
    if (seen.size() > 46080) throw InvalidInput("generators leave S2 wr S6 (order exceeds 46080)");
  }
  unsigned long long count = 0;
  for (const Perm& g : elements) {
    if (model.restrict_even && !perm_is_even(g)) continue;
    ++count;
    model.census.insert(perm_cycle_type(g));
  }
  model.order = count;
  return model;
}

GroupModel group_model_from_plan(const KummerPlan& plan) {
  validate_plan(plan);
  std::vector<int> orbit_sizes;
  for (const auto& orbit : plan.orbits) {
    if (const auto* ro = std::get_if<RationalOrbit>(&orbit)) {
      for (std::size_t i = 0; i < ro->entries.size(); ++i) orbit_sizes.push_back(1);
    } else {
      orbit_sizes.push_back(std::get<FieldOrbit>(orbit).m.deg());
    }
  }
  std::vector<Perm> gens;
  int offset = 0;
  for (int size : orbit_sizes) {
    // pair i of this orbit occupies points 2(offset+i), 2(offset+i)+1
    for (int i = 0; i < size; ++i) {
      Perm flip = perm_identity(12);
      std::swap(flip[static_cast<std::size_t>(2 * (offset + i))],
                flip[static_cast<std::size_t>(2 * (offset + i) + 1)]);
      gens.push_back(std::move(flip));
    }
    for (int i = 0; i + 1 < size; ++i) {
      Perm swap_blocks = perm_identity(12);
      std::swap(swap_blocks[static_cast<std::size_t>(2 * (offset + i))],
                swap_blocks[static_cast<std::size_t>(2 * (offset + i + 1))]);
      std::swap(swap_blocks[static_cast<std::size_t>(2 * (offset + i) + 1)],
                swap_blocks[static_cast<std::size_t>(2 * (offset + i + 1) + 1)]);
      gens.push_back(std::move(swap_blocks));
    }
    offset += size;
  }
  return group_model_from_generators(std::move(gens), /*restrict_even=*/true);
}

std::vector<CycleTypeSample> frobenius_sample(const QPoly& F, std::uint64_t primes_up_to,
                                              int jobs, int* skipped) {
  if (!is_separable(Q, F)) throw InvalidInput("F must be separable");
  const QPoly F2 = substitute_square(Q, F);
  const auto primes = primes_up_to_n(primes_up_to);
  std::vector<CycleTypeSample> samples;
  int bad = 0;

  auto worker = [&](std::size_t begin, std::size_t end, std::vector<CycleTypeSample>& out, int& local_bad) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        CycleTypeSample s;
        s.p = primes[i];
        s.type_F = ddf_cycle_type(F, primes[i]);
        s.type_F2 = ddf_cycle_type(F2, primes[i]);
        out.push_back(std::move(s));
      } catch (const BadPrime&) {
        ++local_bad;
      }
    }
  };

  if (jobs <= 1) {
    worker(0, primes.size(), samples, bad);
  } else {
    const std::size_t n = primes.size();
    const std::size_t chunk = (n + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    std::vector<std::vector<CycleTypeSample>> outs(static_cast<std::size_t>(jobs));
    std::vector<int> bads(static_cast<std::size_t>(jobs), 0);
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
      const std::size_t b = std::min(n, static_cast<std::size_t>(j) * chunk);
      const std::size_t e = std::min(n, b + chunk);
      threads.emplace_back(worker, b, e, std::ref(outs[static_cast<std::size_t>(j)]),
                           std::ref(bads[static_cast<std::size_t>(j)]));
    }
    for (auto& t : threads) t.join();
    for (int j = 0; j < jobs; ++j) {
      samples.insert(samples.end(), outs[static_cast<std::size_t>(j)].begin(), outs[static_cast<std::size_t>(j)].end());
      bad += bads[static_cast<std::size_t>(j)];
    }
    std::sort(samples.begin(), samples.end(),
              [](const CycleTypeSample& a, const CycleTypeSample& b) { return a.p < b.p; });
  }
  if (skipped) *skipped = bad;
  return samples;
}

ConsistencyReport consistency(const std::vector<CycleTypeSample>& samples, const GroupModel& model) {
  ConsistencyReport rep;
  rep.samples = samples.size();
  rep.census_types = model.census.size();
  std::set<std::vector<int>> observed;
  rep.consistent = true;
  for (const auto& s : samples) {
    if (model.census.find(s.type_F2) == model.census.end()) {
      rep.consistent = false;
      rep.violating_primes.push_back(s.p);
    } else {
      observed.insert(s.type_F2);
    }
  }
  rep.observed_types = observed.size();
  rep.coverage = rep.census_types == 0 ? 0.0
                                       : static_cast<double>(rep.observed_types) /
                                             static_cast<double>(rep.census_types);
  return rep;
}

bool even_check(const QPoly& F) {
  return is_square_in_Q(discriminant(Q, substitute_square(Q, F)));
}

bool pair_refinement_ok(std::vector<int> type_F, std::vector<int> type_F2) {
  std::sort(type_F.begin(), type_F.end());
  std::sort(type_F2.begin(), type_F2.end());
  // Each part d consumes either (d, d) or (2d) from the doubled type.
  std::function<bool(std::size_t, std::multiset<int>&)> go = [&](std::size_t i,
                                                                 std::multiset<int>& remaining) {
    if (i == type_F.size()) return remaining.empty();
    const int d = type_F[i];
    auto it = remaining.find(d);
    if (it != remaining.end()) {
      auto node = remaining.extract(it);
      auto it2 = remaining.find(d);
      if (it2 != remaining.end()) {
        auto node2 = remaining.extract(it2);
        if (go(i + 1, remaining)) return true;
        remaining.insert(std::move(node2));
      }
      remaining.insert(std::move(node));
    }
    auto it3 = remaining.find(2 * d);
    if (it3 != remaining.end()) {
      auto node = remaining.extract(it3);
      if (go(i + 1, remaining)) return true;
      remaining.insert(std::move(node));
    }
    return false;
  };
  std::multiset<int> remaining(type_F2.begin(), type_F2.end());
  return go(0, remaining);
}

}  // namespace hexforge
