#pragma once

// Random instance generators and brute-force oracles for the resolution
// graph side. No test framework dependency, so the acceptance runner can
// use them too.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subadd/surface.hpp"

namespace subadd::testing {

using surface::Cycle;
using surface::QCycle;
using surface::ResolutionModel;

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Catalog base graph: HJ(r,a) for small r or an ADE diagram.
inline surface::ModelDescription random_catalog_base(std::mt19937_64& rng) {
  static const std::vector<std::string> ade = {"A1", "A2", "A3", "A4", "D4", "D5", "E6", "E7", "E8"};
  if (uniform(rng, 0, 1) == 0) return surface::ade(ade[uniform(rng, 0, int(ade.size()) - 1)]).description();
  for (;;) {
    int r = uniform(rng, 2, 13), a = uniform(rng, 1, r - 1);
    if (std::gcd(r, a) == 1) return surface::hirzebruch_jung(r, a).description();
  }
}

/// Appends `count` random blowups: a general point of a random curve or
/// the intersection point of two curves that currently meet.
inline ResolutionModel add_random_blowups(surface::ModelDescription d, int count, std::mt19937_64& rng) {
  for (int t = 0; t < count; ++t) {
    ResolutionModel cur = surface::build_model(d);
    const int n = int(cur.size());
    std::vector<std::pair<int, int>> meets;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (cur.meet(i, j) > 0) meets.emplace_back(i, j);
    surface::BlowupSpec b;
    b.name = "B" + std::to_string(t + 1);
    if (!meets.empty() && uniform(rng, 0, 1) == 0) {
      auto [i, j] = meets[uniform(rng, 0, int(meets.size()) - 1)];
      b.center_on = {cur.curve(i).name, cur.curve(j).name};
    } else {
      b.center_on = {cur.curve(uniform(rng, 0, n - 1)).name};
    }
    d.blowups.push_back(b);
  }
  return surface::build_model(d);
}

inline ResolutionModel random_catalog_model(std::mt19937_64& rng, int max_blowups) {
  return add_random_blowups(random_catalog_base(rng), uniform(rng, 0, max_blowups), rng);
}

/// Random effective cycle with coefficients in [0, hi] on exceptional curves.
inline Cycle random_effective(const ResolutionModel& m, std::mt19937_64& rng, int hi) {
  Cycle z(m.size());
  for (auto i : m.exceptional()) z[i] = uniform(rng, 0, hi);
  return z;
}

/// Brute force: componentwise minimum of all anti-nef cycles W with
/// max(z,0) <= W <= max(z,0) + box (marked coefficients fixed). Returns
/// nullopt if the box holds no anti-nef cycle.
inline std::optional<Cycle> brute_force_closure(const ResolutionModel& m, const Cycle& z, int box) {
  Cycle lo = z;
  for (auto i : m.exceptional()) lo[i] = std::max<std::int64_t>(lo[i], 0);
  const auto& exc = m.exceptional();
  std::optional<Cycle> best;
  Cycle w = lo;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == exc.size()) {
      for (auto i : exc) {
        std::int64_t row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) row += m.meet(i, j) * w[j];
        if (row > 0) return;
      }
      if (!best) {
        best = w;
      } else {
        for (std::size_t j = 0; j < m.size(); ++j) (*best)[j] = std::min((*best)[j], w[j]);
      }
      return;
    }
    for (int c = 0; c <= box; ++c) {
      w[exc[k]] = lo[exc[k]] + c;
      rec(k + 1);
    }
    w[exc[k]] = lo[exc[k]];
  };
  rec(0);
  return best;
}

}  // namespace subadd::testing
