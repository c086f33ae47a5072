#pragma once

// Shared by the unit and acceptance suites: deterministic random pointed
// spaces that are valid by construction.  Points sit on a line at distinct
// rational coordinates with optional nonnegative leaf perturbations, so the
// triangle inequality holds for every triple; K is a random (possibly
// empty) subset.

#include <random>
#include <string>
#include <vector>

#include "graev/family.hpp"

namespace graev_test {

inline graev::SpacePtr random_line_space(std::mt19937_64& rng, int max_points,
                                         bool allow_empty_k = true) {
  std::uniform_int_distribution<int> npts(2, max_points);
  std::uniform_int_distribution<int> denom(1, 12);
  std::uniform_int_distribution<int> numer(0, 60);
  std::uniform_int_distribution<int> delta_kind(0, 3);
  std::uniform_int_distribution<int> k_kind(0, 3);

  const int n = npts(rng);
  std::vector<graev::LinePoint> pts;
  std::vector<bool> used_num(61, false);
  const int d = denom(rng);  // one common denominator per space
  for (int i = 0; i < n; ++i) {
    int num = numer(rng);
    while (used_num[num]) num = (num + 1) % 61;
    used_num[num] = true;
    graev::Rational delta(0);
    if (delta_kind(rng) == 0) delta = graev::Rational(1, 2 + (num % 7));
    pts.push_back(graev::LinePoint{"x" + std::to_string(i),
                                   graev::Rational(num, d), delta});
  }

  std::vector<std::string> kset;
  // 0: empty K (when allowed), 1: one point, 2-3: several points
  const int kk = k_kind(rng);
  if (kk >= 1 || !allow_empty_k) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int want = kk <= 1 ? 1 : std::min(n - 1, 1 + kk);
    for (int t = 0; t < want; ++t) kset.push_back(pts[pick(rng)].id);
  }
  return graev::make_line_space("rand", pts, kset);
}

}  // namespace graev_test
