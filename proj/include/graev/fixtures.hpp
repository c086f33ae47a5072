#pragma once

#include "graev/family.hpp"

namespace graev {

// The 7-point line fixture used throughout the tests and CLI examples:
// K = {k} at 0, one far point p1 at 1, a W2/W2/W3 cluster (u, w, v) near
// 1/2, and a W9 twin pair (q, r) near 1/9.  Every worked value in the test
// suite is reproducible from these coordinates alone.
inline SpacePtr comb_space() {
  return make_line_space(
      "comb",
      {
          {"k", Rational(0), Rational(0)},
          {"p1", Rational(1), Rational(0)},
          {"u", Rational(51, 100), Rational(0)},
          {"w", Rational(13, 25), Rational(0)},
          {"v", Rational(49, 100), Rational(0)},
          {"q", Rational(1, 9), Rational(0)},
          {"r", Rational(23, 200), Rational(0)},
      },
      {"k"});
}

}  // namespace graev
