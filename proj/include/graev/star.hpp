#pragma once

#include <utility>

#include "graev/space.hpp"
#include "graev/words.hpp"

namespace graev {

// Extension of a metric from points to the letter domain X u X^{-1} u {e}:
// the neutral letter sits at 1 + rho(x0, x) from both signs of x, same-sign
// pairs keep their point distance, and opposite-sign pairs go through e.
// The "+1" is applied after any scaling of the base metric, so scaled
// metrics still hold every letter at distance >= 1 from e.
class StarMetric {
 public:
  static StarMetric at(Metric metric, int basepoint) {
    const PointedSpace& s = metric.space();
    if (basepoint < 0 || basepoint >= s.count())
      fail(errc::unknown_point, "basepoint index out of range",
           {std::to_string(basepoint)});
    StarMetric st(std::move(metric), basepoint);
    const int n = st.metric_.space().count();
    st.e_row_.reserve(n);
    for (int x = 0; x < n; ++x)
      st.e_row_.push_back(Rational(1) + st.metric_.rho(basepoint, x));

    // The whole letter table is materialized up front so dist() is a plain
    // lookup; the norm search and the membership searches hammer it.
    st.side_ = 2 * n + 1;
    st.table_.assign(static_cast<size_t>(st.side_) * st.side_, Rational(0));
    for (int a = 1; a < st.side_; ++a) {
      const int pa = (a - 1) / 2;
      const int sa = (a - 1) % 2;  // 0 = positive, 1 = inverse
      st.table_[a] = st.table_[static_cast<size_t>(a) * st.side_] =
          st.e_row_[pa];
      for (int b = 1; b < st.side_; ++b) {
        const int pb = (b - 1) / 2;
        st.table_[static_cast<size_t>(a) * st.side_ + b] =
            sa == (b - 1) % 2 ? st.metric_.rho(pa, pb)
                              : st.e_row_[pa] + st.e_row_[pb];
      }
    }
    return st;
  }

  const Metric& metric() const { return metric_; }
  const PointedSpace& space() const { return metric_.space(); }
  int basepoint() const { return basepoint_; }

  const Rational& e_dist(int point) const { return e_row_[point]; }

  const Rational& dist(const Letter& a, const Letter& b) const {
    return table_[static_cast<size_t>(index_of(a)) * side_ + index_of(b)];
  }

 private:
  StarMetric(Metric metric, int basepoint)
      : metric_(std::move(metric)), basepoint_(basepoint) {}

  static int index_of(const Letter& l) {
    return l.is_neutral() ? 0 : 1 + 2 * l.point + (l.sign < 0 ? 1 : 0);
  }

  Metric metric_;
  int basepoint_;
  std::vector<Rational> e_row_;   // 1 + rho(x0, .) per point
  int side_ = 0;                  // letter count incl. the neutral slot
  std::vector<Rational> table_;   // side_ x side_, e first
};

}  // namespace graev
