#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graev/errors.hpp"
#include "graev/rational.hpp"

namespace graev {

// Distance table row as it appears in input: one unordered pair per entry.
struct DistEntry {
  std::string a;
  std::string b;
  Rational value;
  int line = 0;  // 1-based source line for diagnostics, 0 when synthetic
};

// Where a point sits relative to K: inside it, or in the shell W(i) of
// points at distance [1/i, 1/(i-1)) from K (W(1) reaches out to infinity).
// Shell indices can reach 1/d for the closest non-K point, so they get the
// full 64-bit range.
struct Stratum {
  bool in_k;
  long long index;  // >= 1 when !in_k, 0 otherwise

  static Stratum k() { return Stratum{true, 0}; }
  static Stratum w(long long i) { return Stratum{false, i}; }

  std::string str() const {
    return in_k ? std::string("InK") : "W" + std::to_string(index);
  }

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

// Finite point set with an exact metric d and a designated subset K.
// Construction validates everything: ids, table completeness, and the three
// metric axioms (exactly, no tolerance).
class PointedSpace {
 public:
  static PointedSpace make(std::string name, std::vector<std::string> points,
                           const std::vector<DistEntry>& dists,
                           const std::vector<std::string>& kset) {
    PointedSpace s;
    s.name_ = std::move(name);
    if (points.empty()) fail(errc::syntax, "space has no points");
    s.ids_ = std::move(points);
    for (int i = 0; i < s.count(); ++i) {
      if (!s.index_.emplace(s.ids_[i], i).second)
        fail(errc::duplicate_point, "duplicate point '" + s.ids_[i] + "'",
             {s.ids_[i]});
    }
    s.in_k_.assign(s.count(), false);
    for (const std::string& id : kset) s.in_k_[s.require(id)] = true;

    const int n = s.count();
    s.d_.assign(static_cast<size_t>(n) * n, Rational(0));
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (const DistEntry& e : dists) {
      const int i = s.require(e.a, e.line);
      const int j = s.require(e.b, e.line);
      if (i == j)
        fail(errc::syntax, "self-distance for '" + e.a + "' (d(x,x)=0 is implicit)",
             {e.a}, e.line);
      if (seen[i * n + j])
        fail(errc::duplicate_distance,
             "pair (" + e.a + ", " + e.b + ") listed twice", {e.a, e.b},
             e.line);
      seen[i * n + j] = seen[j * n + i] = 1;
      s.d_[i * n + j] = s.d_[j * n + i] = e.value;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!seen[i * n + j])
          fail(errc::missing_distance,
               "missing distance (" + s.ids_[i] + ", " + s.ids_[j] + ")",
               {s.ids_[i], s.ids_[j]});

    check_axioms(s.ids_, s.d_, n);
    return s;
  }

  int count() const { return static_cast<int>(ids_.size()); }
  const std::string& name() const { return name_; }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  bool in_k(int i) const { return in_k_[i] != 0; }

  std::vector<int> k_members() const {
    std::vector<int> ks;
    for (int i = 0; i < count(); ++i)
      if (in_k_[i]) ks.push_back(i);
    return ks;
  }

  std::optional<int> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int require(const std::string& id, int line = 0) const {
    auto it = index_.find(id);
    if (it == index_.end())
      fail(errc::unknown_point, "unknown point '" + id + "'", {id}, line);
    return it->second;
  }

  const Rational& d(int i, int j) const { return d_[i * count() + j]; }

  // min over K of d(x, .); empty K yields the +infinity sentinel (nullopt).
  std::optional<Rational> dist_to_k(int x) const {
    check_point(x);
    std::optional<Rational> best;
    for (int i = 0; i < count(); ++i) {
      if (!in_k_[i]) continue;
      const Rational& v = d(x, i);
      if (!best || v < *best) best = v;
    }
    return best;
  }

  // InK iff d(x,K) = 0; otherwise W(ceil(1/d(x,K))), with every point in
  // W(1) when K is empty.  Boundary d = 1/n lands in W(n): the shells are
  // cut by strict-"<" balls.
  Stratum stratum(int x) const {
    const std::optional<Rational> dk = dist_to_k(x);
    if (!dk) return Stratum::w(1);
    if (dk->is_zero()) return Stratum::k();
    const Int idx = (Rational(1) / *dk).ceil();  // >= 1 for any d > 0
    return Stratum::w(to_int64(idx));
  }

  // Shared by make() and Metric validation; witness order matches the
  // reporting convention (x, y, z) with d(x,y) > d(x,z) + d(z,y).
  static void check_axioms(const std::vector<std::string>& ids,
                           const std::vector<Rational>& table, int n) {
    for (int i = 0; i < n; ++i) {
      if (!table[i * n + i].is_zero())
        fail(errc::metric_identity, "d(" + ids[i] + ", " + ids[i] + ") != 0",
             {ids[i], ids[i]});
      for (int j = i + 1; j < n; ++j) {
        if (table[i * n + j] != table[j * n + i])
          fail(errc::metric_symmetry,
               "d(" + ids[i] + ", " + ids[j] + ") is asymmetric",
               {ids[i], ids[j]});
        if (!(table[i * n + j] > Rational(0)))
          fail(errc::metric_identity,
               "d(" + ids[i] + ", " + ids[j] + ") not positive",
               {ids[i], ids[j]});
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int z = 0; z < n; ++z) {
          if (z == i || z == j) continue;
          if (table[i * n + j] > table[i * n + z] + table[z * n + j])
            fail(errc::metric_triangle,
                 "d(" + ids[i] + ", " + ids[j] + ") > d via " + ids[z],
                 {ids[i], ids[j], ids[z]});
        }
  }

 private:
  void check_point(int x) const {
    if (x < 0 || x >= count())
      fail(errc::unknown_point, "point index out of range",
           {std::to_string(x)});
  }

  std::string name_;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<Rational> d_;
  std::vector<char> in_k_;
};

using SpacePtr = std::shared_ptr<const PointedSpace>;

// Which clause of the compatible-metric construction produced a value.
enum class SnapRule {
  cross_shell = 2,  // different shells, d below |i-j|/(ij)
  same_shell = 3,   // same shell, d below 1/(i(i+1))
  base = 4,         // everything else: keep d
};

struct SnapEntry {
  SnapRule rule;
  Rational value;
};

// The per-pair rule selector, reproducible from the strata and d alone.
// Pairs touching K always fall through to the base clause.
inline SnapEntry yamada_entry(const PointedSpace& s, int x, int y) {
  const Rational& dxy = s.d(x, y);
  const Stratum sx = s.stratum(x);
  const Stratum sy = s.stratum(y);
  if (!sx.in_k && !sy.in_k) {
    const Int i = sx.index, j = sy.index;
    if (i != j) {
      const Rational snap(boost::multiprecision::abs(Int(i - j)), i * j);
      if (dxy < snap) return {SnapRule::cross_shell, snap};
    } else {
      const Rational snap(Int(1), i * (i + 1));
      if (dxy < snap) return {SnapRule::same_shell, snap};
    }
  }
  return {SnapRule::base, dxy};
}

// Exact metric over a space: the compatible construction, a scaled copy of
// it, or a user-supplied table.  Always axiom-checked on the paths where
// violations are possible.
class Metric {
 public:
  // The compatible metric: snap small same-shell and cross-shell distances
  // up to the quantized values, keep d otherwise.  The result is revalidated
  // against all three axioms; a failure here is a bug, not an input error.
  static Metric yamada(SpacePtr space) {
    const int n = space->count();
    std::vector<Rational> t(static_cast<size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        t[i * n + j] = t[j * n + i] = yamada_entry(*space, i, j).value;
    PointedSpace::check_axioms(space->ids(), t, n);
    return Metric(std::move(space), std::move(t), Rational(1));
  }

  static Metric from_table(SpacePtr space, std::vector<Rational> table) {
    const int n = space->count();
    if (table.size() != static_cast<size_t>(n) * n)
      fail(errc::syntax, "metric table size mismatch");
    PointedSpace::check_axioms(space->ids(), table, n);
    return Metric(std::move(space), std::move(table), Rational(1));
  }

  Metric scaled(const Rational& c) const {
    if (!(c > Rational(0)))
      fail(errc::nonpositive_scale, "scale factor must be positive", {c.str()});
    Metric m(space_, table_, scale_ * c);
    for (Rational& v : m.table_) v *= c;
    return m;
  }

  const PointedSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  const Rational& scale_factor() const { return scale_; }
  const Rational& rho(int i, int j) const {
    return table_[i * space_->count() + j];
  }

 private:
  Metric(SpacePtr space, std::vector<Rational> table, Rational scale)
      : space_(std::move(space)),
        table_(std::move(table)),
        scale_(std::move(scale)) {}

  SpacePtr space_;
  std::vector<Rational> table_;
  Rational scale_;  // cumulative factor relative to the metric as built
};

// Shell-separation check: every point at base distance >= 1/k from K must
// keep rho-distance > 1/(k+1)^2 from every other point.  Total: returns the
// first violating pair instead of throwing.
struct GapReport {
  bool pass = true;
  int x = -1;
  int y = -1;
  Rational rho_xy;
  Rational threshold;
};

inline GapReport gap_check(const Metric& m, int k) {
  if (k < 1) fail(errc::syntax, "shell index must be >= 1");
  const PointedSpace& s = m.space();
  const Rational cutoff(1, k);
  const Rational threshold(1, Int(k + 1) * (k + 1));
  GapReport r;
  r.threshold = threshold;
  for (int x = 0; x < s.count(); ++x) {
    const std::optional<Rational> dk = s.dist_to_k(x);
    if (dk && *dk < cutoff) continue;  // x in the 1/k-ball around K
    for (int y = 0; y < s.count(); ++y) {
      if (y == x) continue;
      if (!(m.rho(x, y) > threshold)) {
        r.pass = false;
        r.x = x;
        r.y = y;
        r.rho_xy = m.rho(x, y);
        return r;
      }
    }
  }
  return r;
}

}  // namespace graev
