#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graev/space.hpp"

namespace graev {

// Space from a line embedding with optional nonnegative leaf perturbations:
// d(x,y) = |coord(x) - coord(y)| + delta(x) + delta(y).  Triangle-safe by
// construction for any deltas >= 0; positivity still goes through full
// validation in PointedSpace::make.
struct LinePoint {
  std::string id;
  Rational coord;
  Rational delta;  // default 0: plain line embedding
};

inline SpacePtr make_line_space(std::string name,
                                const std::vector<LinePoint>& pts,
                                const std::vector<std::string>& kset) {
  std::vector<std::string> ids;
  ids.reserve(pts.size());
  for (const LinePoint& p : pts) ids.push_back(p.id);
  std::vector<DistEntry> dists;
  dists.reserve(pts.size() * (pts.size() - 1) / 2);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      dists.push_back(DistEntry{
          pts[i].id, pts[j].id,
          (pts[i].coord - pts[j].coord).abs() + pts[i].delta + pts[j].delta});
  return std::make_shared<const PointedSpace>(
      PointedSpace::make(std::move(name), std::move(ids), dists, kset));
}

// On-demand generator of finite samples from an indexed family of spaces.
// The built-in `doublecomb(M)` family puts K = {k} at the origin of a line
// and, for each m = 1..M, a twin pair c_m at 1/m and c_m' slightly past it
// at 1/m + 1/(2m(m+1)); twins share the shell W(m) and sit close enough
// that their snapped distance is exactly 1/(m(m+1)).
class ParametricFamily {
 public:
  static ParametricFamily doublecomb(int depth) {
    if (depth < 1)
      fail(errc::family_too_shallow, "family depth must be >= 1",
           {std::to_string(depth)});
    return ParametricFamily("doublecomb", depth);
  }

  static ParametricFamily named(const std::string& name, int depth) {
    if (name == "doublecomb") return doublecomb(depth);
    fail(errc::unknown_family, "unknown family '" + name + "'", {name});
  }

  const std::string& name() const { return name_; }
  int depth() const { return depth_; }

  static std::string twin_id(int m, bool primed) {
    return "c" + std::to_string(m) + (primed ? "p" : "");
  }

  // "c<m>" / "c<m>p" -> (m, primed); "k" and anything else -> nullopt.
  static std::optional<std::pair<int, bool>> parse_twin(
      const std::string& id) {
    if (id.size() < 2 || id[0] != 'c') return std::nullopt;
    size_t end = id.size();
    bool primed = false;
    if (id.back() == 'p') {
      primed = true;
      --end;
    }
    if (end < 2) return std::nullopt;
    int m = 0;
    for (size_t i = 1; i < end; ++i) {
      if (id[i] < '0' || id[i] > '9') return std::nullopt;
      m = m * 10 + (id[i] - '0');
      if (m > 1000000) return std::nullopt;
    }
    return m >= 1 ? std::make_optional(std::make_pair(m, primed))
                  : std::nullopt;
  }

  static Rational twin_coord(int m, bool primed) {
    Rational c(1, m);
    if (primed) c += Rational(1, Int(2) * m * (m + 1));
    return c;
  }

  // Concrete validated sample holding k plus both twins of every requested
  // index (deduplicated, ascending).
  SpacePtr sample(std::vector<int> indices) const {
    if (indices.empty())
      fail(errc::empty_index_set, "family sample needs at least one index");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int m : indices)
      if (m < 1 || m > depth_)
        fail(errc::family_too_shallow,
             "index " + std::to_string(m) + " outside family depth " +
                 std::to_string(depth_),
             {std::to_string(m)});
    std::vector<LinePoint> pts;
    pts.reserve(1 + 2 * indices.size());
    pts.push_back(LinePoint{"k", Rational(0), Rational(0)});
    for (int m : indices) {
      pts.push_back(LinePoint{twin_id(m, false), twin_coord(m, false),
                              Rational(0)});
      pts.push_back(LinePoint{twin_id(m, true), twin_coord(m, true),
                              Rational(0)});
    }
    return make_line_space(name_, pts, {"k"});
  }

 private:
  ParametricFamily(std::string name, int depth)
      : name_(std::move(name)), depth_(depth) {}

  std::string name_;
  int depth_;
};

}  // namespace graev
