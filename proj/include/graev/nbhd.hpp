#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graev/graev.hpp"

namespace graev {

// Membership in the norm ball {g : N(g) < 1/n}: the certificate carries the
// exact norm and threshold so the verdict re-validates by recomputation.
struct NormBallCertificate {
  bool verdict = false;
  int n = 0;
  Rational norm;
  Rational threshold;
  NormResult detail;
};

inline NormBallCertificate in_un(const StarMetric& star, const Word& g, int n,
                                 int max_len = 4) {
  if (n < 1) fail(errc::syntax, "ball index must be >= 1");
  NormBallCertificate c;
  c.n = n;
  c.detail = graev_norm(star, g, max_len);
  c.norm = c.detail.value;
  c.threshold = Rational(1, n);
  c.verdict = c.norm < c.threshold;  // strict: the boundary stays outside
  return c;
}

// A word is admissible for the insertion neighborhood when consecutive
// letters are star-separated by at least 1 — equivalently, no cancelling or
// snapped-together pair survives at this scale.
inline bool admissible(const StarMetric& star, const Word& g) {
  if (g.empty()) fail(errc::empty_word, "admissibility needs letters");
  const auto& x = g.letters();
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (star.dist(x[i].inverse(), x[i + 1]) < Rational(1)) return false;
  return true;
}

// One insertion spelling: x_1 .. x_i y^eps z^-eps x_{i+1} .. x_n with every
// x_k sharing a_k's sign.  Stored by point index; `insert_at` = i.
struct InsertionWitness {
  int insert_at = 0;
  int eps = 1;
  int y = 0;
  int z = 0;
  std::vector<int> x;  // substituted points, one per letter of g
  Rational cost;

  RawWord spelling(const Word& g) const {
    RawWord w;
    const auto& a = g.letters();
    for (int k = 0; k < insert_at; ++k)
      w.push_back(Letter::make(x[k], a[k].sign));
    w.push_back(Letter::make(y, eps));
    w.push_back(Letter::make(z, -eps));
    for (size_t k = insert_at; k < a.size(); ++k)
      w.push_back(Letter::make(x[k], a[k].sign));
    return w;
  }
};

// Certificate for the insertion neighborhood around an admissible word g:
// either a witnessing spelling with exact cost < 1, or the exhaustion
// marker recording that the full finite candidate space was searched.
struct InsertionCertificate {
  bool verdict = false;
  Word base;
  Word target;
  std::optional<InsertionWitness> witness;
  bool exhausted = false;  // set on negative verdicts
};

// Does h lie in the insertion neighborhood of g?  Searches insertion
// position, sign, the inserted pair (y, z), and per-letter substitutes
// x_k with rho(a_k, x_k) summed into the strict budget of 1, depth-first
// in lexicographic order (i, eps, y, z, x_1..x_n), pruning on the running
// cost; the first witness found is therefore the lexicographically least.
inline InsertionCertificate in_ug(const StarMetric& star, const Word& g,
                                  const Word& h) {
  if (!admissible(star, g))
    fail(errc::not_admissible,
         "base word is not admissible at this scale");
  const int n = g.length();
  if (h.length() > n + 2)
    fail(errc::length_over_bound,
         "target exceeds the insertion length bound",
         {std::to_string(h.length()), std::to_string(n + 2)});

  InsertionCertificate cert;
  cert.base = g;
  cert.target = h;

  const Metric& m = star.metric();
  const PointedSpace& s = m.space();
  const int pts = s.count();
  const Rational one(1);
  const auto& a = g.letters();

  // candidate substitutes per slot, and the cheap pairs, both cost-bounded
  // by the strict budget
  std::vector<std::vector<int>> cands(n);
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < pts; ++x)
      if (m.rho(a[k].point, x) < one) cands[k].push_back(x);

  std::vector<int> xs(n, 0);
  const auto try_assignment = [&](int insert_at, int eps, int y,
                                  int z) -> bool {
    const Rational base_cost = m.rho(y, z);
    if (!(base_cost < one)) return false;
    // depth-first over substitutes with running-cost pruning
    const auto rec = [&](auto&& self, int k, const Rational& cost) -> bool {
      if (k == n) {
        InsertionWitness w;
        w.insert_at = insert_at;
        w.eps = eps;
        w.y = y;
        w.z = z;
        w.x = xs;
        w.cost = cost;
        if (reduce(w.spelling(g)) != h) return false;
        cert.verdict = true;
        cert.witness = std::move(w);
        return true;
      }
      for (int x : cands[k]) {
        const Rational next = cost + m.rho(a[k].point, x);
        if (!(next < one)) continue;
        xs[k] = x;
        if (self(self, k + 1, next)) return true;
      }
      return false;
    };
    return rec(rec, 0, base_cost);
  };

  for (int insert_at = 0; insert_at <= n && !cert.verdict; ++insert_at)
    for (int eps : {+1, -1}) {
      if (cert.verdict) break;
      for (int y = 0; y < pts && !cert.verdict; ++y)
        for (int z = 0; z < pts && !cert.verdict; ++z)
          try_assignment(insert_at, eps, y, z);
    }
  if (!cert.verdict) cert.exhausted = true;
  return cert;
}

}  // namespace graev
