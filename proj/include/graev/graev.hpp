#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "graev/scheme.hpp"
#include "graev/star.hpp"
#include "graev/words.hpp"

namespace graev {

namespace detail {

inline void check_letters(const StarMetric& star, const RawWord& x) {
  for (const Letter& l : x)
    if (!l.is_neutral() && l.point >= star.space().count())
      fail(errc::unknown_point, "letter point outside the space",
           {std::to_string(l.point)});
}

}  // namespace detail

// Cost of a spelling under a pairing: the sum over pairs (a, b), a < b, of
// rho*(x_a^{-1}, x_b).  Summing each position's half-cost instead gives the
// same value because rho* is symmetric and inverse-invariant (tested).
inline Rational gamma(const StarMetric& star, const RawWord& x,
                      const Scheme& phi) {
  if (x.size() % 2 != 0)
    fail(errc::length_mismatch, "cost needs an even-length spelling",
         {std::to_string(x.size())});
  if (phi.positions() != static_cast<int>(x.size()))
    fail(errc::length_mismatch, "scheme size does not match spelling length",
         {std::to_string(phi.positions()), std::to_string(x.size())});
  validate_scheme(phi, static_cast<int>(x.size()));
  detail::check_letters(star, x);
  Rational total(0);
  for (const auto& [a, b] : phi.pairs)
    total += star.dist(x[a - 1].inverse(), x[b - 1]);
  return total;
}

// Best cost of one fixed spelling over all schemes (plain enumeration; the
// search route below uses the interval decomposition instead, and the two
// must agree exactly).  Odd-length input is padded with one trailing
// neutral letter, which does not change the reduction class.
inline Rational norm_word(const StarMetric& star, RawWord x) {
  if (x.size() % 2 != 0) x.push_back(Letter::neutral());
  detail::check_letters(star, x);
  const int n = static_cast<int>(x.size()) / 2;
  bool first = true;
  Rational best(0);
  for (const Scheme& phi : schemes(n)) {
    const Rational c = gamma(star, x, phi);
    if (first || c < best) {
      best = c;
      first = false;
    }
  }
  return best;
}

namespace detail {

// Alphabet for the norm search: index 0 is the neutral letter, the rest are
// the distinct letters of g in canonical order.  The restriction to g's own
// letters (no extra inverses) is exactly the search space the norm value
// needs; anything larger cannot lower the minimum.
struct Alphabet {
  std::vector<Letter> letters;
  std::vector<int> g_digits;  // g spelled as alphabet indices

  int size() const { return static_cast<int>(letters.size()); }
};

inline Alphabet make_alphabet(const Word& g) {
  Alphabet a;
  a.letters.push_back(Letter::neutral());
  std::vector<Letter> ls = g.letters();
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  a.letters.insert(a.letters.end(), ls.begin(), ls.end());
  for (const Letter& l : g.letters()) {
    const auto it = std::lower_bound(a.letters.begin() + 1, a.letters.end(), l);
    a.g_digits.push_back(static_cast<int>(it - a.letters.begin()));
  }
  return a;
}

// Pairwise letter costs rho*(A[a]^{-1}, A[b]), exact, plus an optional
// common-denominator int64 rendering for the hot loops.  The integer path
// is used only when every scaled numerator provably fits with headroom for
// the largest possible sum; otherwise the search runs on full rationals.
struct CostTable {
  int k = 0;
  std::vector<Rational> exact;       // k*k
  bool small = false;
  std::int64_t den = 1;
  std::vector<std::int64_t> num;     // k*k, only valid when small

  const Rational& at(int a, int b) const { return exact[a * k + b]; }
};

inline CostTable make_cost_table(const StarMetric& star, const Alphabet& a,
                                 int max_pairs) {
  CostTable t;
  t.k = a.size();
  t.exact.reserve(t.k * t.k);
  Int den(1);
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j) {
      t.exact.push_back(star.dist(a.letters[i].inverse(), a.letters[j]));
      den = lcm(den, t.exact.back().den());
    }
  if (!fits_int64(den)) return t;
  t.den = to_int64(den);
  const Int cap = Int(std::numeric_limits<std::int64_t>::max()) /
                  (max_pairs > 0 ? max_pairs : 1);
  t.num.reserve(t.exact.size());
  for (const Rational& v : t.exact) {
    const Int scaled = v.num() * (den / v.den());
    if (scaled < 0 || scaled > cap) return t;
    t.num.push_back(to_int64(scaled));
  }
  t.small = true;
  return t;
}

// Minimum cost over all schemes for a fixed spelling, by interval
// decomposition: position i must pair with some k of opposite parity
// inside the interval, splitting it into independent inner and outer
// parts (pairs never cross).  Agrees with plain enumeration exactly.
template <typename S, typename CostFn>
S min_over_schemes_dp(const int* digits, int len, const CostFn& cost) {
  if (len == 0) return S(0);
  // G[i][j] over even-length intervals [i, j]
  std::array<std::array<S, 8>, 9> G{};
  for (int span = 2; span <= len; span += 2)
    for (int i = 0; i + span <= len; ++i) {
      const int j = i + span - 1;
      bool first = true;
      S best(0);
      for (int k = i + 1; k <= j; k += 2) {
        S c = cost(digits[i], digits[k]);
        if (k > i + 1) c = c + G[i + 1][k - 1];
        if (k < j) c = c + G[k + 1][j];
        if (first || c < best) {
          best = c;
          first = false;
        }
      }
      G[i][j] = best;
    }
  return G[0][len - 1];
}

// Flat per-length scheme views (0-based pairs) for the oracle's inner loop,
// cached like schemes() itself — the oracle asks for them per word.
inline const std::vector<std::vector<std::pair<int, int>>>& scheme_views(
    int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<std::pair<int, int>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::vector<std::pair<int, int>>> v;
    for (const Scheme& s : schemes(n)) {
      std::vector<std::pair<int, int>> ps;
      ps.reserve(s.pairs.size());
      for (const auto& [a, b] : s.pairs) ps.emplace_back(a - 1, b - 1);
      v.push_back(std::move(ps));
    }
    it = cache.emplace(n, std::move(v)).first;
  }
  return it->second;
}

inline std::vector<std::vector<char>> cancel_matrix(const Alphabet& a) {
  std::vector<std::vector<char>> m(a.size(), std::vector<char>(a.size(), 0));
  for (int i = 1; i < a.size(); ++i)
    for (int j = 1; j < a.size(); ++j)
      m[i][j] = cancels(a.letters[i], a.letters[j]) ? 1 : 0;
  return m;
}

}  // namespace detail

// Result of the norm search: the exact value and the minimizing spelling
// and pairing (lexicographically smallest word, then smallest scheme), with
// the basepoint and the length bound that delimited the search.  The value
// is always re-derived from the witness by an exact cost evaluation.
struct NormResult {
  Rational value;
  RawWord witness_word;
  Scheme witness_scheme;
  int basepoint = 0;
  int length_bound = 0;
};

namespace detail {

// Depth-first search over spellings of a fixed even length L with exact
// feasibility pruning: a partial spelling with reduced prefix S can only
// finish on g if the free-group distance l(S^{-1} g) = (|S| - c) + (l(g) - c)
// fits in the remaining slots, c being the longest common prefix of S and
// g.  The bound ignores which letters are actually available, so it never
// prunes a viable completion.
template <typename S, typename CostFn>
struct NormSearch {
  const Alphabet& A;
  const std::vector<std::vector<char>>& cancel;
  const CostFn& cost;
  int L = 0;
  int gl = 0;

  std::vector<int> digits;
  std::vector<int> stack;
  int prefix = 0;

  bool have_best = false;
  S best{};
  std::vector<int> best_digits;
  int best_len = 0;

  void run(int len) {
    L = len;
    digits.assign(L, 0);
    stack.clear();
    prefix = 0;
    descend(0);
  }

  void descend(int p) {
    const int m = static_cast<int>(stack.size());
    const int need = (m - prefix) + (gl - prefix);
    if (need > L - p) return;
    if (p == L) {
      if (m != gl || prefix != gl) return;
      const S c =
          min_over_schemes_dp<S, CostFn>(digits.data(), L, cost);
      if (!have_best || c < best) {
        have_best = true;
        best = c;
        best_digits.assign(digits.begin(), digits.begin() + L);
        best_len = L;
      }
      return;
    }
    for (int a = 0; a < A.size(); ++a) {
      digits[p] = a;
      if (a == 0) {
        descend(p + 1);
        continue;
      }
      if (m > 0 && cancel[stack.back()][a]) {
        const int popped = stack.back();
        stack.pop_back();
        const int saved_prefix = prefix;
        prefix = std::min(prefix, m - 1);
        descend(p + 1);
        prefix = saved_prefix;
        stack.push_back(popped);
      } else {
        const bool extend = prefix == m && m < gl && a == A.g_digits[m];
        stack.push_back(a);
        if (extend) ++prefix;
        descend(p + 1);
        if (extend) --prefix;
        stack.pop_back();
      }
    }
  }
};

template <typename S, typename CostFn>
void run_norm_search(NormSearch<S, CostFn>& search, int max_len) {
  for (int len = 2; len <= max_len; len += 2) search.run(len);
}

}  // namespace detail

// The prenorm: exact minimum of the pairing cost over every spelling of
// even length <= 2 l(g) drawn from g's letters plus the neutral symbol that
// reduces to g, and every scheme.  N(e) = 0 with the empty witness.
inline NormResult graev_norm(const StarMetric& star, const Word& g,
                             int max_len = 4) {
  if (g.length() > max_len)
    fail(errc::length_over_bound,
         "norm search is bounded to length " + std::to_string(max_len),
         {std::to_string(g.length())});
  detail::check_letters(star, RawWord(g.letters().begin(), g.letters().end()));

  NormResult r;
  r.basepoint = star.basepoint();
  r.length_bound = 2 * g.length();
  if (g.empty()) {
    r.value = Rational(0);
    return r;
  }

  const detail::Alphabet A = detail::make_alphabet(g);
  const auto cancel = detail::cancel_matrix(A);
  const detail::CostTable tbl = detail::make_cost_table(star, A, g.length());

  std::vector<int> best_digits;
  if (tbl.small) {
    const auto cost = [&](int a, int b) { return tbl.num[a * tbl.k + b]; };
    detail::NormSearch<std::int64_t, decltype(cost)> search{A, cancel, cost};
    search.gl = g.length();
    detail::run_norm_search(search, r.length_bound);
    if (!search.have_best)
      fail(errc::internal, "norm search found no spelling");
    r.value = Rational(search.best, tbl.den);
    best_digits = std::move(search.best_digits);
  } else {
    const auto cost = [&](int a, int b) -> Rational {
      return tbl.at(a, b);
    };
    detail::NormSearch<Rational, decltype(cost)> search{A, cancel, cost};
    search.gl = g.length();
    detail::run_norm_search(search, r.length_bound);
    if (!search.have_best)
      fail(errc::internal, "norm search found no spelling");
    r.value = search.best;
    best_digits = std::move(search.best_digits);
  }

  r.witness_word.reserve(best_digits.size());
  for (int d : best_digits) r.witness_word.push_back(A.letters[d]);

  // smallest scheme attaining the value on the witness spelling, and the
  // exact-recompute guard over the integer fast path
  for (const Scheme& phi : schemes(static_cast<int>(best_digits.size()) / 2)) {
    if (gamma(star, r.witness_word, phi) == r.value) {
      r.witness_scheme = phi;
      return r;
    }
  }
  fail(errc::internal, "norm witness does not reproduce its value");
}

// Ground-truth twin of graev_norm: enumerate every spelling of the same
// search space outright — cores over g's non-neutral letters filtered by
// literal reduction, the neutral letter interleaved in all possible ways —
// and evaluate every scheme on every spelling.  No cost pruning, no early
// exit, no interval decomposition; only the minimum is kept.
inline Rational oracle_norm(const StarMetric& star, const Word& g,
                            int max_len = 4) {
  if (g.length() > max_len)
    fail(errc::length_over_bound,
         "norm oracle is bounded to length " + std::to_string(max_len),
         {std::to_string(g.length())});
  detail::check_letters(star, RawWord(g.letters().begin(), g.letters().end()));
  if (g.empty()) return Rational(0);

  const detail::Alphabet A = detail::make_alphabet(g);
  const auto cancel = detail::cancel_matrix(A);
  const int gl = g.length();
  const int max_spelling = 2 * gl;
  const detail::CostTable tbl = detail::make_cost_table(star, A, gl);

  // Every e-free sequence over the alphabet that reduces to g.  When no two
  // alphabet letters cancel, reduction cannot shorten any core, so g itself
  // is the only one; otherwise scan the full K^c grid for every length.
  std::vector<std::vector<int>> cores;
  bool any_cancel = false;
  for (int i = 1; i < A.size() && !any_cancel; ++i)
    for (int j = 1; j < A.size() && !any_cancel; ++j)
      if (cancel[i][j]) any_cancel = true;
  if (!any_cancel) {
    cores.push_back(A.g_digits);
  } else {
    // Exhaustive scan of every digit string of each core length, as a tree
    // walk so the reduction stack updates in place instead of being redone
    // per string.  Same strings, same reductions, no feasibility pruning.
    const int k = A.size() - 1;  // non-neutral letters
    std::vector<int> core(max_spelling), stack;
    stack.reserve(max_spelling);
    const auto scan = [&](auto&& self, int pos, int len) -> void {
      if (pos == len) {
        if (stack == A.g_digits)
          cores.emplace_back(core.begin(), core.begin() + len);
        return;
      }
      for (int d = 1; d <= k; ++d) {
        core[pos] = d;
        if (!stack.empty() && cancel[stack.back()][d]) {
          const int popped = stack.back();
          stack.pop_back();
          self(self, pos + 1, len);
          stack.push_back(popped);
        } else {
          stack.push_back(d);
          self(self, pos + 1, len);
          stack.pop_back();
        }
      }
    };
    for (int c = gl; c <= max_spelling; c += 2) scan(scan, 0, c);
  }

  std::vector<const std::vector<std::vector<std::pair<int, int>>>*> views(
      max_spelling / 2 + 1);
  for (int n = 1; n <= max_spelling / 2; ++n)
    views[n] = &detail::scheme_views(n);

  bool have_best = false;
  std::int64_t best_i = 0;
  Rational best_r;
  std::vector<int> spelling;
  std::vector<int> slots;

  const auto eval_spelling = [&](int len) {
    const auto& schemes_here = *views[len / 2];
    if (tbl.small) {
      for (const auto& ps : schemes_here) {
        std::int64_t c = 0;
        for (const auto& [a, b] : ps)
          c += tbl.num[spelling[a] * tbl.k + spelling[b]];
        if (!have_best || c < best_i) {
          best_i = c;
          have_best = true;
        }
      }
    } else {
      for (const auto& ps : schemes_here) {
        Rational c(0);
        for (const auto& [a, b] : ps)
          c += tbl.at(spelling[a], spelling[b]);
        if (!have_best || c < best_r) {
          best_r = c;
          have_best = true;
        }
      }
    }
  };

  for (const std::vector<int>& core : cores) {
    const int c = static_cast<int>(core.size());
    for (int len = std::max(c + (c % 2), 2); len <= max_spelling; len += 2) {
      // all ways to place the core letters at `slots` among len positions
      slots.resize(c);
      for (int i = 0; i < c; ++i) slots[i] = i;
      while (true) {
        spelling.assign(len, 0);
        for (int i = 0; i < c; ++i) spelling[slots[i]] = core[i];
        eval_spelling(len);
        int i = c - 1;
        while (i >= 0 && slots[i] == len - c + i) --i;
        if (i < 0) break;
        ++slots[i];
        for (int j = i + 1; j < c; ++j) slots[j] = slots[j - 1] + 1;
      }
      if (c == 0) break;  // single empty placement per length
    }
  }
  if (!have_best) fail(errc::internal, "norm oracle found no spelling");
  return tbl.small ? Rational(best_i, tbl.den) : best_r;
}

// The two-pairing minimum available for balanced four-letter words: pair
// positions (1,2)(3,4) or (1,4)(2,3) — the only non-crossing schemes on the
// word's own four-letter spelling.
inline Rational claim1_min(const StarMetric& star, const Word& g) {
  if (!in_b(g))
    fail(errc::not_in_b, "needs a reduced balanced word of length 4");
  detail::check_letters(star, RawWord(g.letters().begin(), g.letters().end()));
  const auto& x = g.letters();
  const Rational adjacent =
      star.dist(x[0].inverse(), x[1]) + star.dist(x[2].inverse(), x[3]);
  const Rational nested =
      star.dist(x[0].inverse(), x[3]) + star.dist(x[1].inverse(), x[2]);
  return std::min(adjacent, nested);
}

}  // namespace graev
