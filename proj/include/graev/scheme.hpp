#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "graev/errors.hpp"

namespace graev {

// Non-crossing perfect pairing of positions {1..2n}: any two pair intervals
// are disjoint or nested.  Canonical form: each pair (a, b) with a < b, the
// list sorted by first element.
struct Scheme {
  std::vector<std::pair<int, int>> pairs;

  int positions() const { return static_cast<int>(pairs.size()) * 2; }

  friend bool operator==(const Scheme&, const Scheme&) = default;
  friend std::strong_ordering operator<=>(const Scheme& a, const Scheme& b) {
    return a.pairs <=> b.pairs;
  }
};

// Checks canonical form, partition, and the nesting condition.
inline void validate_scheme(const Scheme& s, int n_positions) {
  if (n_positions < 0 || n_positions % 2 != 0)
    fail(errc::bad_scheme, "schemes pair an even number of positions");
  if (s.positions() != n_positions)
    fail(errc::bad_scheme, "scheme size does not match word length");
  std::vector<char> seen(n_positions + 1, 0);
  int prev_first = 0;
  for (const auto& [a, b] : s.pairs) {
    if (a < 1 || b < 1 || a > n_positions || b > n_positions)
      fail(errc::bad_scheme, "scheme position out of range");
    if (a >= b) fail(errc::bad_scheme, "scheme pair not ordered");
    if (a <= prev_first) fail(errc::bad_scheme, "scheme pairs not sorted");
    prev_first = a;
    if (seen[a] || seen[b]) fail(errc::bad_scheme, "scheme repeats a position");
    seen[a] = seen[b] = 1;
  }
  for (int i = 1; i <= n_positions; ++i)
    if (!seen[i]) fail(errc::bad_scheme, "scheme misses a position");
  for (size_t i = 0; i < s.pairs.size(); ++i)
    for (size_t j = i + 1; j < s.pairs.size(); ++j) {
      const auto& [a, b] = s.pairs[i];
      const auto& [c, d] = s.pairs[j];
      // sorted, so a < c; crossing means a < c < b < d
      if (c < b && b < d)
        fail(errc::bad_scheme, "scheme pairs cross",
             {std::to_string(a), std::to_string(b), std::to_string(c),
              std::to_string(d)});
    }
}

namespace detail {

// Pair position lo with each admissible partner; recurse on the enclosed
// and trailing intervals.  Concatenating (lo, mid) + inside + outside keeps
// the pair list sorted by first element, and iterating mid ascending /
// inside-major keeps the overall list lexicographically sorted.
inline std::vector<Scheme> gen_schemes(int lo, int hi) {
  std::vector<Scheme> out;
  if (lo > hi) {
    out.push_back(Scheme{});
    return out;
  }
  for (int mid = lo + 1; mid <= hi; mid += 2) {
    const std::vector<Scheme> inside = gen_schemes(lo + 1, mid - 1);
    const std::vector<Scheme> outside = gen_schemes(mid + 1, hi);
    for (const Scheme& in : inside)
      for (const Scheme& out_part : outside) {
        Scheme s;
        s.pairs.reserve(1 + in.pairs.size() + out_part.pairs.size());
        s.pairs.emplace_back(lo, mid);
        s.pairs.insert(s.pairs.end(), in.pairs.begin(), in.pairs.end());
        s.pairs.insert(s.pairs.end(), out_part.pairs.begin(),
                       out_part.pairs.end());
        out.push_back(std::move(s));
      }
  }
  return out;
}

}  // namespace detail

// All non-crossing perfect pairings of {1..2n}, lexicographically sorted;
// Catalan(n) of them.  n = 0 yields the single empty scheme so that cost
// minimization over the empty word needs no special case.
inline const std::vector<Scheme>& schemes(int n) {
  if (n < 0) fail(errc::bad_scheme, "scheme order must be >= 0");
  static std::mutex mu;
  static std::map<int, std::vector<Scheme>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, detail::gen_schemes(1, 2 * n)).first;
  return it->second;
}

// 0-based partner map: partners(s)[i] = j with positions i+1, j+1 paired.
inline std::vector<int> partners(const Scheme& s) {
  std::vector<int> p(s.positions(), -1);
  for (const auto& [a, b] : s.pairs) {
    p[a - 1] = b - 1;
    p[b - 1] = a - 1;
  }
  return p;
}

}  // namespace graev
