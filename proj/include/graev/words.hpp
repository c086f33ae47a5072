#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "graev/errors.hpp"

namespace graev {

// A letter is either the neutral symbol e or a signed point x^{+1} / x^{-1}.
// Points are indices into a PointedSpace's point list; this layer is pure
// combinatorics and never touches distances.
struct Letter {
  int point;  // -1 for the neutral letter
  int sign;   // +1 or -1; 0 for the neutral letter

  static Letter neutral() { return Letter{-1, 0}; }
  static Letter make(int point, int sign) {
    if (point < 0 || (sign != 1 && sign != -1))
      fail(errc::bad_letter, "letter needs a point index and sign +-1");
    return Letter{point, sign};
  }

  bool is_neutral() const { return sign == 0; }
  Letter inverse() const {
    return is_neutral() ? *this : Letter{point, -sign};
  }

  friend bool operator==(const Letter&, const Letter&) = default;
  // Canonical order: e first, then by point, positive before negative.
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    const auto key = [](const Letter& l) {
      return std::tuple<int, int, int>(l.is_neutral() ? 0 : 1, l.point,
                                       l.sign == 1 ? 0 : 1);
    };
    return key(a) <=> key(b);
  }
};

using RawWord = std::vector<Letter>;

inline bool cancels(const Letter& a, const Letter& b) {
  return !a.is_neutral() && a.point == b.point && a.sign == -b.sign;
}

// Reduced word: no neutral letters, no adjacent cancelling pair.  The class
// owns the invariant; construction goes through reduce() or the checked
// from_reduced().
class Word {
 public:
  Word() = default;  // identity

  static Word from_reduced(std::vector<Letter> letters) {
    for (size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].is_neutral())
        fail(errc::not_reduced, "reduced word contains the neutral letter");
      if (i + 1 < letters.size() && cancels(letters[i], letters[i + 1]))
        fail(errc::not_reduced, "reduced word contains a cancelling pair");
    }
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  // Order by length, then letterwise; used for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    for (int i = 0; i < a.length(); ++i)
      if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  friend Word reduce(const RawWord&);
  std::vector<Letter> letters_;
};

// Single left-to-right stack pass; confluence of free reduction makes the
// strategy irrelevant to the result.
inline Word reduce(const RawWord& raw) {
  Word w;
  auto& stack = w.letters_;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.is_neutral()) continue;
    if (!stack.empty() && cancels(stack.back(), l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return w;
}

inline Word multiply(const Word& g, const Word& h) {
  RawWord cat = g.letters();
  cat.insert(cat.end(), h.letters().begin(), h.letters().end());
  return reduce(cat);
}

inline Word invert(const Word& g) {
  std::vector<Letter> rev(g.letters().rbegin(), g.letters().rend());
  for (Letter& l : rev) l = l.inverse();
  return Word::from_reduced(std::move(rev));
}

// Underlying points, deduplicated, ascending.
inline std::vector<int> support(const Word& g) {
  std::vector<int> pts;
  pts.reserve(g.letters().size());
  for (const Letter& l : g.letters()) pts.push_back(l.point);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Which summand of the clopen decomposition of the length-<=4 ball a word
// falls in: words of even length form one part, odd length the other, and
// `level` records the exact shell F_n \ F_{n-1} (n = reduced length).
struct F4Class {
  enum class Summand { even, odd };
  Summand summand;
  int level;

  friend bool operator==(const F4Class&, const F4Class&) = default;
};

inline F4Class classify_f4(const Word& g) {
  const int n = g.length();
  if (n > 4)
    fail(errc::length_out_of_range, "classification only covers length <= 4",
         {std::to_string(n)});
  return F4Class{n % 2 == 0 ? F4Class::Summand::even : F4Class::Summand::odd,
                 n};
}

// The four-letter balanced words: reduced, length exactly 4, exponent sum 0.
inline bool in_b(const Word& g) {
  if (g.length() != 4) return false;
  int sum = 0;
  for (const Letter& l : g.letters()) sum += l.sign;
  return sum == 0;
}

}  // namespace graev
