#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "graev/words.hpp"

using namespace graev;

namespace {

Letter L(int p, int s) { return Letter::make(p, s); }

Word W(std::initializer_list<Letter> ls) { return reduce(RawWord(ls)); }

}  // namespace

TEST_CASE("letter basics and canonical order") {
  const Letter e = Letter::neutral();
  CHECK(e.is_neutral());
  CHECK(e.inverse() == e);
  CHECK(L(2, 1).inverse() == L(2, -1));
  CHECK(L(2, -1).inverse() == L(2, 1));
  CHECK_THROWS_AS(Letter::make(-1, 1), error);
  CHECK_THROWS_AS(Letter::make(0, 2), error);
  CHECK_THROWS_AS(Letter::make(0, 0), error);

  CHECK(e < L(0, 1));
  CHECK(L(0, 1) < L(0, -1));
  CHECK(L(0, -1) < L(1, 1));
  CHECK(L(1, 1) < L(2, -1));
}

TEST_CASE("reduce drops neutrals and cancels pairs") {
  CHECK(W({L(0, 1), L(0, -1)}).empty());
  CHECK(W({Letter::neutral(), L(0, 1), Letter::neutral(), L(1, -1)}) ==
        W({L(0, 1), L(1, -1)}));
  // cascade: u v v^-1 u -> u u
  CHECK(W({L(0, 1), L(1, 1), L(1, -1), L(0, 1)}) == W({L(0, 1), L(0, 1)}));
  // u u is reduced (same sign does not cancel)
  CHECK(W({L(0, 1), L(0, 1)}).length() == 2);
  // full telescope
  CHECK(W({L(0, 1), L(1, 1), L(1, -1), L(0, -1)}).empty());
  CHECK(reduce({}).empty());
}

TEST_CASE("reduce is idempotent and parity-preserving on neutral-free words") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pt(0, 3), sg(0, 1), len(0, 12),
      neutral(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    RawWord raw;
    const int n = len(rng);
    bool has_neutral = false;
    for (int i = 0; i < n; ++i) {
      if (neutral(rng) == 0) {
        raw.push_back(Letter::neutral());
        has_neutral = true;
      } else {
        raw.push_back(L(pt(rng), sg(rng) ? 1 : -1));
      }
    }
    const Word once = reduce(raw);
    RawWord again(once.letters().begin(), once.letters().end());
    CHECK(reduce(again) == once);
    CHECK(once.length() <= static_cast<int>(raw.size()));
    if (!has_neutral)
      CHECK((static_cast<int>(raw.size()) - once.length()) % 2 == 0);
  }
}

TEST_CASE("from_reduced validates") {
  CHECK_THROWS_AS(Word::from_reduced({Letter::neutral()}), error);
  CHECK_THROWS_AS(Word::from_reduced({L(0, 1), L(0, -1)}), error);
  CHECK_THROWS_AS(Word::from_reduced({L(1, 1), L(0, 1), L(0, -1)}), error);
  CHECK(Word::from_reduced({L(0, 1), L(0, 1)}).length() == 2);
  CHECK(Word::from_reduced({}).empty());
}

TEST_CASE("multiply and invert") {
  const Word uv = W({L(0, 1), L(1, -1)});
  CHECK(multiply(uv, invert(uv)).empty());
  CHECK(multiply(invert(uv), uv).empty());
  CHECK(multiply(uv, Word()) == uv);
  CHECK(multiply(Word(), uv) == uv);

  // (u v) (v^-1 w) = u w
  const Word l = W({L(0, 1), L(1, 1)});
  const Word r = W({L(1, -1), L(2, 1)});
  CHECK(multiply(l, r) == W({L(0, 1), L(2, 1)}));

  // invert reverses and flips: (u v^-1 q)^-1 = q^-1 v u^-1
  const Word g = W({L(0, 1), L(1, -1), L(2, 1)});
  CHECK(invert(g) == W({L(2, -1), L(1, 1), L(0, -1)}));
  CHECK(invert(invert(g)) == g);
  CHECK(invert(g).length() == g.length());
}

TEST_CASE("multiply is associative on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pt(0, 2), sg(0, 1), len(0, 5);
  const auto rand_word = [&] {
    RawWord raw;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(L(pt(rng), sg(rng) ? 1 : -1));
    return reduce(raw);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = rand_word(), b = rand_word(), c = rand_word();
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, b).length() <= a.length() + b.length());
  }
}

TEST_CASE("support ignores signs and deduplicates") {
  CHECK(support(W({L(0, 1), L(1, -1), L(0, 1)})) == std::vector<int>{0, 1});
  CHECK(support(Word()).empty());
  const Word l = W({L(0, 1), L(1, 1)});
  const Word r = W({L(1, -1), L(2, 1)});
  CHECK(support(multiply(l, r)) == std::vector<int>{0, 2});
}

TEST_CASE("length-ball classification") {
  CHECK(classify_f4(Word()) == F4Class{F4Class::Summand::even, 0});
  CHECK(classify_f4(W({L(0, 1)})) == F4Class{F4Class::Summand::odd, 1});
  CHECK(classify_f4(W({L(0, 1), L(1, -1)})) ==
        F4Class{F4Class::Summand::even, 2});
  CHECK(classify_f4(W({L(0, 1), L(1, -1), L(2, 1)})) ==
        F4Class{F4Class::Summand::odd, 3});
  CHECK(classify_f4(W({L(0, 1), L(1, -1), L(2, 1), L(3, -1)})) ==
        F4Class{F4Class::Summand::even, 4});
  CHECK_THROWS_AS(classify_f4(W({L(0, 1), L(1, 1), L(2, 1), L(3, 1), L(4, 1)})),
                  error);
}

TEST_CASE("balanced four-letter membership") {
  CHECK(in_b(W({L(0, 1), L(1, -1), L(2, 1), L(3, -1)})));
  CHECK(in_b(W({L(0, 1), L(1, 1), L(2, -1), L(3, -1)})));
  CHECK_FALSE(in_b(W({L(0, 1), L(1, 1), L(2, -1), L(3, 1)})));  // sum +2
  CHECK_FALSE(in_b(W({L(0, 1), L(1, -1)})));                    // length 2
  CHECK_FALSE(in_b(Word()));
  // u v^-1 v u^-1 reduces to e, so it is simply not in the set
  CHECK_FALSE(in_b(W({L(0, 1), L(1, -1), L(1, 1), L(0, -1)})));

  // membership implies the even summand at level 4
  const Word g = W({L(0, 1), L(1, -1), L(0, 1), L(1, -1)});
  REQUIRE(in_b(g));
  CHECK(classify_f4(g) == F4Class{F4Class::Summand::even, 4});
}
