#include <catch2/catch_amalgamated.hpp>

#include "graev/fixtures.hpp"
#include "graev/nbhd.hpp"

using namespace graev;

namespace {

struct Fix {
  SpacePtr space = comb_space();
  Metric base = Metric::yamada(space);
  StarMetric star = StarMetric::at(base, 0);

  int at(const char* id) const { return space->require(id); }
  Letter pos(const char* id) const { return Letter::make(at(id), 1); }
  Letter neg(const char* id) const { return Letter::make(at(id), -1); }
  StarMetric scaled(long long c) const {
    return StarMetric::at(base.scaled(Rational(c)), 0);
  }
};

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal;
}

Rational witness_cost(const Metric& m, const Word& g,
                      const InsertionWitness& w) {
  Rational c = m.rho(w.y, w.z);
  const auto& a = g.letters();
  for (size_t k = 0; k < a.size(); ++k) c += m.rho(a[k].point, w.x[k]);
  return c;
}

TEST_CASE("norm ball membership is strict at the boundary") {
  Fix f;
  const Word g = reduce({f.pos("u"), f.neg("v")});
  REQUIRE(graev_norm(f.star, g).value == Rational(1, 6));

  const auto yes = in_un(f.star, g, 5);
  CHECK(yes.verdict);
  CHECK(yes.norm == Rational(1, 6));
  CHECK(yes.threshold == Rational(1, 5));

  const auto boundary = in_un(f.star, g, 6);
  CHECK_FALSE(boundary.verdict);
  CHECK(boundary.norm == boundary.threshold);

  CHECK_FALSE(in_un(f.star, g, 7).verdict);
  CHECK(code_of([&] { in_un(f.star, g, 0); }) == errc::syntax);
}

TEST_CASE("identity lies in every norm ball") {
  Fix f;
  for (int n : {1, 2, 10, 1000}) {
    const auto c = in_un(f.star, Word{}, n);
    CHECK(c.verdict);
    CHECK(c.norm == Rational(0));
  }
}

TEST_CASE("scaling walks the norm onto the ball boundary") {
  Fix f;
  const Word g = reduce({f.pos("u"), f.neg("v")});
  const auto c = in_un(f.scaled(6), g, 1);
  CHECK_FALSE(c.verdict);  // 6 * 1/6 = 1 is not < 1
  CHECK(c.norm == Rational(1));
}

TEST_CASE("admissibility needs star separation at least 1") {
  Fix f;
  const Word same_sign = reduce({f.pos("u"), f.neg("v")});
  CHECK_FALSE(admissible(f.star, same_sign));   // rho(u,v) = 1/6
  CHECK(admissible(f.scaled(6), same_sign));    // 6 * 1/6 = 1 exactly
  CHECK(admissible(f.scaled(7), same_sign));

  // a mixed-sign consecutive pair routes through e and always clears 2
  const Word mixed = reduce({f.pos("u"), f.pos("v")});
  CHECK(f.star.dist(f.neg("u"), f.pos("v")) == Rational(3));
  CHECK(admissible(f.star, mixed));

  CHECK(admissible(f.star, reduce({f.pos("u")})));  // no consecutive pairs
  CHECK(code_of([&] { admissible(f.star, Word{}); }) == errc::empty_word);
}

TEST_CASE("insertion membership finds the cheap twin pair") {
  Fix f;
  const StarMetric star6 = f.scaled(6);
  const Word g = reduce({f.pos("u"), f.neg("v")});
  const Word h = reduce({f.pos("u"), f.pos("q"), f.neg("r"), f.neg("v")});

  const auto cert = in_ug(star6, g, h);
  REQUIRE(cert.verdict);
  REQUIRE(cert.witness.has_value());
  const InsertionWitness& w = *cert.witness;
  CHECK(w.insert_at == 1);
  CHECK(w.eps == 1);
  CHECK(w.y == f.at("q"));
  CHECK(w.z == f.at("r"));
  CHECK(w.x == std::vector<int>{f.at("u"), f.at("v")});
  CHECK(w.cost == Rational(1, 15));  // 6 * rho(q,r) = 6/90

  // the certificate re-validates from scratch
  CHECK(reduce(w.spelling(g)) == h);
  CHECK(witness_cost(star6.metric(), g, w) == w.cost);
  CHECK(w.cost < Rational(1));
}

TEST_CASE("a word lies in its own insertion neighborhood") {
  Fix f;
  const StarMetric star6 = f.scaled(6);
  const Word g = reduce({f.pos("u"), f.neg("v")});
  const auto cert = in_ug(star6, g, g);
  REQUIRE(cert.verdict);
  REQUIRE(cert.witness.has_value());
  // lexicographically least spelling cancels a k k^-1 pair up front
  CHECK(cert.witness->insert_at == 0);
  CHECK(cert.witness->eps == 1);
  CHECK(cert.witness->y == f.at("k"));
  CHECK(cert.witness->z == f.at("k"));
  CHECK(cert.witness->cost == Rational(0));
  CHECK(reduce(cert.witness->spelling(g)) == g);
}

TEST_CASE("insertion search exhausts cleanly on unreachable targets") {
  Fix f;
  const StarMetric star6 = f.scaled(6);
  const Word g = reduce({f.pos("u"), f.neg("v")});

  // p1 cannot substitute for u: 6 * rho(p1, u) = 3 >= 1
  const Word far = reduce({f.pos("p1"), f.pos("q"), f.neg("r"), f.neg("v")});
  const auto miss = in_ug(star6, g, far);
  CHECK_FALSE(miss.verdict);
  CHECK(miss.exhausted);
  CHECK_FALSE(miss.witness.has_value());

  // parity mismatch: reductions of n+2 letters keep n's parity
  const auto odd = in_ug(star6, g, reduce({f.pos("u")}));
  CHECK_FALSE(odd.verdict);
  CHECK(odd.exhausted);
}

TEST_CASE("insertion preconditions reject bad inputs") {
  Fix f;
  const Word g = reduce({f.pos("u"), f.neg("v")});
  const Word h = reduce({f.pos("u"), f.pos("q"), f.neg("r"), f.neg("v")});
  CHECK(code_of([&] { in_ug(f.star, g, h); }) == errc::not_admissible);

  const Word long_h = reduce({f.pos("u"), f.pos("q"), f.neg("r"), f.pos("w"),
                              f.pos("q"), f.neg("v")});
  REQUIRE(long_h.length() == 6);
  CHECK(code_of([&] { in_ug(f.scaled(6), g, long_h); }) ==
        errc::length_over_bound);
}

TEST_CASE("membership survives downscaling while the budget shrinks") {
  Fix f;
  const Word g = reduce({f.pos("u"), f.neg("v")});
  const Word h = reduce({f.pos("u"), f.pos("q"), f.neg("r"), f.neg("v")});

  // cost at scale c is c * rho(q,r) = c/90: inside for c < 90, strict at 90
  for (long long c : {89, 45, 23, 12, 6}) {
    const auto cert = in_ug(f.scaled(c), g, h);
    CHECK(cert.verdict);
    CHECK(cert.witness->cost == Rational(c, 90));
  }
  const auto at_budget = in_ug(f.scaled(90), g, h);
  CHECK_FALSE(at_budget.verdict);
  CHECK(at_budget.exhausted);
  CHECK_FALSE(in_ug(f.scaled(91), g, h).verdict);
}

TEST_CASE("pure substitution reaches nearby spellings via a trivial pair") {
  Fix f;
  // under 6 rho, w can substitute for u only when the budget allows:
  // 6 * rho(u,w) = 1 is out; at scale 5 the base word is inadmissible;
  // use the always-admissible mixed-sign base instead
  const Word g = reduce({f.pos("u"), f.pos("v")});
  const Word h = reduce({f.pos("w"), f.pos("v")});
  const auto cert = in_ug(f.star, g, h);
  REQUIRE(cert.verdict);
  const InsertionWitness& w = *cert.witness;
  CHECK(w.y == w.z);  // the inserted pair cancels away
  CHECK(w.x == std::vector<int>{f.at("w"), f.at("v")});
  CHECK(w.cost == Rational(1, 6));
  CHECK(reduce(w.spelling(g)) == h);
}

}  // namespace
