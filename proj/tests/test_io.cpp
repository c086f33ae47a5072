#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "graev/fixtures.hpp"
#include "graev/io.hpp"

using namespace graev;

namespace {

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal;
}

int line_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.line();
  }
  FAIL("expected an error");
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kTiny =
    "format 1\n"
    "space tiny\n"
    "point a\n"
    "point b\n"
    "point c\n"
    "kset a\n"
    "d a b 1/2\n"
    "d a c 1/3\n"
    "d b c 1/4\n";

TEST_CASE("space files parse and round-trip byte for byte") {
  const SpacePtr s = parse_space(kTiny);
  CHECK(s->name() == "tiny");
  CHECK(s->count() == 3);
  CHECK(s->in_k(0));
  CHECK_FALSE(s->in_k(1));
  CHECK(s->d(1, 2) == Rational(1, 4));
  CHECK(format_space(*s) == kTiny);
}

TEST_CASE("the shipped comb fixture file matches the in-library fixture") {
  const std::string path =
      std::string(GRAEV_TEST_DATA_DIR) + "/fixtures/comb.space";
  const std::string text = slurp(path);
  const SpacePtr parsed = parse_space(text);
  const SpacePtr built = comb_space();
  REQUIRE(parsed->count() == built->count());
  for (int i = 0; i < built->count(); ++i) {
    CHECK(parsed->id(i) == built->id(i));
    CHECK(parsed->in_k(i) == built->in_k(i));
    for (int j = 0; j < built->count(); ++j)
      CHECK(parsed->d(i, j) == built->d(i, j));
  }
  CHECK(format_space(*built) == text);
}

TEST_CASE("comments, spacing, and blank lines are insignificant") {
  const SpacePtr s = parse_space(
      "# header\n"
      "  format 1  # trailing\n"
      "\n"
      "space tiny\n"
      "point a\n\tpoint b\n"
      "d a b 7/2 # wide pair\n");
  CHECK(s->d(0, 1) == Rational(7, 2));
  CHECK(s->k_members().empty());
}

TEST_CASE("space parse errors carry exact line numbers") {
  CHECK(code_of([] { parse_space(""); }) == errc::syntax);
  CHECK(code_of([] { parse_space("space t\npoint a\n"); }) == errc::syntax);

  // zero denominator is a syntax error at its own line
  const char* zero_den =
      "format 1\nspace t\npoint a\npoint b\nd a b 1/0\n";
  CHECK(code_of([&] { parse_space(zero_den); }) == errc::syntax);
  CHECK(line_of([&] { parse_space(zero_den); }) == 5);

  const char* missing_pair =
      "format 1\nspace t\npoint a\npoint b\npoint c\n"
      "d a b 1/2\nd a c 1/3\n";
  try {
    parse_space(missing_pair);
    FAIL("expected missing_distance");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_distance);
    CHECK(e.witness() == std::vector<std::string>{"b", "c"});
  }

  CHECK(code_of([] {
          parse_space("format 1\nspace t\npoint a\npoint a\n");
        }) == errc::duplicate_point);
  CHECK(code_of([] {
          parse_space("format 1\nspace t\nspace t2\npoint a\n");
        }) == errc::syntax);
  CHECK(code_of([] {
          parse_space("format 1\nspace t\npoint a\nkset b\n");
        }) == errc::unknown_point);
  CHECK(code_of([] {
          parse_space("format 1\nspace t\npoint a\nd a a 0/1\n");
        }) == errc::syntax);
  CHECK(code_of([] {
          parse_space("format 1\nspace t\npoint a\npoint b\n"
                      "d a b 1/2\nd b a 1/2\n");
        }) == errc::duplicate_distance);
  CHECK(code_of([] {
          parse_space("format 1\nspace t\npoint a\npoint b\nd a b 1/2\n"
                      "dd a b 1/2\n");
        }) == errc::syntax);
  CHECK(code_of([] { parse_space("format 1\npoint a\n"); }) == errc::syntax);
  CHECK(code_of([] { parse_space("format 2\nspace t\npoint a\n"); }) ==
        errc::syntax);

  // triangle violations surface from validation with their witness
  try {
    parse_space(
        "format 1\nspace t\npoint a\npoint b\npoint c\n"
        "d a b 1/1\nd a c 1/5\nd b c 1/5\n");
    FAIL("expected metric_triangle");
  } catch (const error& e) {
    CHECK(e.code() == errc::metric_triangle);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("word notation parses, reduces, and round-trips") {
  const SpacePtr s = parse_space(kTiny);

  const RawWord raw = parse_raw_word("a b^-1", *s);
  REQUIRE(raw.size() == 2);
  CHECK(raw[0] == Letter::make(0, 1));
  CHECK(raw[1] == Letter::make(1, -1));

  const RawWord cancel = parse_raw_word("a a^-1", *s);
  CHECK(cancel.size() == 2);
  CHECK(reduce(cancel).empty());
  CHECK(parse_word("a a^-1", *s).empty());

  const RawWord with_e = parse_raw_word("a e b^-1", *s);
  CHECK(with_e.size() == 3);
  CHECK(with_e[1].is_neutral());
  CHECK(format_raw_word(with_e, *s) == "a e b^-1");
  CHECK(parse_word("a e b^-1", *s).length() == 2);

  CHECK(format_word(Word{}, *s) == "e");
  CHECK(parse_word("e", *s).empty());
  CHECK(parse_raw_word("", *s).empty());

  for (const char* text : {"a", "a^-1", "a b^-1 c", "e", "b c^-1"})
    CHECK(format_word(parse_word(text, *s), *s) == text);
  CHECK(format_word(parse_word("  a \t b^-1 ", *s), *s) == "a b^-1");

  CHECK(code_of([&] { parse_raw_word("a^-2", *s); }) == errc::unknown_token);
  CHECK(code_of([&] { parse_raw_word("a^1", *s); }) == errc::unknown_token);
  CHECK(code_of([&] { parse_raw_word("a^", *s); }) == errc::unknown_token);
  CHECK(code_of([&] { parse_raw_word("^-1", *s); }) == errc::unknown_token);
  CHECK(code_of([&] { parse_raw_word("e^-1", *s); }) == errc::unknown_token);
  CHECK(code_of([&] { parse_raw_word("a x^-1", *s); }) ==
        errc::unknown_point);
}

TEST_CASE("sequence files parse, validate, and round-trip") {
  const SpacePtr s = parse_space(kTiny);
  const char* text =
      "format 1\n"
      "tail 2\n"
      "scale 1 6/1\n"
      "b c^-1\n"
      "a b^-1\n";
  const WordSequence seq = parse_sequence(text, *s);
  CHECK(seq.tail_start == 2);
  CHECK(seq.indices == std::vector<int>{1, 2});
  CHECK(seq.scale_at(1) == Rational(6));
  CHECK(seq.scale_at(2) == Rational(1));
  CHECK(seq.words[0] == parse_word("b c^-1", *s));
  CHECK(format_sequence(seq, *s) == text);

  // words reduce on input
  const WordSequence red = parse_sequence(
      "format 1\ntail 1\na a^-1 b\n", *s);
  CHECK(red.words[0].length() == 1);

  CHECK(code_of([&] { parse_sequence("format 1\nb c^-1\n", *s); }) ==
        errc::syntax);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 0\nb c^-1\n", *s);
        }) == errc::bad_tail);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 1\nscale 3 2/1\nb c^-1\n", *s);
        }) == errc::syntax);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 1\nscale 1 0/1\nb c^-1\n", *s);
        }) == errc::nonpositive_scale);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 1\nscale 1 2/1\nscale 1 3/1\nb\n",
                         *s);
        }) == errc::syntax);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 1\nb c^-1\nscale 1 2/1\n", *s);
        }) == errc::syntax);
  CHECK(code_of([&] {
          parse_sequence("format 1\ntail 1\ntail 2\nb\n", *s);
        }) == errc::syntax);
  CHECK(code_of([&] { parse_sequence("format 1\ntail 1\n", *s); }) ==
        errc::empty_sequence);
  CHECK(line_of([&] {
          parse_sequence("format 1\ntail 1\nb q^-1\n", *s);
        }) == 3);
}

TEST_CASE("scheme text round-trips through format and parse") {
  const auto& two = schemes(2);
  REQUIRE(two.size() == 2);
  CHECK(format_scheme(two[0]) == "(1,2)(3,4)");
  CHECK(format_scheme(two[1]) == "(1,4)(2,3)");
  for (int n = 0; n <= 4; ++n)
    for (const Scheme& phi : schemes(n)) {
      const Scheme back = parse_scheme(format_scheme(phi));
      CHECK(back == phi);
      validate_scheme(back, 2 * n);
    }
  CHECK(code_of([] { parse_scheme("(1,2"); }) == errc::syntax);
  CHECK(code_of([] { parse_scheme("1,2"); }) == errc::syntax);
  CHECK(code_of([] { parse_scheme("(1;2)"); }) == errc::syntax);
  const Scheme crossing = parse_scheme("(1,3)(2,4)");
  CHECK(code_of([&] { validate_scheme(crossing, 4); }) == errc::bad_scheme);
}

TEST_CASE("family samples round-trip through the file format") {
  const SpacePtr s = ParametricFamily::doublecomb(6).sample({2, 5});
  const std::string text = format_space(*s);
  const SpacePtr back = parse_space(text);
  CHECK(format_space(*back) == text);
  CHECK(back->count() == 5);
  CHECK(back->stratum(back->require("c5")) == Stratum::w(5));
}

}  // namespace
