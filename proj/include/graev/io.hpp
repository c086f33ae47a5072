#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graev/converge.hpp"

namespace graev {

namespace detail {

struct SourceLine {
  int number = 0;  // 1-based
  std::vector<std::string> tokens;
};

// '#' starts a comment anywhere; blank lines vanish; everything else is
// whitespace-tokenized and keeps its 1-based line number for diagnostics.
inline std::vector<SourceLine> tokenize_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    SourceLine sl;
    sl.number = number;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r'))
        ++i;
      const size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r')
        ++i;
      if (i > start)
        sl.tokens.emplace_back(line.substr(start, i - start));
    }
    if (!sl.tokens.empty()) out.push_back(std::move(sl));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline void expect_format_line(const std::vector<SourceLine>& lines) {
  if (lines.empty()) fail(errc::syntax, "empty input");
  const SourceLine& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != "format" ||
      first.tokens[1] != "1")
    fail(errc::syntax, "expected 'format 1' on the first line", {},
         first.number);
}

inline Rational parse_rational_at(const std::string& text, int line) {
  try {
    return Rational::parse(text);
  } catch (const error&) {
    fail(errc::syntax, "bad rational '" + text + "'", {text}, line);
  }
}

inline int parse_index_at(const std::string& text, int line) {
  if (text.empty()) fail(errc::syntax, "expected an index", {text}, line);
  long long v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      fail(errc::syntax, "bad index '" + text + "'", {text}, line);
    v = v * 10 + (c - '0');
    if (v > 1000000000)
      fail(errc::syntax, "index '" + text + "' is out of range", {text},
           line);
  }
  return static_cast<int>(v);
}

}  // namespace detail

// Space files: `format 1`, one `space <name>` line, `point <id>` lines in
// order, an optional `kset <id> ...` line, and `d <a> <b> <p/q>` for every
// unordered pair.
inline SpacePtr parse_space(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  detail::expect_format_line(lines);

  std::string name;
  bool have_name = false, have_kset = false;
  std::vector<std::string> points;
  std::vector<std::string> kset;
  std::vector<DistEntry> dists;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tok] = lines[li];
    if (tok[0] == "space") {
      if (tok.size() != 2)
        fail(errc::syntax, "usage: space <name>", {}, number);
      if (have_name)
        fail(errc::syntax, "second 'space' line", {tok[1]}, number);
      name = tok[1];
      have_name = true;
    } else if (tok[0] == "point") {
      if (tok.size() != 2)
        fail(errc::syntax, "usage: point <id>", {}, number);
      points.push_back(tok[1]);
    } else if (tok[0] == "kset") {
      if (have_kset)
        fail(errc::syntax, "second 'kset' line", {}, number);
      have_kset = true;
      kset.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "d") {
      if (tok.size() != 4)
        fail(errc::syntax, "usage: d <a> <b> <p>/<q>", {}, number);
      dists.push_back(DistEntry{tok[1], tok[2],
                                detail::parse_rational_at(tok[3], number),
                                number});
    } else {
      fail(errc::syntax, "unknown directive '" + tok[0] + "'", {tok[0]},
           number);
    }
  }
  if (!have_name) fail(errc::syntax, "missing 'space <name>' line");
  return std::make_shared<const PointedSpace>(
      PointedSpace::make(std::move(name), std::move(points), dists, kset));
}

inline std::string format_space(const PointedSpace& s) {
  std::string out = "format 1\n";
  out += "space " + s.name() + "\n";
  for (int i = 0; i < s.count(); ++i) out += "point " + s.id(i) + "\n";
  const auto ks = s.k_members();
  if (!ks.empty()) {
    out += "kset";
    for (int i : ks) out += " " + s.id(i);
    out += "\n";
  }
  for (int i = 0; i < s.count(); ++i)
    for (int j = i + 1; j < s.count(); ++j)
      out += "d " + s.id(i) + " " + s.id(j) + " " + s.d(i, j).str() + "\n";
  return out;
}

// Word notation: whitespace-separated tokens `e`, `<id>`, or `<id>^-1`.
// Exponents other than the implicit +1 and the literal ^-1 are not tokens.
inline RawWord parse_raw_word(std::string_view text, const PointedSpace& s,
                              int line = 0) {
  RawWord w;
  size_t i = 0;
  while (i <= text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    const size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    const std::string tok(text.substr(start, i - start));
    if (tok == "e") {
      w.push_back(Letter::neutral());
      continue;
    }
    std::string id = tok;
    int sign = 1;
    if (const size_t caret = tok.find('^'); caret != std::string::npos) {
      if (tok.substr(caret) != "^-1" || caret == 0)
        fail(errc::unknown_token, "bad token '" + tok + "'", {tok}, line);
      id = tok.substr(0, caret);
      sign = -1;
    }
    if (id == "e")
      fail(errc::unknown_token, "bad token '" + tok + "'", {tok}, line);
    w.push_back(Letter::make(s.require(id, line), sign));
  }
  return w;
}

inline Word parse_word(std::string_view text, const PointedSpace& s,
                       int line = 0) {
  return reduce(parse_raw_word(text, s, line));
}

inline std::string letter_str(const Letter& l, const PointedSpace& s) {
  if (l.is_neutral()) return "e";
  return l.sign > 0 ? s.id(l.point) : s.id(l.point) + "^-1";
}

inline std::string format_raw_word(const RawWord& w, const PointedSpace& s) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += letter_str(w[i], s);
  }
  return out;
}

inline std::string format_word(const Word& w, const PointedSpace& s) {
  return format_raw_word(w.letters(), s);
}

// Pairing schemes print as "(1,2)(3,4)" with no spaces; the empty scheme
// prints as the empty string.
inline std::string format_scheme(const Scheme& phi) {
  std::string out;
  for (const auto& [a, b] : phi.pairs)
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

inline Scheme parse_scheme(std::string_view text, int line = 0) {
  Scheme phi;
  size_t i = 0;
  const auto number = [&]() -> int {
    const size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start)
      fail(errc::syntax, "expected a position in scheme text",
           {std::string(text)}, line);
    int v = 0;
    for (size_t p = start; p < i; ++p) {
      v = v * 10 + (text[p] - '0');
      if (v > 1000000)
        fail(errc::syntax, "scheme position out of range",
             {std::string(text)}, line);
    }
    return v;
  };
  while (i < text.size()) {
    if (text[i] != '(')
      fail(errc::syntax, "expected '(' in scheme text", {std::string(text)},
           line);
    ++i;
    const int a = number();
    if (i >= text.size() || text[i] != ',')
      fail(errc::syntax, "expected ',' in scheme text", {std::string(text)},
           line);
    ++i;
    const int b = number();
    if (i >= text.size() || text[i] != ')')
      fail(errc::syntax, "expected ')' in scheme text", {std::string(text)},
           line);
    ++i;
    phi.pairs.emplace_back(a, b);
  }
  return phi;
}

// Sequence files: `format 1`, `tail <index>`, optional `scale <index>
// <p>/<q>` lines, then one word per line; words are numbered 1.. in file
// order and reduced on input.
inline WordSequence parse_sequence(std::string_view text,
                                   const PointedSpace& s) {
  const auto lines = detail::tokenize_lines(text);
  detail::expect_format_line(lines);

  WordSequence seq;
  bool have_tail = false;
  std::vector<std::pair<int, int>> scale_lines;  // index -> source line
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tok] = lines[li];
    if (tok[0] == "tail") {
      if (tok.size() != 2)
        fail(errc::syntax, "usage: tail <index>", {}, number);
      if (have_tail) fail(errc::syntax, "second 'tail' line", {}, number);
      if (!seq.words.empty())
        fail(errc::syntax, "'tail' must precede the words", {}, number);
      seq.tail_start = detail::parse_index_at(tok[1], number);
      if (seq.tail_start < 1)
        fail(errc::bad_tail, "tail start must be >= 1", {tok[1]}, number);
      have_tail = true;
    } else if (tok[0] == "scale") {
      if (tok.size() != 3)
        fail(errc::syntax, "usage: scale <index> <p>/<q>", {}, number);
      if (!seq.words.empty())
        fail(errc::syntax, "'scale' must precede the words", {}, number);
      const int idx = detail::parse_index_at(tok[1], number);
      const Rational c = detail::parse_rational_at(tok[2], number);
      if (!(c > Rational(0)))
        fail(errc::nonpositive_scale, "scale must be positive", {tok[2]},
             number);
      if (!seq.scales.emplace(idx, c).second)
        fail(errc::syntax, "second scale for index " + tok[1], {tok[1]},
             number);
      scale_lines.emplace_back(idx, number);
    } else {
      // a word line: rebuild the original spacing-insensitive text
      std::string wtext;
      for (size_t t = 0; t < tok.size(); ++t) {
        if (t) wtext += " ";
        wtext += tok[t];
      }
      seq.indices.push_back(static_cast<int>(seq.words.size()) + 1);
      seq.words.push_back(parse_word(wtext, s, number));
    }
  }
  if (!have_tail) fail(errc::syntax, "missing 'tail <index>' line");
  for (const auto& [idx, number] : scale_lines)
    if (idx < 1 || idx > static_cast<int>(seq.words.size()))
      fail(errc::syntax, "scale index " + std::to_string(idx) +
                             " names no word in this file",
           {std::to_string(idx)}, number);
  seq.validate();
  return seq;
}

inline std::string format_sequence(const WordSequence& seq,
                                   const PointedSpace& s) {
  for (size_t i = 0; i < seq.indices.size(); ++i)
    if (seq.indices[i] != static_cast<int>(i) + 1)
      fail(errc::internal, "only 1..n indexed sequences have a file form");
  std::string out = "format 1\n";
  out += "tail " + std::to_string(seq.tail_start) + "\n";
  for (const auto& [idx, c] : seq.scales)
    out += "scale " + std::to_string(idx) + " " + c.str() + "\n";
  for (const Word& w : seq.words) out += format_word(w, s) + "\n";
  return out;
}

}  // namespace graev
