// Command-line surface over the header-only library: exact metrics, norms,
// neighborhood certificates, and convergence schedules on finite pointed
// spaces.  Default output is line-oriented `key=value` records (the golden
// test contract); --human switches to prose.  Exit codes: 0 = success or a
// true verdict, 1 = a clean false verdict, 2 = input or usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graev/fixtures.hpp"
#include "graev/io.hpp"

using namespace graev;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(errc::syntax, "cannot open '" + path + "'", {path});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A space source is either a file path or an inline family spec
// `doublecomb:M` standing for the sample with indices 1..M.
SpacePtr load_space(const std::string& source) {
  const size_t colon = source.find(':');
  if (colon != std::string::npos && source.find('/') == std::string::npos) {
    const ParametricFamily fam = ParametricFamily::named(
        source.substr(0, colon),
        detail::parse_index_at(source.substr(colon + 1), 0));
    std::vector<int> idx;
    for (int i = 1; i <= fam.depth(); ++i) idx.push_back(i);
    return fam.sample(idx);
  }
  return parse_space(slurp(source));
}

struct MetricArgs {
  std::string source;
  std::string scale = "1/1";
  std::string basepoint;  // empty = first point of the space
};

struct Loaded {
  SpacePtr space;
  Metric metric;
  StarMetric star;
  Rational scale;
};

Loaded load(const MetricArgs& a) {
  SpacePtr s = load_space(a.source);
  const Rational c = Rational::parse(a.scale);
  Metric m = Metric::yamada(s).scaled(c);
  const int bp = a.basepoint.empty() ? 0 : s->require(a.basepoint);
  StarMetric star = StarMetric::at(m, bp);
  return Loaded{std::move(s), std::move(m), std::move(star), c};
}

// Buffered records so a failing computation emits nothing but the error.
struct Records {
  std::vector<std::pair<std::string, std::string>> kv;

  void add(std::string key, std::string value) {
    kv.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, const Rational& value) {
    add(std::move(key), value.str());
  }
  void add(std::string key, long long value) {
    add(std::move(key), std::to_string(value));
  }
  void add(std::string key, bool value) {
    add(std::move(key), std::string(value ? "true" : "false"));
  }

  void print() const {
    for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  }
};

void echo_context(Records& r, const Loaded& l) {
  r.add("space", l.space->name());
  r.add("basepoint", l.space->id(l.star.basepoint()));
  r.add("scale", l.scale);
}

int run_validate(const MetricArgs& a, bool human) {
  SpacePtr s;
  try {
    s = load_space(a.source);
  } catch (const error& e) {
    switch (e.code()) {
      case errc::duplicate_point:
      case errc::unknown_point:
      case errc::missing_distance:
      case errc::duplicate_distance:
      case errc::metric_identity:
      case errc::metric_symmetry:
      case errc::metric_triangle: {
        if (human) {
          std::cout << "invalid: " << e.what() << "\n";
        } else {
          Records r;
          r.add("verdict", false);
          r.add("reason", std::string(errc_name(e.code())));
          for (size_t i = 0; i < e.witness().size(); ++i)
            r.add("witness." + std::to_string(i + 1), e.witness()[i]);
          r.print();
        }
        return 1;
      }
      default:
        throw;
    }
  }
  std::string kset;
  for (int i : s->k_members()) {
    if (!kset.empty()) kset += " ";
    kset += s->id(i);
  }
  if (human) {
    std::cout << "space '" << s->name() << "' is a valid pointed metric "
              << "space with " << s->count() << " points (K = {" << kset
              << "})\n";
  } else {
    Records r;
    r.add("verdict", true);
    r.add("space", s->name());
    r.add("points", static_cast<long long>(s->count()));
    r.add("kset", kset);
    r.print();
  }
  return 0;
}

int run_rho(const MetricArgs& a, bool human) {
  const Loaded l = load(a);
  const PointedSpace& s = *l.space;
  if (human) {
    std::cout << "snap metric over '" << s.name() << "' at scale "
              << l.scale.str() << ":\n";
    for (int i = 0; i < s.count(); ++i)
      for (int j = i + 1; j < s.count(); ++j)
        std::cout << "  rho(" << s.id(i) << ", " << s.id(j) << ") = "
                  << l.metric.rho(i, j).str() << "\n";
    return 0;
  }
  Records r;
  r.add("space", s.name());
  r.add("scale", l.scale);
  for (int i = 0; i < s.count(); ++i)
    for (int j = i + 1; j < s.count(); ++j)
      r.add("rho." + s.id(i) + "." + s.id(j), l.metric.rho(i, j));
  r.print();
  return 0;
}

int run_stratum(const MetricArgs& a, bool human) {
  const SpacePtr s = load_space(a.source);
  if (human) {
    std::cout << "strata of '" << s->name() << "':\n";
    for (int i = 0; i < s->count(); ++i) {
      const auto dk = s->dist_to_k(i);
      std::cout << "  " << s->id(i) << ": " << s->stratum(i).str()
                << " (d(x,K) = " << (dk ? dk->str() : "inf") << ")\n";
    }
    return 0;
  }
  Records r;
  r.add("space", s->name());
  for (int i = 0; i < s->count(); ++i)
    r.add("stratum." + s->id(i), s->stratum(i).str());
  r.print();
  return 0;
}

int run_gap_check(const MetricArgs& a, int k, bool human) {
  const Loaded l = load(a);
  const GapReport rep = gap_check(l.metric, k);
  if (human) {
    if (rep.pass) {
      std::cout << "every point at distance >= 1/" << k
                << " from K keeps rho > " << rep.threshold.str()
                << " to all others\n";
    } else {
      std::cout << "violated by (" << l.space->id(rep.x) << ", "
                << l.space->id(rep.y) << "): rho = " << rep.rho_xy.str()
                << " <= " << rep.threshold.str() << "\n";
    }
    return rep.pass ? 0 : 1;
  }
  Records r;
  r.add("space", l.space->name());
  r.add("k", static_cast<long long>(k));
  r.add("threshold", rep.threshold);
  r.add("verdict", rep.pass);
  if (!rep.pass) {
    r.add("x", l.space->id(rep.x));
    r.add("y", l.space->id(rep.y));
    r.add("rho", rep.rho_xy);
  }
  r.print();
  return rep.pass ? 0 : 1;
}

int run_schemes(int n, bool human) {
  if (n < 0 || n > 10)
    fail(errc::syntax, "pair count must be between 0 and 10",
         {std::to_string(n)});
  const auto& list = schemes(n);
  if (human) {
    std::cout << list.size() << " non-crossing pairing(s) of " << 2 * n
              << " positions:\n";
    for (const Scheme& phi : list)
      std::cout << "  " << format_scheme(phi) << "\n";
    return 0;
  }
  Records r;
  r.add("n", static_cast<long long>(n));
  r.add("count", static_cast<long long>(list.size()));
  for (size_t i = 0; i < list.size(); ++i)
    r.add("scheme." + std::to_string(i + 1), format_scheme(list[i]));
  r.print();
  return 0;
}

int run_norm(const MetricArgs& a, const std::vector<std::string>& tokens,
             bool oracle, bool witness, int max_len, bool human) {
  const Loaded l = load(a);
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) text += " ";
    text += tokens[i];
  }
  const Word g = parse_word(text, *l.space);
  const std::string canon = format_word(g, *l.space);

  Rational value;
  NormResult res;
  if (oracle) {
    value = oracle_norm(l.star, g, max_len);
  } else {
    res = graev_norm(l.star, g, max_len);
    value = res.value;
  }
  if (human) {
    std::cout << "N(" << canon << ") = " << value.str() << " over '"
              << l.space->name() << "' (basepoint "
              << l.space->id(l.star.basepoint()) << ", scale "
              << l.scale.str() << ")\n";
    if (witness)
      std::cout << "  witness: " << format_raw_word(res.witness_word,
                                                    *l.space)
                << "  scheme " << format_scheme(res.witness_scheme) << "\n";
    return 0;
  }
  Records r;
  echo_context(r, l);
  r.add("word", canon);
  r.add("norm", value);
  if (witness) {
    r.add("witness.word", format_raw_word(res.witness_word, *l.space));
    r.add("witness.scheme", format_scheme(res.witness_scheme));
    r.add("bound", static_cast<long long>(res.length_bound));
  }
  r.print();
  return 0;
}

int run_claim1(const MetricArgs& a, const std::vector<std::string>& tokens,
               bool human) {
  const Loaded l = load(a);
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) text += " ";
    text += tokens[i];
  }
  const Word g = parse_word(text, *l.space);
  const Rational v = claim1_min(l.star, g);
  const std::string canon = format_word(g, *l.space);
  if (human) {
    std::cout << "two-scheme minimum for " << canon << ": " << v.str()
              << "\n";
    return 0;
  }
  Records r;
  echo_context(r, l);
  r.add("word", canon);
  r.add("claim1", v);
  r.print();
  return 0;
}

int run_member_un(const MetricArgs& a, const std::vector<std::string>& tokens,
                  int n, bool human) {
  const Loaded l = load(a);
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) text += " ";
    text += tokens[i];
  }
  const Word g = parse_word(text, *l.space);
  const NormBallCertificate c = in_un(l.star, g, n);
  if (human) {
    std::cout << "N(" << format_word(g, *l.space) << ") = " << c.norm.str()
              << (c.verdict ? " < " : " >= ") << c.threshold.str()
              << ": " << (c.verdict ? "inside" : "outside") << " the 1/"
              << n << " ball\n";
    return c.verdict ? 0 : 1;
  }
  Records r;
  echo_context(r, l);
  r.add("word", format_word(g, *l.space));
  r.add("n", static_cast<long long>(n));
  r.add("norm", c.norm);
  r.add("threshold", c.threshold);
  r.add("verdict", c.verdict);
  r.print();
  return c.verdict ? 0 : 1;
}

int run_member_ug(const MetricArgs& a, const std::string& base_text,
                  const std::string& target_text, bool human) {
  const Loaded l = load(a);
  const Word g = parse_word(base_text, *l.space);
  const Word h = parse_word(target_text, *l.space);
  const InsertionCertificate c = in_ug(l.star, g, h);
  if (human) {
    if (c.verdict) {
      const InsertionWitness& w = *c.witness;
      std::cout << format_word(h, *l.space)
                << " lies in the insertion neighborhood of "
                << format_word(g, *l.space) << ": insert ("
                << l.space->id(w.y) << " " << l.space->id(w.z)
                << "^-1)" << (w.eps < 0 ? " inverted" : "") << " at "
                << w.insert_at << ", cost " << w.cost.str() << "\n";
    } else {
      std::cout << format_word(h, *l.space)
                << " is outside: the finite candidate space is exhausted\n";
    }
    return c.verdict ? 0 : 1;
  }
  Records r;
  echo_context(r, l);
  r.add("base", format_word(g, *l.space));
  r.add("target", format_word(h, *l.space));
  r.add("verdict", c.verdict);
  if (c.verdict) {
    const InsertionWitness& w = *c.witness;
    r.add("insert_at", static_cast<long long>(w.insert_at));
    r.add("eps", static_cast<long long>(w.eps));
    r.add("y", l.space->id(w.y));
    r.add("z", l.space->id(w.z));
    for (size_t i = 0; i < w.x.size(); ++i)
      r.add("x." + std::to_string(i + 1), l.space->id(w.x[i]));
    r.add("cost", w.cost);
  } else {
    r.add("exhausted", c.exhausted);
  }
  r.print();
  return c.verdict ? 0 : 1;
}

std::vector<std::pair<Rational, int>> parse_schedule(
    const std::vector<std::string>& tests) {
  if (tests.empty()) return default_schedule();
  std::vector<std::pair<Rational, int>> out;
  for (const std::string& t : tests) {
    const size_t colon = t.find(':');
    if (colon == std::string::npos)
      fail(errc::syntax, "test spec must look like <p>/<q>:<n>", {t});
    out.emplace_back(Rational::parse(t.substr(0, colon)),
                     detail::parse_index_at(t.substr(colon + 1), 0));
    if (out.back().second < 1)
      fail(errc::syntax, "test index must be >= 1", {t});
  }
  return out;
}

int run_converge(const std::string& source, const std::string& seq_path,
                 const std::string& target_text,
                 const std::vector<std::string>& tests,
                 const std::string& basepoint, bool human) {
  const SpacePtr s = load_space(source);
  const WordSequence seq = parse_sequence(slurp(seq_path), *s);
  const Word target =
      target_text.empty() ? Word{} : parse_word(target_text, *s);
  const int bp = basepoint.empty() ? 0 : s->require(basepoint);
  const Metric base = Metric::yamada(s);
  const ConvergenceCertificate cert =
      check_convergence(base, seq, target, parse_schedule(tests), bp);

  if (human) {
    std::cout << "sequence of " << seq.words.size() << " word(s), tail "
              << seq.tail_start << ", target "
              << format_word(cert.target, *s) << ":\n";
    for (const ConvergenceTest& t : cert.tests) {
      std::cout << "  test c=" << t.c.str() << " n=" << t.n << ": "
                << (t.passed ? "passes" : "fails");
      if (t.first_pass)
        std::cout << ", holds from index " << t.first_pass;
      if (!t.passed) std::cout << ", refuted at index " << t.refuted_at;
      std::cout << "\n";
    }
    std::cout << (cert.consistent ? "consistent over the schedule"
                                  : "refuted") << "\n";
    return cert.consistent ? 0 : 1;
  }
  Records r;
  r.add("space", s->name());
  r.add("basepoint", s->id(bp));
  r.add("target", format_word(cert.target, *s));
  r.add("tail", static_cast<long long>(seq.tail_start));
  r.add("words", static_cast<long long>(seq.words.size()));
  r.add("tests", static_cast<long long>(cert.tests.size()));
  for (size_t i = 0; i < cert.tests.size(); ++i) {
    const ConvergenceTest& t = cert.tests[i];
    const std::string p = "test." + std::to_string(i + 1) + ".";
    r.add(p + "c", t.c);
    r.add(p + "n", static_cast<long long>(t.n));
    r.add(p + "threshold", t.threshold);
    r.add(p + "passed", t.passed);
    r.add(p + "first_pass", static_cast<long long>(t.first_pass));
    if (!t.passed)
      r.add(p + "refuted_at", static_cast<long long>(t.refuted_at));
  }
  r.add("consistent", cert.consistent);
  if (!cert.consistent) {
    r.add("refuted.test", static_cast<long long>(cert.refuted_test + 1));
    r.add("refuted.index", static_cast<long long>(cert.refuted_index));
  }
  r.print();
  return cert.consistent ? 0 : 1;
}

NamedLetter parse_named_letter(const std::string& tok) {
  NamedLetter nl;
  nl.id = tok;
  if (const size_t caret = tok.find('^'); caret != std::string::npos) {
    if (tok.substr(caret) != "^-1" || caret == 0)
      fail(errc::unknown_token, "bad token '" + tok + "'", {tok});
    nl.id = tok.substr(0, caret);
    nl.sign = -1;
  }
  if (nl.id == "e")
    fail(errc::unknown_token, "the neutral letter cannot anchor a sequence",
         {tok});
  return nl;
}

int run_lemma25(const std::string& family, int depth, int count,
                const std::vector<std::string>& tokens, bool human) {
  if (tokens.size() != 2)
    fail(errc::not_length_two, "give exactly two letters, e.g. c2 c3^-1");
  const ParametricFamily fam = ParametricFamily::named(family, depth);
  const Lemma25Result res = lemma25_sequence(
      fam, parse_named_letter(tokens[0]), parse_named_letter(tokens[1]),
      count);

  bool all_true = res.certificate.consistent;
  for (const InsertionCertificate& ic : res.insertions)
    all_true = all_true && ic.verdict;

  if (human) {
    std::cout << "g = " << format_word(res.g, *res.space)
              << ": separation r = " << res.r.str() << ", k = "
              << res.k_factor << "\n";
    for (int n = 1; n <= count; ++n) {
      const InsertionCertificate& ic = res.insertions[n - 1];
      std::cout << "  n=" << n << ": m=" << res.m_of_n[n] << ", h = "
                << format_word(res.sequence.words[n - 1], *res.space)
                << ", cost " << ic.witness->cost.str() << " at scale "
                << res.sequence.scale_at(n).str()
                << (ic.verdict ? "" : "  [FAILED]") << "\n";
    }
    std::cout << (all_true ? "all steps certified" : "certification failed")
              << "\n";
    return all_true ? 0 : 1;
  }
  Records r;
  r.add("family", fam.name());
  r.add("depth", static_cast<long long>(fam.depth()));
  r.add("g", format_word(res.g, *res.space));
  r.add("basepoint", res.space->id(res.basepoint));
  r.add("count", static_cast<long long>(count));
  r.add("r", res.r);
  r.add("k", res.k_factor);
  for (int n = 1; n <= count; ++n) {
    const std::string p = "step." + std::to_string(n) + ".";
    r.add(p + "m", static_cast<long long>(res.m_of_n[n]));
    r.add(p + "scale", res.sequence.scale_at(n));
    r.add(p + "h", format_word(res.sequence.words[n - 1], *res.space));
    r.add(p + "cost", res.insertions[n - 1].witness
                          ? res.insertions[n - 1].witness->cost
                          : Rational(0));
    r.add(p + "verdict", res.insertions[n - 1].verdict);
  }
  r.add("consistent", all_true);
  r.print();
  return all_true ? 0 : 1;
}

int run_fixture(const std::string& name, int m) {
  if (name == "comb") {
    std::cout << format_space(*comb_space());
    return 0;
  }
  const ParametricFamily fam = ParametricFamily::named(name, m);
  std::vector<int> idx;
  for (int i = 1; i <= m; ++i) idx.push_back(i);
  std::cout << format_space(*fam.sample(idx));
  return 0;
}

int run_reduce(const MetricArgs& a, const std::vector<std::string>& tokens,
               bool human) {
  const SpacePtr s = load_space(a.source);
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) text += " ";
    text += tokens[i];
  }
  const RawWord raw = parse_raw_word(text, *s);
  const Word red = reduce(raw);
  if (human) {
    std::cout << format_raw_word(raw, *s) << "  ->  "
              << format_word(red, *s) << "\n";
    return 0;
  }
  Records r;
  r.add("space", s->name());
  r.add("raw", format_raw_word(raw, *s));
  r.add("reduced", format_word(red, *s));
  r.add("length", static_cast<long long>(red.length()));
  r.print();
  return 0;
}

int run_gamma(const MetricArgs& a, const std::vector<std::string>& tokens,
              const std::string& scheme_text, bool human) {
  const Loaded l = load(a);
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) text += " ";
    text += tokens[i];
  }
  const RawWord raw = parse_raw_word(text, *l.space);
  const Scheme phi = parse_scheme(scheme_text);
  const Rational v = gamma(l.star, raw, phi);
  if (human) {
    std::cout << "gamma(" << format_raw_word(raw, *l.space) << "; "
              << format_scheme(phi) << ") = " << v.str() << "\n";
    return 0;
  }
  Records r;
  echo_context(r, l);
  r.add("raw", format_raw_word(raw, *l.space));
  r.add("scheme", format_scheme(phi));
  r.add("gamma", v);
  r.print();
  return 0;
}

int render_error(const error& e, bool human) {
  if (human) {
    std::cerr << "error: " << e.what();
    if (e.line()) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return 2;
  }
  Records r;
  r.add("error", std::string(errc_name(e.code())));
  r.add("message", std::string(e.what()));
  if (e.line()) r.add("line", static_cast<long long>(e.line()));
  for (size_t i = 0; i < e.witness().size(); ++i)
    r.add("witness." + std::to_string(i + 1), e.witness()[i]);
  r.print();
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact snap-metric and free-group norm calculator over finite "
      "pointed rational metric spaces"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "prose output instead of key=value records");

  std::function<int()> run;

  const auto add_metric_args = [](CLI::App* sub, MetricArgs& a,
                                  bool with_metric = true) {
    sub->add_option("space", a.source,
                    "space file, or an inline family spec like doublecomb:8")
        ->required();
    if (with_metric) {
      sub->add_option("--scale", a.scale, "positive metric factor p/q")
          ->capture_default_str();
      sub->add_option("--basepoint", a.basepoint,
                      "basepoint id (default: first point)");
    }
  };

  // validate
  {
    auto* sub = app.add_subcommand("validate",
                                   "check a space file against the metric "
                                   "axioms");
    sub->fallthrough();
    static MetricArgs a;
    add_metric_args(sub, a, false);
    sub->callback([&] { run = [&] { return run_validate(a, human); }; });
  }
  // rho
  {
    auto* sub = app.add_subcommand("rho", "print the snapped metric table");
    sub->fallthrough();
    static MetricArgs a;
    add_metric_args(sub, a);
    sub->callback([&] { run = [&] { return run_rho(a, human); }; });
  }
  // stratum
  {
    auto* sub = app.add_subcommand("stratum",
                                   "print each point's shell W(i) or InK");
    sub->fallthrough();
    static MetricArgs a;
    add_metric_args(sub, a, false);
    sub->callback([&] { run = [&] { return run_stratum(a, human); }; });
  }
  // gap-check
  {
    auto* sub = app.add_subcommand("gap-check",
                                   "verify the 1/(k+1)^2 separation gap "
                                   "outside the 1/k ball around K");
    sub->fallthrough();
    static MetricArgs a;
    static int k = 1;
    add_metric_args(sub, a);
    sub->add_option("--k", k, "shell index (>= 1)")->required();
    sub->callback([&] { run = [&] { return run_gap_check(a, k, human); }; });
  }
  // schemes
  {
    auto* sub = app.add_subcommand("schemes",
                                   "enumerate non-crossing pairings of 2n "
                                   "positions");
    sub->fallthrough();
    static int n = 0;
    sub->add_option("--n", n, "number of pairs (0..10)")->required();
    sub->callback([&] { run = [&] { return run_schemes(n, human); }; });
  }
  // norm
  {
    auto* sub = app.add_subcommand("norm",
                                   "exact norm of a reduced word (search "
                                   "route by default)");
    sub->fallthrough();
    static MetricArgs a;
    static std::vector<std::string> tokens;
    static bool oracle = false, witness = false;
    static int max_len = 4;
    add_metric_args(sub, a);
    sub->add_option("word", tokens, "word tokens, e.g. u v^-1")->required();
    auto* o = sub->add_flag("--oracle", oracle,
                            "use the independent enumeration route");
    sub->add_flag("--witness", witness,
                  "also print the minimizing spelling and scheme")
        ->excludes(o);
    sub->add_option("--max-len", max_len,
                    "reject words longer than this bound")
        ->capture_default_str();
    sub->callback([&] {
      run = [&] {
        return run_norm(a, tokens, oracle, witness, max_len, human);
      };
    });
  }
  // claim1
  {
    auto* sub = app.add_subcommand("claim1",
                                   "two-scheme minimum for balanced "
                                   "four-letter words");
    sub->fallthrough();
    static MetricArgs a;
    static std::vector<std::string> tokens;
    add_metric_args(sub, a);
    sub->add_option("word", tokens, "word tokens")->required();
    sub->callback([&] { run = [&] { return run_claim1(a, tokens, human); }; });
  }
  // member-un
  {
    auto* sub = app.add_subcommand("member-un",
                                   "norm-ball membership N(g) < 1/n");
    sub->fallthrough();
    static MetricArgs a;
    static std::vector<std::string> tokens;
    static int n = 1;
    add_metric_args(sub, a);
    sub->add_option("word", tokens, "word tokens")->required();
    sub->add_option("--n", n, "ball index (>= 1)")->required();
    sub->callback([&] {
      run = [&] { return run_member_un(a, tokens, n, human); };
    });
  }
  // member-ug
  {
    auto* sub = app.add_subcommand("member-ug",
                                   "insertion-neighborhood membership "
                                   "around an admissible base word");
    sub->fallthrough();
    static MetricArgs a;
    static std::string base_text, target_text;
    add_metric_args(sub, a);
    sub->add_option("--base", base_text, "admissible base word, quoted")
        ->required();
    sub->add_option("--target", target_text, "candidate member, quoted")
        ->required();
    sub->callback([&] {
      run = [&] { return run_member_ug(a, base_text, target_text, human); };
    });
  }
  // converge
  {
    auto* sub = app.add_subcommand("converge",
                                   "evaluate a word sequence against a "
                                   "schedule of membership tests");
    sub->fallthrough();
    static std::string source, seq_path, target_text, basepoint;
    static std::vector<std::string> tests;
    sub->add_option("space", source, "space file or family spec")
        ->required();
    sub->add_option("sequence", seq_path, "sequence file")->required();
    sub->add_option("--target", target_text,
                    "target word (default: the identity)");
    sub->add_option("--test", tests,
                    "schedule entry <p>/<q>:<n>; repeatable (default: the "
                    "built-in schedule)");
    sub->add_option("--basepoint", basepoint,
                    "basepoint id (default: first point)");
    sub->callback([&] {
      run = [&] {
        return run_converge(source, seq_path, target_text, tests, basepoint,
                            human);
      };
    });
  }
  // lemma25
  {
    auto* sub = app.add_subcommand("lemma25",
                                   "build and certify the twin-insertion "
                                   "sequence converging to a two-letter "
                                   "word");
    sub->fallthrough();
    static std::string family = "doublecomb";
    static int depth = 50, count = 10;
    static std::vector<std::string> tokens;
    sub->add_option("letters", tokens, "the two letters, e.g. c2 c3^-1")
        ->required();
    sub->add_option("--family", family, "parametric family name")
        ->capture_default_str();
    sub->add_option("--depth", depth, "family depth")->capture_default_str();
    sub->add_option("--count", count, "number of certified steps")
        ->capture_default_str();
    sub->callback([&] {
      run = [&] { return run_lemma25(family, depth, count, tokens, human); };
    });
  }
  // fixture
  {
    auto* sub = app.add_subcommand("fixture",
                                   "print a shipped fixture as a space "
                                   "file");
    sub->fallthrough();
    static std::string name;
    static int m = 8;
    sub->add_option("name", name, "comb or doublecomb")->required();
    sub->add_option("--m", m, "family sample depth")->capture_default_str();
    sub->callback([&] { run = [&] { return run_fixture(name, m); }; });
  }
  // reduce
  {
    auto* sub = app.add_subcommand("reduce",
                                   "reduce a raw word (e and cancelling "
                                   "pairs allowed)");
    sub->fallthrough();
    static MetricArgs a;
    static std::vector<std::string> tokens;
    add_metric_args(sub, a, false);
    sub->add_option("word", tokens, "raw word tokens")->required();
    sub->callback([&] { run = [&] { return run_reduce(a, tokens, human); }; });
  }
  // gamma
  {
    auto* sub = app.add_subcommand("gamma",
                                   "pair-sum cost of a raw spelling under "
                                   "a pairing scheme");
    sub->fallthrough();
    static MetricArgs a;
    static std::vector<std::string> tokens;
    static std::string scheme_text;
    add_metric_args(sub, a);
    sub->add_option("word", tokens, "raw word tokens")->required();
    sub->add_option("--scheme", scheme_text, "pairing, e.g. (1,2)(3,4)")
        ->required();
    sub->callback([&] {
      run = [&] { return run_gamma(a, tokens, scheme_text, human); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return run();
  } catch (const error& e) {
    return render_error(e, human);
  }
}
