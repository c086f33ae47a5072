#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graev/family.hpp"
#include "graev/nbhd.hpp"

namespace graev {

// Finite indexed word sequence with a declared tail start and an optional
// per-index metric scale (sigma_i, defaulting to 1): the scale at which
// index i's membership is meant to hold, composed multiplicatively with a
// test's own scale factor.
struct WordSequence {
  std::vector<int> indices;  // strictly increasing, >= 1
  std::vector<Word> words;   // parallel to indices
  int tail_start = 1;
  std::map<int, Rational> scales;

  void validate() const {
    if (words.empty() || indices.size() != words.size())
      fail(errc::empty_sequence, "sequence needs indexed words");
    for (size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1]))
        fail(errc::syntax, "sequence indices must increase strictly");
    }
    if (tail_start < 1)
      fail(errc::bad_tail, "tail start must be >= 1",
           {std::to_string(tail_start)});
    for (const auto& [idx, c] : scales)
      if (!(c > Rational(0)))
        fail(errc::nonpositive_scale, "per-index scale must be positive",
             {std::to_string(idx), c.str()});
  }

  Rational scale_at(int index) const {
    const auto it = scales.find(index);
    return it == scales.end() ? Rational(1) : it->second;
  }
};

// One schedule entry evaluated against the whole sequence.  For target e
// the membership is the norm ball N < 1/n at metric (c sigma_i) rho; for a
// non-identity target it is the insertion neighborhood at the same metric
// (n is carried but plays no role there).  first_pass is the least listed
// index from which every later listed word is a member (0 when none);
// refuted_at is the least failing listed index at or past the tail.
struct ConvergenceTest {
  Rational c;
  int n = 0;
  Rational threshold;
  bool passed = false;
  int first_pass = 0;
  int refuted_at = 0;
};

struct ConvergenceCertificate {
  Word target;
  int basepoint = 0;
  int tail_start = 1;
  std::vector<ConvergenceTest> tests;
  bool consistent = false;
  int refuted_test = -1;  // position in tests when !consistent
  int refuted_index = 0;  // listed sequence index of the failure
};

inline std::vector<std::pair<Rational, int>> default_schedule() {
  std::vector<std::pair<Rational, int>> s;
  for (int c : {1, 6, 7, 42})
    for (int n = 1; n <= 10; ++n) s.emplace_back(Rational(c), n);
  return s;
}

// Finite convergence evidence: every schedule entry must hold from some
// index no later than the declared tail.  The verdict is "consistent over
// this schedule", never "converges" — the schedule is finite and so is the
// sequence.
inline ConvergenceCertificate check_convergence(
    const Metric& base, const WordSequence& seq, const Word& target,
    const std::vector<std::pair<Rational, int>>& schedule,
    int basepoint = 0) {
  seq.validate();
  if (!target.empty() && target.length() > 2)
    fail(errc::length_over_bound,
         "non-identity targets are supported up to length 2",
         {std::to_string(target.length())});

  ConvergenceCertificate cert;
  cert.target = target;
  cert.basepoint = basepoint;
  cert.tail_start = seq.tail_start;

  // scaled metrics are shared across tests; keyed by the effective factor
  std::map<Rational, StarMetric> stars;
  const auto star_at = [&](const Rational& eff) -> const StarMetric& {
    auto it = stars.find(eff);
    if (it == stars.end())
      it = stars
               .emplace(eff, StarMetric::at(base.scaled(eff), basepoint))
               .first;
    return it->second;
  };

  const size_t count = seq.words.size();
  std::vector<char> member(count, 0);
  for (const auto& [c, n] : schedule) {
    ConvergenceTest t;
    t.c = c;
    t.n = n;
    t.threshold = target.empty() ? Rational(1, n) : Rational(1);
    for (size_t i = 0; i < count; ++i) {
      const Rational eff = c * seq.scale_at(seq.indices[i]);
      const StarMetric& star = star_at(eff);
      if (target.empty()) {
        member[i] = in_un(star, seq.words[i], n).verdict ? 1 : 0;
      } else {
        if (!admissible(star, target))
          fail(errc::inadmissible_scale,
               "target is not admissible at scale " + eff.str(),
               {eff.str(), std::to_string(seq.indices[i])});
        member[i] = in_ug(star, target, seq.words[i]).verdict ? 1 : 0;
      }
    }
    bool suffix_ok = true;
    for (size_t i = count; i-- > 0;) {
      if (member[i])
        t.first_pass = seq.indices[i];
      else
        break;
    }
    for (size_t i = 0; i < count; ++i) {
      if (seq.indices[i] < seq.tail_start) continue;
      if (!member[i]) {
        suffix_ok = false;
        t.refuted_at = seq.indices[i];
        break;
      }
    }
    t.passed = suffix_ok;
    cert.tests.push_back(std::move(t));
  }

  cert.consistent = true;
  for (size_t ti = 0; ti < cert.tests.size(); ++ti) {
    if (!cert.tests[ti].passed) {
      cert.consistent = false;
      cert.refuted_test = static_cast<int>(ti);
      cert.refuted_index = cert.tests[ti].refuted_at;
      break;
    }
  }
  return cert;
}

// A letter given by point id, for words whose space is chosen later.
struct NamedLetter {
  std::string id;
  int sign = 1;
};

struct Lemma25Result {
  SpacePtr space;
  Word g;  // over `space`
  int basepoint = 0;
  Rational r;            // star separation of g's two letters, unscaled
  long long k_factor = 1;  // least integer > 1/r (1 when r >= 1)
  std::vector<int> m_of_n;        // chosen twin shell, per n (1-based slot 0 unused)
  WordSequence sequence;          // h_n with per-index scale n*k
  std::vector<InsertionCertificate> insertions;  // one per n
  ConvergenceCertificate certificate;
};

// The canonical converging-to-g sequence over the twin family: h_n inserts
// the cheapest admissible twin pair after g's first letter, where "cheap"
// means the snapped twin distance 1/(m(m+1)) drops below 1/(n k), k being
// the least integer beating 1/r.  Every h_n is certified through the
// insertion-neighborhood search at metric scale n k.
inline Lemma25Result lemma25_sequence(const ParametricFamily& family,
                                      const NamedLetter& a1,
                                      const NamedLetter& a2, int count) {
  if (count < 1) fail(errc::syntax, "sequence length must be >= 1");

  // resolve the ground points and collect the sample indices they need
  std::vector<int> need;
  for (const NamedLetter& a : {a1, a2}) {
    if (a.id == "k") continue;
    const auto twin = ParametricFamily::parse_twin(a.id);
    if (!twin)
      fail(errc::unknown_point,
           "'" + a.id + "' is not a ground point of the family", {a.id});
    if (twin->first > family.depth())
      fail(errc::family_too_shallow,
           "point '" + a.id + "' lies beyond the family depth", {a.id});
    need.push_back(twin->first);
  }
  if (need.empty()) need.push_back(1);  // keep the sample nonempty

  // r and k need only g's own letters; compute them on a minimal sample
  const SpacePtr probe = family.sample(need);
  const StarMetric probe_star = StarMetric::at(Metric::yamada(probe), 0);
  const Letter pa1 = Letter::make(probe->require(a1.id), a1.sign);
  const Letter pa2 = Letter::make(probe->require(a2.id), a2.sign);
  {
    const Word g_probe = reduce({pa1, pa2});
    if (g_probe.length() != 2)
      fail(errc::not_length_two, "base word must be reduced of length 2");
  }
  const Rational r = probe_star.dist(pa1.inverse(), pa2);
  long long k_factor = 1;
  if (r < Rational(1))
    k_factor = to_int64((Rational(1) / r).floor() + 1);

  // per n: least twin shell m with m(m+1) > n*k, i.e. twin distance below
  // 1/(n*k); everything lives in one shared sample so the sequence words
  // are comparable
  std::vector<int> m_of_n(count + 1, 0);
  int m = 1;
  for (int n = 1; n <= count; ++n) {
    const Int bound = Int(n) * k_factor;
    while (Int(m) * (m + 1) <= bound) {
      ++m;
      if (m > family.depth())
        fail(errc::family_too_shallow,
             "no twin pair is cheap enough for step " + std::to_string(n),
             {std::to_string(n)});
    }
    m_of_n[n] = m;
  }
  std::vector<int> sample_idx = need;
  for (int n = 1; n <= count; ++n) sample_idx.push_back(m_of_n[n]);

  Lemma25Result out;
  out.space = family.sample(sample_idx);
  out.basepoint = 0;  // the sample's first point is k
  out.r = r;
  out.k_factor = k_factor;
  out.m_of_n = m_of_n;

  const Letter l1 = Letter::make(out.space->require(a1.id), a1.sign);
  const Letter l2 = Letter::make(out.space->require(a2.id), a2.sign);
  out.g = reduce({l1, l2});

  const Metric base = Metric::yamada(out.space);
  out.sequence.tail_start = 1;
  for (int n = 1; n <= count; ++n) {
    const int mm = m_of_n[n];
    const Letter y =
        Letter::make(out.space->require(ParametricFamily::twin_id(mm, false)),
                     1);
    const Letter z =
        Letter::make(out.space->require(ParametricFamily::twin_id(mm, true)),
                     -1);
    out.sequence.indices.push_back(n);
    out.sequence.words.push_back(reduce({l1, y, z, l2}));
    out.sequence.scales[n] = Rational(Int(n) * k_factor);

    const StarMetric star =
        StarMetric::at(base.scaled(Rational(Int(n) * k_factor)), 0);
    out.insertions.push_back(in_ug(star, out.g, out.sequence.words.back()));
  }

  out.certificate = check_convergence(base, out.sequence, out.g,
                                      {{Rational(1), 1}}, 0);
  return out;
}

enum class Case1Verdict { limit_is_e, inconclusive };

// The limit-identification rule for balanced four-letter patterns: when the
// exponent pattern pairs positions (1,2)(3,4), matching limits x=y and z=t
// collapse the word to e; when it pairs (1,4)(2,3), x=t and y=z do.
inline Case1Verdict case1_verdict(const std::array<int, 4>& eps,
                                  const std::array<std::string, 4>& limits) {
  int sum = 0;
  for (int e : eps) {
    if (e != 1 && e != -1)
      fail(errc::unbalanced_exponents, "exponents must be +-1");
    sum += e;
  }
  if (sum != 0)
    fail(errc::unbalanced_exponents, "exponents must sum to zero",
         {std::to_string(sum)});
  if (eps[0] == -eps[1] && eps[2] == -eps[3] && limits[0] == limits[1] &&
      limits[2] == limits[3])
    return Case1Verdict::limit_is_e;
  if (eps[0] == -eps[3] && eps[1] == -eps[2] && limits[0] == limits[3] &&
      limits[1] == limits[2])
    return Case1Verdict::limit_is_e;
  return Case1Verdict::inconclusive;
}

}  // namespace graev
