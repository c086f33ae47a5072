#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graev {

// Every failure the library can report, as a single exception type with a
// machine-readable code plus whatever identifiers pin down the offending
// input (point ids, word text, line numbers).  Callers that want to relay
// structured diagnostics (the CLI does) read code()/witness() instead of
// parsing what().
enum class errc {
  // space / metric construction
  duplicate_point,
  unknown_point,
  missing_distance,
  duplicate_distance,
  metric_identity,
  metric_symmetry,
  metric_triangle,
  nonpositive_scale,
  // words
  bad_letter,
  not_reduced,
  empty_word,
  length_out_of_range,
  // graev / schemes
  bad_scheme,
  length_mismatch,
  length_over_bound,
  // neighborhoods / convergence
  not_in_b,
  not_admissible,
  unbalanced_exponents,
  not_length_two,
  empty_sequence,
  bad_tail,
  inadmissible_scale,
  // families
  unknown_family,
  empty_index_set,
  family_too_shallow,
  // parsing
  unknown_token,
  syntax,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_point: return "duplicate_point";
    case errc::unknown_point: return "unknown_point";
    case errc::missing_distance: return "missing_distance";
    case errc::duplicate_distance: return "duplicate_distance";
    case errc::metric_identity: return "metric_identity";
    case errc::metric_symmetry: return "metric_symmetry";
    case errc::metric_triangle: return "metric_triangle";
    case errc::nonpositive_scale: return "nonpositive_scale";
    case errc::bad_letter: return "bad_letter";
    case errc::not_reduced: return "not_reduced";
    case errc::empty_word: return "empty_word";
    case errc::length_out_of_range: return "length_out_of_range";
    case errc::bad_scheme: return "bad_scheme";
    case errc::length_mismatch: return "length_mismatch";
    case errc::length_over_bound: return "length_over_bound";
    case errc::not_in_b: return "not_in_b";
    case errc::not_admissible: return "not_admissible";
    case errc::unbalanced_exponents: return "unbalanced_exponents";
    case errc::not_length_two: return "not_length_two";
    case errc::empty_sequence: return "empty_sequence";
    case errc::bad_tail: return "bad_tail";
    case errc::inadmissible_scale: return "inadmissible_scale";
    case errc::unknown_family: return "unknown_family";
    case errc::empty_index_set: return "empty_index_set";
    case errc::family_too_shallow: return "family_too_shallow";
    case errc::unknown_token: return "unknown_token";
    case errc::syntax: return "syntax";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, std::string message, std::vector<std::string> witness = {},
        int line = 0)
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)),
        line_(line) {}

  errc code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }
  int line() const { return line_; }

 private:
  errc code_;
  std::vector<std::string> witness_;  // offending ids, in report order
  int line_;                          // 1-based input line, 0 when n/a
};

[[noreturn]] inline void fail(errc code, std::string message,
                              std::vector<std::string> witness = {},
                              int line = 0) {
  throw error(code, std::move(message), std::move(witness), line);
}

}  // namespace graev
