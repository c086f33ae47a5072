#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "graev/errors.hpp"

namespace graev {

using Int = boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with a positive
// denominator.  All comparisons and arithmetic are exact; there is no
// floating-point anywhere in the library.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) fail(errc::syntax, "rational with zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::internal, "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Largest integer <= value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }
  // Smallest integer >= value.
  Int ceil() const {
    Int q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "p/q" in lowest terms; integers render as "p/1" so every rational field
  // in machine output has the same shape.
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p", "-p", "p/q" with an optional leading sign on p; q > 0.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      fail(errc::syntax, "bad rational '" + std::string(text) + "'",
           {std::string(text)});
    };
    if (text.empty()) bad();
    size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
    }
    const size_t num_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_start) bad();
    Int num(std::string(text.substr(num_start, pos - num_start)));
    Int den = 1;
    if (pos < text.size()) {
      if (text[pos] != '/') bad();
      ++pos;
      const size_t den_start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == den_start || pos != text.size()) bad();
      den = Int(std::string(text.substr(den_start)));
      if (den == 0) bad();
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

// Exact check that a cpp_int fits in int64 (used by the fixed-denominator
// fast path, which falls back to full rationals when it does not).
inline bool fits_int64(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  return v >= lo && v <= hi;
}

inline std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) fail(errc::internal, "value exceeds 64-bit range");
  return v.convert_to<std::int64_t>();
}

}  // namespace graev
