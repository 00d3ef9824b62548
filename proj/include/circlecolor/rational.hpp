#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace circlecolor {

/// Exact non-negative fraction num/den kept in lowest terms.
///
/// Comparisons cross-multiply in 128 bits, so any pair of values with 64-bit
/// numerators and denominators compares exactly.
class Rational {
public:
  constexpr Rational() = default;

  constexpr Rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
      throw InvalidPosition("rational denominator must be positive");
    }
    if (num < 0) {
      throw InvalidPosition("rational numerator must be non-negative");
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static constexpr Rational zero() { return Rational(0, 1); }
  static constexpr Rational one() { return Rational(1, 1); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Exact midpoint (a+b)/2. Throws if the result does not fit in 64 bits.
  friend Rational midpoint(const Rational& a, const Rational& b) {
    const __int128 g = std::gcd(a.den_, b.den_);
    const __int128 lcm = static_cast<__int128>(a.den_) / g * b.den_;
    const __int128 num = static_cast<__int128>(a.num_) * (lcm / a.den_) +
                         static_cast<__int128>(b.num_) * (lcm / b.den_);
    __int128 den = lcm * 2;
    const __int128 r = gcd128(num, den);
    const __int128 n = num / r;
    den /= r;
    constexpr __int128 limit = INT64_MAX;
    if (n > limit || den > limit) {
      throw InvalidPosition("rational midpoint overflows 64-bit storage");
    }
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(den));
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "n/d" or a bare integer.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(std::stoll(std::string(text)), 1);
      }
      return Rational(std::stoll(std::string(text.substr(0, slash))),
                      std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::logic_error&) {
      throw InvalidPosition("cannot parse rational '" + std::string(text) + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num_ << '/' << r.den_;
  }

private:
  static constexpr __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A point of the open unit interval (0,1).
class Position {
public:
  Position() = default;

  explicit Position(const Rational& value) : value_(value) {
    if (value_ <= Rational::zero() || value_ >= Rational::one()) {
      throw InvalidPosition("position " + value_.to_string() + " is not inside (0,1)");
    }
  }

  Position(std::int64_t num, std::int64_t den) : Position(Rational(num, den)) {}

  const Rational& value() const { return value_; }
  std::int64_t num() const { return value_.num(); }
  std::int64_t den() const { return value_.den(); }

  operator const Rational&() const { return value_; } // NOLINT(google-explicit-constructor)

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a, const Position& b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return value_.to_string(); }

  friend std::ostream& operator<<(std::ostream& os, const Position& p) {
    return os << p.value_;
  }

private:
  Rational value_{1, 2};
};

} // namespace circlecolor
