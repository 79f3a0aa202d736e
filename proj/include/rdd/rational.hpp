#pragma once

// Exact rationals over 128-bit integers. Every operation checks for
// overflow and throws OverflowError instead of wrapping.

#include <compare>
#include <cstdint>
#include <string>

#include "rdd/error.hpp"

namespace rdd {

__extension__ typedef __int128 Int128;

class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int128 value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int128 numerator, Int128 denominator);

  Int128 numerator() const noexcept { return num_; }
  Int128 denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const noexcept;

  // "p/q", always with the denominator.
  std::string to_string() const;
  // "p/q (d)" with d printed to 12 significant digits.
  std::string to_display() const;

  // Parses "p", "p/q" or "-p/q".
  static Rational parse(const std::string& text);

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);
Int128 gcd128(Int128 a, Int128 b);
std::string int128_to_string(Int128 v);

// lcm(1, ..., m), used to turn sums of 1/d into integers.
Int128 lcm_up_to(int m);

}  // namespace rdd
