#include "rdd/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>

namespace rdd {

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit rational overflow in addition");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit rational overflow in multiplication");
  return r;
}

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  constexpr Int128 kWord = std::numeric_limits<std::uint64_t>::max();
  if (a <= kWord && b <= kWord) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in the negative range so the minimum value prints correctly.
  if (!negative) v = -v;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int128 lcm_up_to(int m) {
  Int128 l = 1;
  for (int d = 2; d <= m; ++d) l = checked_mul(l / gcd128(l, d), d);
  return l;
}

Rational::Rational(Int128 numerator, Int128 denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const Int128 g = gcd128(numerator, denominator);
  num_ = g == 1 ? numerator : numerator / g;
  den_ = g == 1 ? denominator : denominator / g;
}

Rational& Rational::operator+=(const Rational& o) {
  const Int128 g = gcd128(den_, o.den_);
  const Int128 left = checked_mul(num_, o.den_ / g);
  const Int128 right = checked_mul(o.num_, den_ / g);
  *this = Rational(checked_add(left, right), checked_mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  const Int128 g1 = gcd128(num_, o.den_);
  const Int128 g2 = gcd128(o.num_, den_);
  const Int128 a = g1 == 0 ? 0 : num_ / g1;
  const Int128 b = g2 == 0 ? 0 : o.num_ / g2;
  const Int128 c = g2 == 0 ? den_ : den_ / g2;
  const Int128 d = g1 == 0 ? o.den_ : o.den_ / g1;
  *this = Rational(checked_mul(a, b), checked_mul(c, d));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  return *this *= Rational(o.den_, o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_mul(num_, -1);
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const Int128 g = gcd128(a.den_, b.den_);
  return checked_mul(a.num_, b.den_ / g) <=> checked_mul(b.num_, a.den_ / g);
}

double Rational::to_double() const noexcept {
  const Int128 whole = num_ / den_;
  const Int128 rem = num_ % den_;
  return static_cast<double>(whole) + static_cast<double>(rem) / static_cast<double>(den_);
}

std::string Rational::to_string() const { return int128_to_string(num_) + "/" + int128_to_string(den_); }

std::string Rational::to_display() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", to_double());
  return to_string() + " (" + buf + ")";
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("rational: empty integer", 0);
    Int128 v = 0;
    std::size_t i = 0;
    const bool negative = s[0] == '-';
    if (negative) ++i;
    if (i == s.size()) throw ParseError("rational: bad integer", 0);
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("rational: bad digit", i);
      v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return negative ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace rdd
