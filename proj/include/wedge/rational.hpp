#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wedge {

using i64 = std::int64_t;
using i128 = __int128;

namespace detail {

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::overflow_error("rational: out of 64-bit range");
  return static_cast<i64>(v);
}

inline int sgn(i128 v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }

}  // namespace detail

// Exact rational, canonical form: den > 0 and gcd(|num|, den) == 1.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  constexpr Rat() = default;
  constexpr Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : Rat(make(n, d)) {}

  static Rat make(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num = detail::narrow(n);
    r.den = detail::narrow(d);
    return r;
  }

  int sign() const { return num < 0 ? -1 : num > 0 ? 1 : 0; }
  bool is_integer() const { return den == 1; }

  i64 floor() const {
    if (num >= 0) return num / den;
    return detail::narrow(-((-(i128)num + den - 1) / den));
  }
  i64 ceil() const { return floor() + (num % den != 0 ? 1 : 0); }

  friend Rat operator+(Rat a, Rat b) {
    return make((i128)a.num * b.den + (i128)b.num * a.den, (i128)a.den * b.den);
  }
  friend Rat operator-(Rat a, Rat b) {
    return make((i128)a.num * b.den - (i128)b.num * a.den, (i128)a.den * b.den);
  }
  friend Rat operator*(Rat a, Rat b) {
    return make((i128)a.num * b.num, (i128)a.den * b.den);
  }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return make((i128)a.num * b.den, (i128)a.den * b.num);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 l = (i128)a.num * b.den;
    i128 r = (i128)b.num * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" or "p/q"
  static Rat parse(std::string_view s) {
    auto piece = [](std::string_view t) -> i64 {
      i64 v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || p != t.data() + t.size())
        throw std::invalid_argument("rational: bad literal '" + std::string(t) + "'");
      return v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(piece(s));
    return Rat(piece(s.substr(0, slash)), piece(s.substr(slash + 1)));
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  double approx() const { return double(num) / double(den); }
};

}  // namespace wedge
