#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "nonarch/errors.hpp"

namespace nonarch {

using Integer = boost::multiprecision::cpp_int;
// Reduced fraction with positive denominator; zero is 0/1. cpp_rational maintains
// exactly these invariants, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(const Integer& x) { return x.sign(); }

// Largest integer <= x.
inline Integer floor_to_integer(const Rational& x) {
  Integer q = num(x) / den(x);
  if (x < 0 && q * den(x) != num(x)) --q;
  return q;
}

inline Integer ceil_to_integer(const Rational& x) { return -floor_to_integer(-x); }

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Rational rational_pow(const Rational& base, const Integer& exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw division_by_zero();
    return Rational(0);
  }
  Integer e = exp < 0 ? Integer(-exp) : exp;
  Rational acc(1);
  Rational b = base;
  while (e > 0) {
    if ((e & 1) != 0) acc *= b;
    b *= b;
    e >>= 1;
  }
  if (exp < 0) acc = Rational(1) / acc;
  return acc;
}

// Exact n-th root of a nonnegative integer, if one exists.
inline std::optional<Integer> integer_nth_root(const Integer& x, unsigned n) {
  if (n == 0) return std::nullopt;
  if (x < 0) return std::nullopt;
  if (x == 0 || x == 1 || n == 1) return x;
  Integer lo = 1;
  Integer hi = Integer(1) << (static_cast<unsigned>(boost::multiprecision::msb(x)) / n + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, n) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return boost::multiprecision::pow(lo, n) == x ? std::optional<Integer>(lo) : std::nullopt;
}

// Exact rational n-th root (real branch). Even roots of negatives do not exist;
// odd roots carry the sign through.
inline std::optional<Rational> rational_nth_root(const Rational& x, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return x;
  bool negative = x < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  Rational a = rational_abs(x);
  auto rn = integer_nth_root(num(a), n);
  if (!rn) return std::nullopt;
  auto rd = integer_nth_root(den(a), n);
  if (!rd) return std::nullopt;
  Rational r(*rn, *rd);
  return negative ? Rational(-r) : r;
}

// "p/q" when q != 1, plain "p" otherwise.
inline std::string to_string(const Rational& x) {
  std::string s = num(x).str();
  if (!is_integer(x)) s += "/" + den(x).str();
  return s;
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  Integer n(text.substr(0, slash));
  Integer d(text.substr(slash + 1));
  if (d == 0) throw division_by_zero();
  return Rational(n, d);
}

}  // namespace nonarch
