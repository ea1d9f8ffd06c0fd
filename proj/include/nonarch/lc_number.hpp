#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nonarch/errors.hpp"
#include "nonarch/polynomial.hpp"
#include "nonarch/puiseux.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

enum class Ordering { less, equal, greater };

enum class Classification { zero, infinitesimal, appreciable, infinite };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::zero: return "zero";
    case Classification::infinitesimal: return "infinitesimal";
    case Classification::appreciable: return "appreciable";
    case Classification::infinite: return "infinite";
  }
  return "?";
}

struct not_representable : error {
  explicit not_representable(const std::string& what) : error(what) {}
};

// Element of the fraction field of Puiseux polynomials in one positive
// infinitesimal eps: a computable non-Archimedean linearly ordered field.
//
// Canonical form invariants:
//   - den != 0, den's least exponent is 0 with coefficient 1;
//   - after rescaling exponents to integers, num and den are coprime in Q[t];
// which makes equality of values structural equality, and the sign of a value
// the sign of its numerator's least-exponent coefficient.
class LCNumber {
 public:
  LCNumber() : den_(PuiseuxPoly::one()) {}

  static LCNumber make(const PuiseuxPoly& num, const PuiseuxPoly& den) {
    if (den.is_zero()) throw division_by_zero();
    LCNumber r;
    canonicalize(num, den, r.num_, r.den_);
    return r;
  }
  static LCNumber from_poly(const PuiseuxPoly& p) { return make(p, PuiseuxPoly::one()); }
  static LCNumber from_rational(const Rational& c) {
    return from_poly(PuiseuxPoly::constant(c));
  }
  static LCNumber zero() { return LCNumber(); }
  static LCNumber one() { return from_rational(Rational(1)); }
  static LCNumber eps() { return from_poly(PuiseuxPoly::eps()); }
  static LCNumber monomial(const Rational& exponent, const Rational& coeff) {
    return from_poly(PuiseuxPoly::monomial(exponent, coeff));
  }

  const PuiseuxPoly& num() const { return num_; }
  const PuiseuxPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const LCNumber&) const = default;

  friend LCNumber operator+(const LCNumber& a, const LCNumber& b) {
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LCNumber operator-(const LCNumber& a, const LCNumber& b) {
    return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LCNumber operator*(const LCNumber& a, const LCNumber& b) {
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LCNumber operator/(const LCNumber& a, const LCNumber& b) {
    if (b.is_zero()) throw division_by_zero();
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }
  LCNumber operator-() const {
    LCNumber r(*this);
    r.num_ = -r.num_;
    return r;
  }

 private:
  PuiseuxPoly num_;
  PuiseuxPoly den_;

  static void canonicalize(const PuiseuxPoly& n, const PuiseuxPoly& d, PuiseuxPoly& out_num,
                           PuiseuxPoly& out_den) {
    if (n.is_zero()) {
      out_num = PuiseuxPoly::zero();
      out_den = PuiseuxPoly::one();
      return;
    }
    Integer scale = boost::multiprecision::lcm(n.exponent_scale(), d.exponent_scale());
    Integer shift_n = 0, shift_d = 0;
    Poly pn = n.to_dense(scale, shift_n);
    Poly pd = d.to_dense(scale, shift_d);
    Poly g = poly_gcd(pn, pd);
    if (g.degree() > 0) {
      pn = pn.divmod(g).first;
      pd = pd.divmod(g).first;
    }
    Rational unit = pd.coeff(0);
    pn *= Rational(1) / unit;
    pd *= Rational(1) / unit;
    out_num = PuiseuxPoly::from_dense(pn, scale, shift_n - shift_d);
    out_den = PuiseuxPoly::from_dense(pd, scale, Integer(0));
  }
};

// Sign of a value: den is 1 + (positive-valuation terms), hence positive as a
// germ at 0+, so the numerator's least-exponent coefficient decides.
inline int sign(const LCNumber& a) { return sign(a.num().leading_coeff()); }

inline Ordering compare(const LCNumber& a, const LCNumber& b) {
  int s = sign(a - b);
  return s < 0 ? Ordering::less : s > 0 ? Ordering::greater : Ordering::equal;
}

inline bool operator<(const LCNumber& a, const LCNumber& b) { return sign(a - b) < 0; }
inline bool operator>(const LCNumber& a, const LCNumber& b) { return sign(a - b) > 0; }
inline bool operator<=(const LCNumber& a, const LCNumber& b) { return sign(a - b) <= 0; }
inline bool operator>=(const LCNumber& a, const LCNumber& b) { return sign(a - b) >= 0; }

inline LCNumber abs(const LCNumber& a) { return sign(a) < 0 ? -a : a; }

// Least exponent of the canonical numerator; +infinity (nullopt) for 0.
// Satisfies valuation(a*b) = valuation(a) + valuation(b).
inline std::optional<Rational> valuation(const LCNumber& a) { return a.num().min_exponent(); }

inline Classification classify(const LCNumber& a) {
  auto v = valuation(a);
  if (!v) return Classification::zero;
  if (*v > 0) return Classification::infinitesimal;
  if (*v == 0) return Classification::appreciable;
  return Classification::infinite;
}

inline bool in_monad(const LCNumber& a) {
  auto c = classify(a);
  return c == Classification::zero || c == Classification::infinitesimal;
}

inline bool is_finite(const LCNumber& a) { return classify(a) != Classification::infinite; }

// Polynomial p with valuation(a - p) > order, by geometric expansion of 1/den.
// Terminates because den - 1 has strictly positive valuation.
inline PuiseuxPoly truncated_series(const LCNumber& a, const Rational& order) {
  if (a.is_zero()) return PuiseuxPoly::zero();
  PuiseuxPoly neg_d = -(a.den() - PuiseuxPoly::one());
  PuiseuxPoly acc = PuiseuxPoly::zero();
  PuiseuxPoly term = a.num().truncated(order);
  while (!term.is_zero()) {
    acc = acc + term;
    term = (term * neg_d).truncated(order);
  }
  return acc;
}

// The unique rational r with a - r infinitesimal; requires a finite.
// Independent of truncated_series: reads the exponent-0 coefficient of the
// canonical numerator directly.
inline Rational standard_part(const LCNumber& a) {
  auto v = valuation(a);
  if (!v) return Rational(0);
  if (*v > 0) return Rational(0);
  if (*v < 0) throw not_finite();
  return a.num().leading_coeff();
}

// (q, c) iff a = c * eps^q with c != 0; absent for 0 and multi-term values.
inline std::optional<std::pair<Rational, Rational>> is_monomial(const LCNumber& a) {
  if (a.num().term_count() == 1 && a.den() == PuiseuxPoly::one()) {
    const auto& t = a.num().terms().front();
    return std::make_pair(t.exponent, t.coeff);
  }
  return std::nullopt;
}

// The rational value of a, if a is a scalar (0 included).
inline std::optional<Rational> as_rational(const LCNumber& a) {
  if (a.is_zero()) return Rational(0);
  auto m = is_monomial(a);
  if (m && m->first == 0) return m->second;
  return std::nullopt;
}

// True iff the scalar lines Q*a and Q*b coincide, equivalently a/b is a nonzero
// scalar, equivalently the lines intersect outside {0}.
inline bool same_line(const LCNumber& a, const LCNumber& b) {
  if (a.is_zero() || b.is_zero()) throw zero_argument();
  auto m = is_monomial(a / b);
  return m.has_value() && m->first == 0;
}

// a^e for rational e. Integer exponents work on any value; fractional p/q needs
// a monomial whose coefficient has an exact rational q-th root.
inline LCNumber pow(const LCNumber& a, const Rational& e) {
  if (e == 0) return LCNumber::one();
  if (is_integer(e)) {
    if (a.is_zero()) {
      if (e < 0) throw division_by_zero();
      return LCNumber::zero();
    }
    Integer n = num(e);
    bool invert = n < 0;
    if (invert) n = -n;
    LCNumber acc = LCNumber::one();
    LCNumber base = a;
    while (n > 0) {
      if ((n & 1) != 0) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return invert ? LCNumber::one() / acc : acc;
  }
  if (a.is_zero()) {
    if (e < 0) throw division_by_zero();
    return LCNumber::zero();
  }
  auto m = is_monomial(a);
  if (!m)
    throw not_representable("fractional power of a non-monomial value");
  unsigned q = static_cast<unsigned>(den(e));
  auto root = rational_nth_root(m->second, q);
  if (!root)
    throw not_representable("coefficient " + to_string(m->second) + " has no exact rational " +
                            std::to_string(q) + "-th root");
  return LCNumber::monomial(m->first * e, rational_pow(*root, num(e)));
}

// Canonical text form, parsed back bit-exactly by parse_lc.
inline std::string to_string(const LCNumber& a) {
  if (a.den() == PuiseuxPoly::one()) return to_string(a.num());
  return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

}  // namespace nonarch
