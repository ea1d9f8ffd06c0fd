#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/polynomial.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

// Finite formal sum of monomials c * eps^q with rational q and rational c.
// Terms are kept sorted by strictly increasing exponent with no zero
// coefficients; the empty term list is 0.
class PuiseuxPoly {
 public:
  struct Term {
    Rational exponent;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  PuiseuxPoly() = default;

  static PuiseuxPoly zero() { return PuiseuxPoly(); }
  static PuiseuxPoly constant(const Rational& c) { return monomial(Rational(0), c); }
  static PuiseuxPoly one() { return constant(Rational(1)); }
  static PuiseuxPoly eps() { return monomial(Rational(1), Rational(1)); }
  static PuiseuxPoly monomial(const Rational& exponent, const Rational& coeff) {
    PuiseuxPoly p;
    if (coeff != 0) p.terms_.push_back({exponent, coeff});
    return p;
  }
  static PuiseuxPoly from_map(const std::map<Rational, Rational>& m) {
    PuiseuxPoly p;
    for (const auto& [e, c] : m)
      if (c != 0) p.terms_.push_back({e, c});
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Least exponent; absent for 0.
  std::optional<Rational> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
  }
  // Coefficient of the least-exponent term; 0 for the zero value.
  Rational leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.front().coeff; }

  bool operator==(const PuiseuxPoly&) const = default;

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    std::map<Rational, Rational> acc;
    for (const auto& t : a.terms_) acc[t.exponent] += t.coeff;
    for (const auto& t : b.terms_) acc[t.exponent] += t.coeff;
    return from_map(acc);
  }
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }
  PuiseuxPoly operator-() const {
    PuiseuxPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    std::map<Rational, Rational> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) acc[ta.exponent + tb.exponent] += ta.coeff * tb.coeff;
    return from_map(acc);
  }

  // Multiply by the monomial c * eps^q.
  PuiseuxPoly scaled(const Rational& q, const Rational& c) const {
    PuiseuxPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exponent + q, t.coeff * c});
    return r;
  }

  // Drop every term with exponent > order.
  PuiseuxPoly truncated(const Rational& order) const {
    PuiseuxPoly r;
    for (const auto& t : terms_) {
      if (t.exponent > order) break;
      r.terms_.push_back(t);
    }
    return r;
  }

  // lcm of the exponent denominators (1 for the zero value).
  Integer exponent_scale() const {
    Integer l = 1;
    for (const auto& t : terms_) l = boost::multiprecision::lcm(l, den(t.exponent));
    return l;
  }

  // View as a dense polynomial in t = eps^(1/scale):  *this = t^shift * poly(t),
  // where shift = scale * min_exponent. Requires a nonzero value and that scale
  // clears every exponent denominator.
  Poly to_dense(const Integer& scale, Integer& shift) const {
    shift = 0;
    if (terms_.empty()) return Poly();
    shift = num(terms_.front().exponent * scale);
    std::size_t size =
        static_cast<std::size_t>(num(terms_.back().exponent * scale) - shift) + 1;
    std::vector<Rational> c(size);
    for (const auto& t : terms_) {
      Rational idx = t.exponent * scale;
      c[static_cast<std::size_t>(num(idx) - shift)] = t.coeff;
    }
    return Poly(std::move(c));
  }

  // Inverse of to_dense: terms (i + shift)/scale for each dense coefficient.
  static PuiseuxPoly from_dense(const Poly& p, const Integer& scale, const Integer& shift) {
    PuiseuxPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      const Rational& c = p.coeffs()[i];
      if (c != 0) r.terms_.push_back({Rational(Integer(i) + shift, scale), c});
    }
    return r;
  }

 private:
  std::vector<Term> terms_;
};

// Canonical text form: constant terms plain, others "c*eps^(q)", joined with
// signs folded, e.g. "3 - 1/2*eps^(1) + eps^(3/2)" prints as
// "3 - 1/2*eps^(1) + 1*eps^(3/2)".
inline std::string to_string(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    bool first = out.empty();
    Rational c = t.coeff;
    if (!first) {
      out += c > 0 ? " + " : " - ";
      c = rational_abs(c);
    }
    if (t.exponent == 0) {
      out += to_string(c);
    } else {
      out += to_string(c) + "*eps^(" + to_string(t.exponent) + ")";
    }
  }
  return out;
}

}  // namespace nonarch
