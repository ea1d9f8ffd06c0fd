#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

// Dense univariate polynomial over Rational. coeff(i) is the coefficient of x^i;
// the coefficient vector carries no trailing zeros, so the zero polynomial is empty
// and degree() is -1 for it.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // Coefficients in ascending degree: from_coeffs({1, 2}) is 1 + 2x.
  static Poly from_coeffs(std::initializer_list<Rational> c) {
    return Poly(std::vector<Rational>(c));
  }
  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(std::size_t deg, const Rational& c) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
  }
  static Poly variable() { return monomial(1, Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }

  // Exact Euclidean division; remainder has degree < degree(divisor).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw division_by_zero();
    Poly rem(*this);
    if (rem.degree() < d.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
      Rational f = rem.leading() / d.leading();
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= f * d.c_[i];
      rem.trim();
    }
    return {Poly(std::move(q)), rem};
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

inline Integer int_content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline std::vector<Integer> int_pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  // prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b.
  const Integer lb = b.back();
  const int db = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - 1 - db + 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const std::size_t shift = a.size() - 1 - static_cast<std::size_t>(db);
    const Integer lead = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i)
      a[shift + static_cast<std::size_t>(i)] -= lead * b[static_cast<std::size_t>(i)];
    while (!a.empty() && a.back() == 0) a.pop_back();
    --e;
  }
  if (e > 0) {
    const Integer f = boost::multiprecision::pow(lb, static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace detail

// Clears denominators: returns integer coefficients and the scale s with
// s * poly = integer poly.
inline std::pair<std::vector<Integer>, Integer> clear_denominators(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(num(c) * (l / den(c)));
  return {std::move(out), l};
}

// Monic gcd over Q[x] via the subresultant PRS on cleared-denominator images,
// which keeps intermediate coefficient growth polynomial.
inline Poly poly_gcd(const Poly& pa, const Poly& pb) {
  if (pa.is_zero() && pb.is_zero()) return Poly();
  if (pa.is_zero() || pb.is_zero()) {
    const Poly& nz = pa.is_zero() ? pb : pa;
    Poly r = nz;
    r *= Rational(1) / nz.leading();
    return r;
  }
  auto a = clear_denominators(pa).first;
  auto b = clear_denominators(pb).first;
  if (a.size() < b.size()) std::swap(a, b);
  {
    Integer ca = detail::int_content(a), cb = detail::int_content(b);
    for (auto& c : a) c /= ca;
    for (auto& c : b) c /= cb;
  }
  Integer g = 1, h = 1;
  while (true) {
    int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
    auto r = detail::int_pseudo_rem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = {Integer(1)};
      break;
    }
    a = std::move(b);
    Integer divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
    for (auto& c : r) c /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      Integer gd = boost::multiprecision::pow(g, static_cast<unsigned>(delta));
      Integer hd = boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
      h = gd / hd;
    }
  }
  Integer c = detail::int_content(b);
  std::vector<Rational> out;
  out.reserve(b.size());
  for (const auto& k : b) out.emplace_back(k, c);
  Poly res{std::move(out)};
  res *= Rational(1) / res.leading();
  return res;
}

// Integer Cauchy bound: every real root of p has |root| <= bound. Zero for
// constants.
inline Integer root_scan_bound(const Poly& p) {
  if (p.degree() <= 0) return 0;
  auto ic = clear_denominators(p).first;
  Integer maxabs = 0;
  for (std::size_t i = 0; i + 1 < ic.size(); ++i)
    maxabs = std::max(maxabs, Integer(boost::multiprecision::abs(ic[i])));
  Integer lead = Integer(boost::multiprecision::abs(ic.back()));
  return 2 + maxabs / lead;
}

// All natural numbers n with p(n) = 0, found by scanning up to the Cauchy root
// bound. The bound is capped: a pathological coefficient ratio raises too_large
// instead of weakening the check.
inline std::vector<Integer> natural_roots(const Poly& p, const Integer& cap = Integer(1000000)) {
  if (p.is_zero())
    throw too_large("zero polynomial vanishes everywhere");
  std::vector<Integer> roots;
  if (p.degree() == 0) return roots;
  auto ic = clear_denominators(p).first;
  Integer bound = root_scan_bound(p);
  if (bound > cap)
    throw too_large("root scan bound " + bound.str() + " exceeds cap " + cap.str());
  for (Integer n = 0; n <= bound; ++n) {
    Integer acc = 0;
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * n + *it;
    if (acc == 0) roots.push_back(n);
  }
  return roots;
}

// Renders in conventional descending-degree form, e.g. "2*n^2 - n + 1".
inline std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool first = out.empty();
    if (!first) out += c > 0 ? " + " : " - ";
    Rational a = first ? c : rational_abs(c);
    if (i == 0) {
      out += to_string(a);
    } else {
      if (a == 1) {
        // coefficient 1 is left implicit
      } else if (a == -1) {
        out += "-";
      } else {
        out += to_string(a) + "*";
      }
      out += var;
      if (i != 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace nonarch
