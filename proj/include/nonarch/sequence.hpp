#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/polynomial.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

// p(n)/q(n) in canonical form: q monic, gcd(p, q) = 1 over Q[n].
class RationalFn {
 public:
  RationalFn() : q_(Poly::constant(Rational(1))) {}

  static RationalFn make(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw division_by_zero();
    RationalFn r;
    Poly g = poly_gcd(p, q);
    Poly pp = p, qq = q;
    if (g.degree() > 0) {
      pp = pp.divmod(g).first;
      qq = qq.divmod(g).first;
    }
    Rational lead = qq.leading();
    pp *= Rational(1) / lead;
    qq *= Rational(1) / lead;
    r.p_ = std::move(pp);
    r.q_ = std::move(qq);
    return r;
  }
  static RationalFn constant(const Rational& c) {
    return make(Poly::constant(c), Poly::constant(Rational(1)));
  }

  const Poly& p() const { return p_; }
  const Poly& q() const { return q_; }
  bool is_zero() const { return p_.is_zero(); }
  bool operator==(const RationalFn&) const = default;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return make(a.p_ * b.q_ + b.p_ * a.q_, a.q_ * b.q_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return make(a.p_ * b.q_ - b.p_ * a.q_, a.q_ * b.q_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return make(a.p_ * b.p_, a.q_ * b.q_);
  }
  RationalFn operator-() const {
    RationalFn r(*this);
    r.p_ = -r.p_;
    return r;
  }

  Rational eval(const Integer& n) const {
    Rational x(n);
    return p_.eval(x) / q_.eval(x);
  }

  // Limit as n -> infinity: finite rational, or +/- infinity by degree
  // comparison and leading signs (q is monic, hence eventually positive).
  struct Limit {
    enum Kind { finite, plus_infinity, minus_infinity } kind = finite;
    Rational value;  // meaningful when kind == finite
  };
  Limit limit() const {
    Limit l;
    if (p_.is_zero()) return l;
    int dp = p_.degree(), dq = q_.degree();
    if (dp < dq) return l;
    if (dp == dq) {
      l.value = p_.leading();
      return l;
    }
    l.kind = sign(p_.leading()) > 0 ? Limit::plus_infinity : Limit::minus_infinity;
    return l;
  }

  // Canonical coprime integer form (P, Q) with Q's leading coefficient > 0 and
  // gcd of the joint contents 1; P/Q = p/q.
  std::pair<std::vector<Integer>, std::vector<Integer>> integer_pair() const {
    Integer l = 1;
    for (const auto& c : p_.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    for (const auto& c : q_.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Integer> pi, qi;
    for (const auto& c : p_.coeffs()) pi.push_back(num(c) * (l / den(c)));
    for (const auto& c : q_.coeffs()) qi.push_back(num(c) * (l / den(c)));
    Integer g = 0;
    for (const auto& c : pi) g = boost::multiprecision::gcd(g, c);
    for (const auto& c : qi) g = boost::multiprecision::gcd(g, c);
    if (g > 1) {
      for (auto& c : pi) c /= g;
      for (auto& c : qi) c /= g;
    }
    return {std::move(pi), std::move(qi)};
  }

 private:
  Poly p_, q_;
};

struct SeqClass {
  enum Kind { null_seq, convergent, bounded_divergent, unbounded } kind = null_seq;
  std::optional<Rational> limit;  // present for null_seq (0) and convergent

  bool operator==(const SeqClass&) const = default;
};

inline std::string to_string(const SeqClass& c) {
  switch (c.kind) {
    case SeqClass::null_seq: return "null";
    case SeqClass::convergent: return "convergent to " + to_string(*c.limit);
    case SeqClass::bounded_divergent: return "bounded-divergent";
    case SeqClass::unbounded: return "unbounded";
  }
  return "?";
}

// Total sequence N -> Q given piecewise by congruence class: for n = r (mod m)
// the value is branch[r](n). Construction guarantees every branch denominator
// is nonzero on its whole residue class, and the modulus is minimal, so
// structural equality is equality of sequences.
class SymbolicSequence {
 public:
  SymbolicSequence() : modulus_(1), branches_{RationalFn()} {}

  static SymbolicSequence make(std::vector<RationalFn> branches) {
    if (branches.empty()) throw error("sequence needs at least one branch");
    SymbolicSequence s;
    s.modulus_ = static_cast<unsigned>(branches.size());
    s.branches_ = std::move(branches);
    s.check_defined();
    s.minimize_modulus();
    return s;
  }
  static SymbolicSequence embed(const Rational& x) {
    return make({RationalFn::constant(x)});
  }

  unsigned modulus() const { return modulus_; }
  const std::vector<RationalFn>& branches() const { return branches_; }
  const RationalFn& branch_for(std::uint64_t n) const { return branches_[n % modulus_]; }
  bool is_zero() const { return modulus_ == 1 && branches_[0].is_zero(); }
  bool operator==(const SymbolicSequence&) const = default;

  Rational eval(std::uint64_t n) const { return branch_for(n).eval(Integer(n)); }

  friend SymbolicSequence pointwise(const SymbolicSequence& a, const SymbolicSequence& b,
                                    RationalFn (*op)(const RationalFn&, const RationalFn&)) {
    unsigned m = std::lcm(a.modulus_, b.modulus_);
    std::vector<RationalFn> out;
    out.reserve(m);
    for (unsigned r = 0; r < m; ++r)
      out.push_back(op(a.branches_[r % a.modulus_], b.branches_[r % b.modulus_]));
    return make(std::move(out));
  }

  friend SymbolicSequence operator+(const SymbolicSequence& a, const SymbolicSequence& b) {
    return pointwise(a, b, [](const RationalFn& x, const RationalFn& y) { return x + y; });
  }
  friend SymbolicSequence operator-(const SymbolicSequence& a, const SymbolicSequence& b) {
    return pointwise(a, b, [](const RationalFn& x, const RationalFn& y) { return x - y; });
  }
  friend SymbolicSequence operator*(const SymbolicSequence& a, const SymbolicSequence& b) {
    return pointwise(a, b, [](const RationalFn& x, const RationalFn& y) { return x * y; });
  }
  SymbolicSequence operator-() const {
    SymbolicSequence r(*this);
    for (auto& b : r.branches_) b = -b;
    return r;
  }

  // n |-> 1/s(n) when s never vanishes; otherwise reports the least index where
  // it does -- the paper's observation that 1/eps may not even be defined.
  SymbolicSequence pointwise_invert() const {
    if (auto n0 = least_zero()) throw undefined_at(*n0);
    std::vector<RationalFn> out;
    out.reserve(modulus_);
    for (const auto& b : branches_) out.push_back(RationalFn::make(b.q(), b.p()));
    return make(std::move(out));
  }

  // Least n with s(n) = 0, if any.
  std::optional<std::uint64_t> least_zero() const {
    std::optional<std::uint64_t> best;
    for (unsigned r = 0; r < modulus_; ++r) {
      const auto& b = branches_[r];
      if (b.is_zero()) {
        consider(best, r);
        continue;
      }
      for (const auto& root : natural_roots(b.p()))
        if (root % modulus_ == r) consider(best, static_cast<std::uint64_t>(root));
    }
    return best;
  }

  SeqClass classify() const {
    std::vector<RationalFn::Limit> limits;
    limits.reserve(modulus_);
    for (const auto& b : branches_) limits.push_back(b.limit());
    for (const auto& l : limits)
      if (l.kind != RationalFn::Limit::finite) return {SeqClass::unbounded, std::nullopt};
    bool all_equal = true;
    for (const auto& l : limits)
      if (l.value != limits.front().value) all_equal = false;
    if (!all_equal) return {SeqClass::bounded_divergent, std::nullopt};
    const Rational& v = limits.front().value;
    if (v == 0) return {SeqClass::null_seq, Rational(0)};
    return {SeqClass::convergent, v};
  }

 private:
  unsigned modulus_;
  std::vector<RationalFn> branches_;

  static void consider(std::optional<std::uint64_t>& best, std::uint64_t n) {
    if (!best || n < *best) best = n;
  }

  void check_defined() const {
    std::optional<std::uint64_t> bad;
    for (unsigned r = 0; r < modulus_; ++r) {
      for (const auto& root : natural_roots(branches_[r].q()))
        if (root % modulus_ == r) consider(bad, static_cast<std::uint64_t>(root));
    }
    if (bad) throw undefined_at(*bad);
  }

  void minimize_modulus() {
    for (unsigned d = 1; d < modulus_; ++d) {
      if (modulus_ % d != 0) continue;
      bool ok = true;
      for (unsigned r = 0; r < modulus_ && ok; ++r)
        if (!(branches_[r] == branches_[r % d])) ok = false;
      if (ok) {
        branches_.resize(d);
        modulus_ = d;
        return;
      }
    }
  }
};

inline SeqClass classify_seq(const SymbolicSequence& s) { return s.classify(); }

// Canonical text form: "ratfn(p, q)" for modulus 1, "alt(m){r: ...; ...}" otherwise.
inline std::string to_string(const RationalFn& f) {
  auto [pi, qi] = f.integer_pair();
  auto poly_text = [](const std::vector<Integer>& v) {
    std::vector<Rational> c(v.begin(), v.end());
    return to_string(Poly(std::move(c)), "n");
  };
  return "ratfn(" + poly_text(pi) + ", " + poly_text(qi) + ")";
}

inline std::string to_string(const SymbolicSequence& s) {
  if (s.modulus() == 1) return to_string(s.branches()[0]);
  std::string out = "alt(" + std::to_string(s.modulus()) + "){";
  for (unsigned r = 0; r < s.modulus(); ++r) {
    if (r) out += "; ";
    out += std::to_string(r) + ": " + to_string(s.branches()[r]);
  }
  return out + "}";
}

}  // namespace nonarch
