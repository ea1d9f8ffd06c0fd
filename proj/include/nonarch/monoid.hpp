#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/lc_number.hpp"
#include "nonarch/sequence.hpp"

namespace nonarch {

struct NatValue {
  Integer v;
  bool operator==(const NatValue&) const = default;
};

struct LexValue {
  std::vector<Integer> v;
  bool operator==(const LexValue&) const = default;
};

// Element of one of the registered carriers. The instance an element is used
// with must match its alternative (and arity, for tuples); cross-instance use
// is rejected by the instance itself.
using MonoidElement = std::variant<NatValue, LexValue, LCNumber, SymbolicSequence>;

inline std::string to_string(const MonoidElement& e) {
  struct V {
    std::string operator()(const NatValue& n) const { return n.v.str(); }
    std::string operator()(const LexValue& l) const {
      std::string s = "(";
      for (std::size_t i = 0; i < l.v.size(); ++i) {
        if (i) s += ",";
        s += l.v[i].str();
      }
      return s + ")";
    }
    std::string operator()(const LCNumber& x) const { return to_string(x); }
    std::string operator()(const SymbolicSequence& s) const { return to_string(s); }
  };
  return std::visit(V{}, e);
}

// Exact decision of "n*x <= y for every natural n".
struct OrbitDecision {
  bool bounded = false;
  std::string reason;        // certificate, when bounded
  std::uint64_t escapes_at = 0;  // least escaping n, when not bounded
};

// A partially or linearly ordered monoid (E, op, <=) together with the
// exactness oracles the audits rely on. Instances are immutable and pure.
class MonoidInstance {
 public:
  virtual ~MonoidInstance() = default;

  virtual std::string name() const = 0;
  virtual MonoidElement neutral() const = 0;
  virtual MonoidElement op(const MonoidElement& a, const MonoidElement& b) const = 0;
  virtual bool equal(const MonoidElement& a, const MonoidElement& b) const = 0;

  // Order. linear() instances implement compare(); partial orders only leq().
  virtual bool linear() const = 0;
  virtual Ordering compare(const MonoidElement& a, const MonoidElement& b) const = 0;
  virtual bool leq(const MonoidElement& a, const MonoidElement& b) const {
    Ordering c = compare(a, b);
    return c == Ordering::less || c == Ordering::equal;
  }
  bool is_nonneg(const MonoidElement& x) const { return leq(neutral(), x); }

  // Whether Zu makes sense (ambient group) or the family degrades to Nu.
  virtual bool is_group() const = 0;

  // Oracle realizing (4.5): an element dominating every multiple n*u. Present
  // exactly when the instance is non-Archimedean in the (4.2) sense.
  virtual bool has_dominate() const { return false; }
  virtual MonoidElement dominate(const MonoidElement&) const {
    throw oracle_missing("instance '" + name() + "' has no dominate oracle");
  }
  // Reason string recorded with dominate-based certificates.
  virtual std::string dominate_reason() const { return ""; }

  // Cyclic membership: the integer n with y = n*u, if one exists (n >= 0 when
  // the instance is not a group).
  virtual std::optional<Integer> solve(const MonoidElement& y, const MonoidElement& u) const = 0;

  // Some element strictly above x. hint is the positive step the Theorem 4.1
  // construction uses; translation-compatible instances return x op hint.
  virtual MonoidElement strictly_above(const MonoidElement& x, const MonoidElement& hint) const {
    return op(x, hint);
  }

  // Exact decision of (4.2) for a fixed u: "for all x exists n: n*u >= x".
  virtual std::optional<bool> decide_42_forall(const MonoidElement& u) const = 0;
  // Exact decision of "exists n: n*u >= x" for one x.
  virtual std::optional<bool> decide_42_single(const MonoidElement& u,
                                               const MonoidElement& x) const = 0;
  // Exact decision of a bounded orbit, with certificate or escape index.
  virtual std::optional<OrbitDecision> decide_orbit(const MonoidElement& x,
                                                    const MonoidElement& y) const = 0;
  // Exact instance-wide status of (4.4): only x = 0 has a bounded orbit.
  virtual std::optional<bool> forall_44() const = 0;

  // Scalar ratio c with a = c*b, when the carrier supports exact detection.
  // nullopt means "provably no such scalar" for deciders; instances that cannot
  // decide return ratio_undecidable.
  virtual std::optional<Rational> ratio(const MonoidElement& a, const MonoidElement& b) const = 0;
  virtual bool ratio_decidable() const { return true; }

  // Test/audit support: pseudo-random elements and a fixed list of small
  // distinguished elements (searches visit distinguished ones first).
  virtual MonoidElement sample(std::mt19937_64& rng) const = 0;
  virtual MonoidElement sample_nonneg(std::mt19937_64& rng) const = 0;
  virtual std::vector<MonoidElement> distinguished() const = 0;

 protected:
  [[noreturn]] void reject(const char* what) const {
    throw error("element does not belong to instance '" + name() + "': " + what);
  }
};

// --- registered carriers -----------------------------------------------------

class NatAddInstance final : public MonoidInstance {
 public:
  std::string name() const override { return "nat-add"; }
  MonoidElement neutral() const override { return NatValue{0}; }
  MonoidElement op(const MonoidElement& a, const MonoidElement& b) const override {
    return NatValue{get(a).v + get(b).v};
  }
  bool equal(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a).v == get(b).v;
  }
  bool linear() const override { return true; }
  Ordering compare(const MonoidElement& a, const MonoidElement& b) const override {
    const Integer &x = get(a).v, &y = get(b).v;
    return x < y ? Ordering::less : x > y ? Ordering::greater : Ordering::equal;
  }
  bool is_group() const override { return false; }
  std::optional<Integer> solve(const MonoidElement& ye, const MonoidElement& ue) const override {
    const Integer &y = get(ye).v, &u = get(ue).v;
    if (u == 0) return y == 0 ? std::optional<Integer>(0) : std::nullopt;
    if (y % u != 0) return std::nullopt;
    return Integer(y / u);
  }
  std::optional<bool> decide_42_forall(const MonoidElement& u) const override {
    return get(u).v > 0;
  }
  std::optional<bool> decide_42_single(const MonoidElement& u,
                                       const MonoidElement& x) const override {
    return get(u).v > 0 || get(x).v == 0;
  }
  std::optional<OrbitDecision> decide_orbit(const MonoidElement& xe,
                                            const MonoidElement& ye) const override {
    const Integer &x = get(xe).v, &y = get(ye).v;
    OrbitDecision d;
    if (x == 0) {
      d.bounded = true;
      d.reason = "x = 0: every multiple is the neutral element";
      return d;
    }
    d.bounded = false;
    d.escapes_at = static_cast<std::uint64_t>(y / x + 1);
    return d;
  }
  std::optional<bool> forall_44() const override { return true; }
  std::optional<Rational> ratio(const MonoidElement& a, const MonoidElement& b) const override {
    const Integer &x = get(a).v, &y = get(b).v;
    if (y == 0) return std::nullopt;
    return Rational(x, y);
  }
  MonoidElement sample(std::mt19937_64& rng) const override {
    return NatValue{Integer(rng() % 1000)};
  }
  MonoidElement sample_nonneg(std::mt19937_64& rng) const override { return sample(rng); }
  std::vector<MonoidElement> distinguished() const override {
    return {NatValue{0}, NatValue{1}, NatValue{2}, NatValue{10}};
  }

 private:
  const NatValue& get(const MonoidElement& e) const {
    if (const auto* n = std::get_if<NatValue>(&e)) return *n;
    reject("expected a natural number");
  }
};

class LexInstance final : public MonoidInstance {
 public:
  explicit LexInstance(std::size_t arity) : arity_(arity) {}

  std::string name() const override { return "lex-z" + std::to_string(arity_); }
  MonoidElement neutral() const override {
    return LexValue{std::vector<Integer>(arity_)};
  }
  MonoidElement op(const MonoidElement& a, const MonoidElement& b) const override {
    const auto &x = get(a).v, &y = get(b).v;
    std::vector<Integer> r(arity_);
    for (std::size_t i = 0; i < arity_; ++i) r[i] = x[i] + y[i];
    return LexValue{std::move(r)};
  }
  bool equal(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a).v == get(b).v;
  }
  bool linear() const override { return true; }
  Ordering compare(const MonoidElement& a, const MonoidElement& b) const override {
    const auto &x = get(a).v, &y = get(b).v;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (x[i] < y[i]) return Ordering::less;
      if (x[i] > y[i]) return Ordering::greater;
    }
    return Ordering::equal;
  }
  bool is_group() const override { return true; }
  std::optional<Integer> solve(const MonoidElement& ye, const MonoidElement& ue) const override {
    const auto &y = get(ye).v, &u = get(ue).v;
    std::size_t i = 0;
    while (i < arity_ && u[i] == 0) ++i;
    if (i == arity_) {
      for (const auto& c : y)
        if (c != 0) return std::nullopt;
      return Integer(0);
    }
    if (y[i] % u[i] != 0) return std::nullopt;
    Integer n = y[i] / u[i];
    for (std::size_t j = 0; j < arity_; ++j)
      if (y[j] != n * u[j]) return std::nullopt;
    return n;
  }
  std::optional<bool> decide_42_forall(const MonoidElement& u) const override {
    return get(u).v[0] > 0;
  }
  std::optional<bool> decide_42_single(const MonoidElement& ue,
                                       const MonoidElement& xe) const override {
    if (!is_nonneg(xe) || equal(xe, neutral())) return true;  // n = 0 or n = anything
    const auto& u = get(ue).v;
    const auto& x = get(xe).v;
    auto fu = first_nonzero(u);
    if (!fu) return false;
    auto fx = first_nonzero(x);
    return !(fx && *fx < *fu);
  }
  std::optional<OrbitDecision> decide_orbit(const MonoidElement& xe,
                                            const MonoidElement& ye) const override {
    const auto& x = get(xe).v;
    OrbitDecision d;
    auto fx = first_nonzero(x);
    if (!fx) {
      d.bounded = true;
      d.reason = "x = 0: every multiple is the neutral element";
      return d;
    }
    const auto& y = get(ye).v;
    auto fy = first_nonzero(y);
    if (fy && *fy < *fx) {
      d.bounded = true;
      d.reason = "lexicographic prefix: coordinate " + std::to_string(*fy) +
                 " of y is positive while every multiple of x is 0 there";
      return d;
    }
    // Escapes; least n with n*x > y found among the two divisor candidates.
    Integer q = (!fy || *fy > *fx) ? Integer(0) : Integer(y[*fx] / x[*fx]);
    for (Integer n = q < 1 ? Integer(1) : q;; ++n) {
      std::vector<Integer> nx(arity_);
      for (std::size_t i = 0; i < arity_; ++i) nx[i] = n * x[i];
      if (compare(LexValue{nx}, ye) == Ordering::greater) {
        d.bounded = false;
        d.escapes_at = static_cast<std::uint64_t>(n);
        return d;
      }
    }
  }
  std::optional<bool> forall_44() const override { return arity_ == 1; }
  std::optional<Rational> ratio(const MonoidElement& a, const MonoidElement& b) const override {
    const auto &x = get(a).v, &y = get(b).v;
    // x = c*y needs proportional coordinates (vanishing minors) and a
    // consistent scalar.
    std::optional<Rational> c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (y[i] == 0) {
        if (x[i] != 0) return std::nullopt;
        continue;
      }
      Rational ci(x[i], y[i]);
      if (c && *c != ci) return std::nullopt;
      c = ci;
    }
    return c;  // nullopt when y = 0
  }
  MonoidElement sample(std::mt19937_64& rng) const override {
    std::vector<Integer> v(arity_);
    for (auto& c : v) c = Integer(static_cast<std::int64_t>(rng() % 11) - 5);
    return LexValue{std::move(v)};
  }
  MonoidElement sample_nonneg(std::mt19937_64& rng) const override {
    MonoidElement e = sample(rng);
    if (is_nonneg(e)) return e;
    auto v = std::get<LexValue>(e).v;
    for (auto& c : v) c = -c;
    return LexValue{std::move(v)};
  }
  std::vector<MonoidElement> distinguished() const override {
    std::vector<MonoidElement> out{neutral()};
    for (std::size_t i = 0; i < arity_; ++i) {
      std::vector<Integer> v(arity_);
      v[i] = 1;
      out.push_back(LexValue{std::move(v)});
    }
    std::vector<Integer> ones(arity_, Integer(1));
    out.push_back(LexValue{std::move(ones)});
    return out;
  }

 private:
  std::size_t arity_;

  const LexValue& get(const MonoidElement& e) const {
    const auto* l = std::get_if<LexValue>(&e);
    if (!l || l->v.size() != arity_) reject("expected a tuple of matching arity");
    return *l;
  }
  static std::optional<std::size_t> first_nonzero(const std::vector<Integer>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return std::nullopt;
  }
};

class LCAddInstance final : public MonoidInstance {
 public:
  std::string name() const override { return "lc-add"; }
  MonoidElement neutral() const override { return LCNumber::zero(); }
  MonoidElement op(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a) + get(b);
  }
  bool equal(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a) == get(b);
  }
  bool linear() const override { return true; }
  Ordering compare(const MonoidElement& a, const MonoidElement& b) const override {
    return nonarch::compare(get(a), get(b));
  }
  bool is_group() const override { return true; }
  bool has_dominate() const override { return true; }
  // (1 + |u|)/eps: its valuation is min(0, val(u)) - 1 < val(u) = val(n*u), so
  // it exceeds every multiple of u.
  MonoidElement dominate(const MonoidElement& u) const override {
    return (LCNumber::one() + abs(get(u))) / LCNumber::eps();
  }
  std::string dominate_reason() const override {
    return "valuation drop: val((1+|u|)/eps) < val(u)";
  }
  std::optional<Integer> solve(const MonoidElement& ye, const MonoidElement& ue) const override {
    const LCNumber &y = get(ye), &u = get(ue);
    if (u.is_zero()) return y.is_zero() ? std::optional<Integer>(0) : std::nullopt;
    auto c = as_rational(y / u);
    if (!c || !is_integer(*c)) return std::nullopt;
    return num(*c);
  }
  std::optional<bool> decide_42_forall(const MonoidElement&) const override {
    return false;  // (1+|u|)/eps always escapes every multiple of u
  }
  std::optional<bool> decide_42_single(const MonoidElement& ue,
                                       const MonoidElement& xe) const override {
    const LCNumber &u = get(ue), &x = get(xe);
    if (sign(x) <= 0) return true;
    if (u.is_zero()) return false;
    return *valuation(u) <= *valuation(x);
  }
  std::optional<OrbitDecision> decide_orbit(const MonoidElement& xe,
                                            const MonoidElement& ye) const override {
    const LCNumber &x = get(xe), &y = get(ye);
    OrbitDecision d;
    if (x.is_zero()) {
      d.bounded = true;
      d.reason = "x = 0: every multiple is 0";
      return d;
    }
    if (y.is_zero() || *valuation(x) < *valuation(y)) {
      d.escapes_at = 1;
      return d;
    }
    if (*valuation(x) > *valuation(y)) {
      d.bounded = true;
      d.reason = "valuation: val(x) = " + to_string(*valuation(x)) + " > val(y) = " +
                 to_string(*valuation(y)) + ", so n*x < y for every n";
      return d;
    }
    Integer q = floor_to_integer(y.num().leading_coeff() / x.num().leading_coeff());
    for (Integer n = q < 1 ? Integer(1) : q;; ++n) {
      if (LCNumber::from_rational(Rational(n)) * x > y) {
        d.escapes_at = static_cast<std::uint64_t>(n);
        return d;
      }
    }
  }
  std::optional<bool> forall_44() const override { return false; }  // eps vs 1
  std::optional<Rational> ratio(const MonoidElement& a, const MonoidElement& b) const override {
    const LCNumber &x = get(a), &y = get(b);
    if (y.is_zero()) return std::nullopt;
    return as_rational(x / y);
  }
  MonoidElement sample(std::mt19937_64& rng) const override {
    auto coeff = [&rng]() {
      return Rational(static_cast<std::int64_t>(rng() % 19) - 9,
                      static_cast<std::int64_t>(rng() % 5) + 1);
    };
    auto expo = [&rng]() {
      return Rational(static_cast<std::int64_t>(rng() % 9) - 4,
                      static_cast<std::int64_t>(rng() % 2) + 1);
    };
    std::map<Rational, Rational> n, d;
    std::size_t nt = rng() % 3 + 1, dt = rng() % 2;
    for (std::size_t i = 0; i < nt; ++i) n[expo()] += coeff();
    d[Rational(0)] = 1;
    for (std::size_t i = 0; i < dt; ++i) d[expo()] += coeff();
    PuiseuxPoly den = PuiseuxPoly::from_map(d);
    if (den.is_zero()) den = PuiseuxPoly::one();
    return LCNumber::make(PuiseuxPoly::from_map(n), den);
  }
  MonoidElement sample_nonneg(std::mt19937_64& rng) const override {
    LCNumber x = get(sample(rng));
    return sign(x) < 0 ? -x : x;
  }
  std::vector<MonoidElement> distinguished() const override {
    LCNumber e = LCNumber::eps();
    return {LCNumber::zero(), e,      LCNumber::one(),        e * e,
            LCNumber::one() / e, e + e * e, LCNumber::from_rational(2)};
  }

 private:
  const LCNumber& get(const MonoidElement& e) const {
    if (const auto* x = std::get_if<LCNumber>(&e)) return *x;
    reject("expected a field element");
  }
};

class SeqAddInstance final : public MonoidInstance {
 public:
  std::string name() const override { return "seq-add-pointwise"; }
  MonoidElement neutral() const override { return SymbolicSequence::embed(0); }
  MonoidElement op(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a) + get(b);
  }
  bool equal(const MonoidElement& a, const MonoidElement& b) const override {
    return get(a) == get(b);
  }
  bool linear() const override { return false; }
  Ordering compare(const MonoidElement&, const MonoidElement&) const override {
    throw partial_order_only();
  }
  // a <= b pointwise, decided exactly: each branch of b - a is checked on its
  // residue class up to the joint root bound, then by eventual leading sign.
  bool leq(const MonoidElement& a, const MonoidElement& b) const override {
    SymbolicSequence d = get(b) - get(a);
    for (unsigned r = 0; r < d.modulus(); ++r)
      if (!branch_nonneg(d.branches()[r], r, d.modulus())) return false;
    return true;
  }
  bool is_group() const override { return true; }
  std::optional<Integer> solve(const MonoidElement& ye, const MonoidElement& ue) const override {
    const SymbolicSequence &y = get(ye), &u = get(ue);
    if (u.is_zero()) return y.is_zero() ? std::optional<Integer>(0) : std::nullopt;
    std::uint64_t n0 = first_support(u);
    Rational c = y.eval(n0) / u.eval(n0);
    if (!is_integer(c)) return std::nullopt;
    SymbolicSequence cu = SymbolicSequence::embed(c) * u;
    if (!(cu == y)) return std::nullopt;
    return num(c);
  }
  std::optional<bool> decide_42_forall(const MonoidElement&) const override {
    return std::nullopt;  // (4.2) presumes a linear order
  }
  std::optional<bool> decide_42_single(const MonoidElement&,
                                       const MonoidElement&) const override {
    return std::nullopt;
  }
  std::optional<OrbitDecision> decide_orbit(const MonoidElement& xe,
                                            const MonoidElement& ye) const override {
    const SymbolicSequence &x = get(xe), &y = get(ye);
    OrbitDecision d;
    if (x.is_zero()) {
      d.bounded = true;
      d.reason = "x = 0: every multiple is the zero sequence";
      return d;
    }
    std::uint64_t n0 = first_support(x);  // x >= 0 pointwise, so x(n0) > 0
    Integer n = floor_to_integer(y.eval(n0) / x.eval(n0)) + 1;
    if (n < 1) n = 1;
    d.escapes_at = static_cast<std::uint64_t>(n);
    return d;
  }
  std::optional<bool> forall_44() const override { return true; }
  std::optional<Rational> ratio(const MonoidElement& a, const MonoidElement& b) const override {
    const SymbolicSequence &x = get(a), &y = get(b);
    if (y.is_zero()) return std::nullopt;
    std::uint64_t n0 = first_support(y);
    Rational c = x.eval(n0) / y.eval(n0);
    if (SymbolicSequence::embed(c) * y == x) return c;
    return std::nullopt;
  }
  MonoidElement sample(std::mt19937_64& rng) const override {
    auto small = [&rng]() { return Rational(static_cast<std::int64_t>(rng() % 7) - 3); };
    unsigned m = static_cast<unsigned>(rng() % 2) + 1;
    std::vector<RationalFn> branches;
    for (unsigned r = 0; r < m; ++r) {
      Poly p = Poly::from_coeffs({small(), small()});
      Poly q = rng() % 2 ? Poly::from_coeffs({1, 1}) : Poly::constant(1);
      branches.push_back(RationalFn::make(p, q));
    }
    return SymbolicSequence::make(std::move(branches));
  }
  MonoidElement sample_nonneg(std::mt19937_64& rng) const override {
    SymbolicSequence s = get(sample(rng));
    return s * s;
  }
  std::vector<MonoidElement> distinguished() const override {
    Poly n1 = Poly::from_coeffs({1, 1});
    return {SymbolicSequence::embed(0), SymbolicSequence::embed(1),
            SymbolicSequence::make({RationalFn::make(Poly::constant(1), n1)}),
            SymbolicSequence::make({RationalFn::make(Poly::variable(), Poly::constant(1))}),
            SymbolicSequence::make({RationalFn::constant(1), RationalFn::constant(0)})};
  }

  static bool branch_nonneg(const RationalFn& f, unsigned r, unsigned m) {
    if (f.is_zero()) return true;
    Integer bound = std::max(root_scan_bound(f.p()), root_scan_bound(f.q()));
    for (Integer n = r; n <= bound; n += m)
      if (f.eval(n) < 0) return false;
    return sign(f.p().leading()) > 0;  // q is monic, hence eventually positive
  }

 private:
  const SymbolicSequence& get(const MonoidElement& e) const {
    if (const auto* s = std::get_if<SymbolicSequence>(&e)) return *s;
    reject("expected a symbolic sequence");
  }
  // Least n with s(n) != 0 (s nonzero).
  static std::uint64_t first_support(const SymbolicSequence& s) {
    for (std::uint64_t n = 0;; ++n)
      if (s.eval(n) != 0) return n;
  }
};

// --- registry ----------------------------------------------------------------

inline const std::map<std::string, std::shared_ptr<const MonoidInstance>>& monoid_registry() {
  static const auto reg = [] {
    std::map<std::string, std::shared_ptr<const MonoidInstance>> m;
    m["nat-add"] = std::make_shared<NatAddInstance>();
    m["lex-z2"] = std::make_shared<LexInstance>(2);
    m["lex-z3"] = std::make_shared<LexInstance>(3);
    m["lc-add"] = std::make_shared<LCAddInstance>();
    m["seq-add-pointwise"] = std::make_shared<SeqAddInstance>();
    return m;
  }();
  return reg;
}

inline const MonoidInstance& find_instance(const std::string& name) {
  auto it = monoid_registry().find(name);
  if (it == monoid_registry().end()) throw error("unknown monoid instance '" + name + "'");
  return *it->second;
}

// --- operations ---------------------------------------------------------------

// u op u op ... (n times), by repeated doubling; neutral for n = 0.
inline MonoidElement nfold(const MonoidInstance& inst, const MonoidElement& u, std::uint64_t n) {
  MonoidElement acc = inst.neutral();
  MonoidElement base = u;
  while (n > 0) {
    if (n & 1) acc = inst.op(acc, base);
    n >>= 1;
    if (n) base = inst.op(base, base);
  }
  return acc;
}

struct Check42Result {
  bool holds = false;
  bool certified = false;  // every per-element decision was exact
  std::optional<MonoidElement> fails_at;
};

// Searches, for each x in sample, an n <= n_bound with n*u >= x. Instances with
// an exact decision procedure certify the outcome; otherwise the result is
// bounded evidence.
inline Check42Result check_42(const MonoidInstance& inst, const MonoidElement& u,
                              const std::vector<MonoidElement>& sample, std::uint64_t n_bound) {
  if (!inst.linear()) throw partial_order_only();
  if (!inst.is_nonneg(u)) throw error("u must lie in E+");
  Check42Result res;
  res.certified = true;
  for (const auto& x : sample) {
    if (auto exact = inst.decide_42_single(u, x)) {
      if (!*exact) {
        res.fails_at = x;
        res.certified = true;  // the failing decision itself is exact
        return res;
      }
      continue;
    }
    res.certified = false;
    bool found = false;
    MonoidElement acc = inst.neutral();
    for (std::uint64_t n = 0; n <= n_bound; ++n) {
      if (inst.compare(acc, x) != Ordering::less) {
        found = true;
        break;
      }
      acc = inst.op(acc, u);
    }
    if (!found) {
      res.fails_at = x;
      return res;
    }
  }
  res.holds = true;
  return res;
}

struct Check44Result {
  bool bounded = false;      // no escape found
  bool certified = false;    // exact certificate, not just a scan
  std::string reason;        // certificate text when certified
  std::uint64_t escapes_at = 0;
};

// Checks n*x <= y for all n <= n_bound; the instance's exact orbit decision
// upgrades the verdict to a certificate when available.
inline Check44Result check_44(const MonoidInstance& inst, const MonoidElement& x,
                              const MonoidElement& y, std::uint64_t n_bound) {
  if (!inst.is_nonneg(x) || !inst.is_nonneg(y)) throw error("x and y must lie in E+");
  Check44Result res;
  if (auto exact = inst.decide_orbit(x, y)) {
    res.bounded = exact->bounded;
    res.certified = true;
    res.reason = exact->reason;
    res.escapes_at = exact->escapes_at;
    return res;
  }
  MonoidElement acc = inst.neutral();
  for (std::uint64_t n = 0; n <= n_bound; ++n) {
    if (!inst.leq(acc, y)) {
      res.escapes_at = n;
      return res;
    }
    acc = inst.op(acc, x);
  }
  res.bounded = true;
  return res;
}

// One cyclic member I_i = Zu_i (or Nu_i in a monoid without inverses) of a
// Theorem 4.1 family, with the dominating element x_i of the chain (4.8).
struct SubgroupFamily {
  struct Entry {
    MonoidElement generator;  // u_i
    MonoidElement dominator;  // x_i = dominate(u_i)
  };
  std::string instance;
  bool group = true;  // Z u_i if true, N u_i otherwise
  std::vector<Entry> entries;
};

// The constructive procedure of Theorem 4.1's proof: from (4.5), build the
// chain 0 < u_1 <= x_1 < u_2 <= x_2 < ... and the cyclic family I_i = Zu_i.
// Chain inequalities are verified exactly as they are produced.
inline SubgroupFamily theorem41_construct(const MonoidInstance& inst, const MonoidElement& u1,
                                          std::size_t depth) {
  if (!inst.linear()) throw not_linear();
  if (!inst.has_dominate())
    throw oracle_missing("instance '" + inst.name() +
                         "' has no dominate oracle: it is Archimedean in the (4.2) sense");
  if (inst.compare(u1, inst.neutral()) != Ordering::greater) throw trivial_monoid();
  SubgroupFamily fam;
  fam.instance = inst.name();
  fam.group = inst.is_group();
  MonoidElement u = u1;
  for (std::size_t i = 0; i < depth; ++i) {
    MonoidElement x = inst.dominate(u);
    if (inst.compare(u, x) == Ordering::greater)
      throw error("dominate oracle violated (4.5): x_i < u_i");
    fam.entries.push_back({u, x});
    if (i + 1 < depth) {
      MonoidElement next = inst.strictly_above(x, u1);
      if (inst.compare(next, x) != Ordering::greater)
        throw error("strictly_above produced a non-increasing chain");
      u = next;
    }
  }
  return fam;
}

struct PairVerdict {
  std::size_t i = 0, j = 0;
  enum Kind { exact_disjoint, not_disjoint, bounded } kind = exact_disjoint;
  std::string reason;
  // Populated for not_disjoint: n1*u_i = n2*u_j = witness != 0.
  Integer n1, n2;
  std::optional<MonoidElement> witness;
  std::uint64_t bound_used = 0;
};

// Pairwise audit of I_i \cap I_j = {0} (4.10). Exact when the carrier's scalar
// ratio test decides; otherwise bounded enumeration of 0 < |n1|,|n2| <= B.
inline std::vector<PairVerdict> verify_disjoint(const MonoidInstance& inst,
                                                const SubgroupFamily& family, std::uint64_t B) {
  std::vector<PairVerdict> out;
  const auto& e = family.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      PairVerdict v;
      v.i = i;
      v.j = j;
      const MonoidElement &ui = e[i].generator, &uj = e[j].generator;
      bool zi = inst.equal(ui, inst.neutral()), zj = inst.equal(uj, inst.neutral());
      if (zi || zj) {
        v.kind = PairVerdict::exact_disjoint;
        v.reason = "a generator is 0: that member is {0}";
        out.push_back(std::move(v));
        continue;
      }
      if (inst.ratio_decidable()) {
        auto c = inst.ratio(ui, uj);
        if (!c || *c == 0) {
          v.kind = PairVerdict::exact_disjoint;
          v.reason = "no nonzero scalar c with u_i = c*u_j exists";
        } else {
          // u_i = (p/q) u_j, so q*u_i = p*u_j is a common nonzero element.
          v.kind = PairVerdict::not_disjoint;
          v.n1 = den(*c);
          v.n2 = num(*c);
          v.witness = nfold(inst, ui, static_cast<std::uint64_t>(den(*c)));
          v.reason = "u_i = (" + to_string(*c) + ")*u_j";
          if (!family.group && v.n2 < 0) {
            // In a semigroup family negative multiples do not exist; a negative
            // ratio means the semigroups meet only at 0 after all.
            v = PairVerdict{};
            v.i = i;
            v.j = j;
            v.kind = PairVerdict::exact_disjoint;
            v.reason = "scalar ratio is negative and the family is over N";
          }
        }
      } else {
        v.kind = PairVerdict::bounded;
        v.bound_used = B;
        v.reason = "enumerated 0 < |n1|,|n2| <= " + std::to_string(B);
        for (std::uint64_t n1 = 1; n1 <= B && v.kind == PairVerdict::bounded; ++n1) {
          MonoidElement lhs = nfold(inst, ui, n1);
          for (std::uint64_t n2 = 1; n2 <= B; ++n2) {
            if (inst.equal(lhs, nfold(inst, uj, n2))) {
              v.kind = PairVerdict::not_disjoint;
              v.n1 = n1;
              v.n2 = n2;
              v.witness = lhs;
              v.reason = "found equal multiples by enumeration";
              break;
            }
          }
        }
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace nonarch
