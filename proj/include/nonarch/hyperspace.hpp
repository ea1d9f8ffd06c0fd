#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/finite_magma.hpp"
#include "nonarch/monoid.hpp"

namespace nonarch {

struct not_proper : error {
  explicit not_proper(const std::string& what) : error(what) {}
};

// Carrier a sub-structure lives in: a registered ordered monoid, the
// multiplicative magma of symbolic sequences, or the degenerate scalar field
// (the (2.7) contrast, where eps is absent and lines collapse).
class Ambient {
 public:
  static Ambient from_name(const std::string& name) {
    Ambient a;
    a.name_ = name;
    if (name == "seq-mul-pointwise") {
      a.kind_ = seq_mul;
    } else if (name == "rational-add") {
      a.kind_ = rational_add;
    } else {
      a.kind_ = monoid;
      a.inst_ = &find_instance(name);
    }
    return a;
  }

  const std::string& name() const { return name_; }
  const MonoidInstance* instance() const { return inst_; }

  MonoidElement op(const MonoidElement& a, const MonoidElement& b) const {
    switch (kind_) {
      case monoid: return inst_->op(a, b);
      case seq_mul: return std::get<SymbolicSequence>(a) * std::get<SymbolicSequence>(b);
      case rational_add: return scalar(a) + scalar(b);
    }
    throw error("bad ambient");
  }
  bool equal(const MonoidElement& a, const MonoidElement& b) const {
    switch (kind_) {
      case monoid: return inst_->equal(a, b);
      case seq_mul: return std::get<SymbolicSequence>(a) == std::get<SymbolicSequence>(b);
      case rational_add: return scalar(a) == scalar(b);
    }
    throw error("bad ambient");
  }
  bool is_idempotent(const MonoidElement& x) const { return equal(op(x, x), x); }

  std::string idempotent_policy() const {
    if (kind_ == seq_mul)
      return "pointwise multiplication: idempotents are the 0/1-valued indicator sequences "
             "(s(n)^2 = s(n) for every n)";
    return "additive operation: the neutral element 0 is the only idempotent";
  }

 private:
  enum Kind { monoid, seq_mul, rational_add } kind_ = monoid;
  std::string name_;
  const MonoidInstance* inst_ = nullptr;

  static LCNumber scalar(const MonoidElement& e) {
    const auto& x = std::get<LCNumber>(e);
    if (!as_rational(x)) throw error("rational-add ambient holds scalars only");
    return x;
  }
};

inline bool is_idempotent(const Ambient& ambient, const MonoidElement& x) {
  return ambient.is_idempotent(x);
}

// --- sub-structures ------------------------------------------------------------

struct CyclicMember {
  MonoidElement generator;
};
struct ScalarLineMember {
  LCNumber base;
  Rational exponent;  // the line Q * base^exponent
};
struct GeneratedMember {
  std::vector<MonoidElement> generators;
  std::size_t max_elements = 256;  // closure cap; completeness is recorded
};
struct PredicateMember {
  std::string name;  // "mon0" | "power-span" | "zspan-generators"
  std::optional<LCNumber> base;          // power-span
  std::vector<MonoidElement> generators; // zspan-generators
};

using Membership =
    std::variant<CyclicMember, ScalarLineMember, GeneratedMember, PredicateMember>;

struct SubStructure {
  std::string ambient;
  Membership membership;
};

namespace detail {

// Closure of the generators under the ambient operation; second = true when a
// fixpoint was reached within the cap.
inline std::pair<std::vector<MonoidElement>, bool> closure(const Ambient& amb,
                                                           const std::vector<MonoidElement>& gens,
                                                           std::size_t cap) {
  std::vector<MonoidElement> elems = gens;
  auto dedup_insert = [&](const MonoidElement& x) {
    for (const auto& e : elems)
      if (amb.equal(e, x)) return false;
    elems.push_back(x);
    return true;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (elems.size() >= cap) return {elems, false};
        if (dedup_insert(amb.op(elems[i], elems[j]))) grew = true;
      }
  }
  return {elems, true};
}

inline const LCNumber& as_lc(const MonoidElement& e) {
  if (const auto* x = std::get_if<LCNumber>(&e)) return *x;
  throw error("expected a field element");
}

// Valuation of the elements on the line Q*base^a.
inline Rational line_valuation(const ScalarLineMember& m) {
  auto v = valuation(m.base);
  if (!v) throw zero_argument();
  return *v * m.exponent;
}

}  // namespace detail

// Tri-state exact membership. nullopt = not decidable from the stored data.
inline std::optional<bool> member_contains(const Ambient& amb, const Membership& m,
                                           const MonoidElement& x) {
  if (const auto* c = std::get_if<CyclicMember>(&m)) {
    if (const auto* inst = amb.instance()) return inst->solve(x, c->generator).has_value();
    return std::nullopt;
  }
  if (const auto* s = std::get_if<ScalarLineMember>(&m)) {
    const LCNumber& v = detail::as_lc(x);
    if (v.is_zero()) return true;
    auto val_x = valuation(v);
    if (*val_x != detail::line_valuation(*s)) return false;
    // v = c*base^a  <=>  v^q / base^p is the q-th power of a rational.
    unsigned q = static_cast<unsigned>(den(s->exponent));
    LCNumber ratio = pow(v, Rational(q)) / pow(s->base, Rational(num(s->exponent)));
    auto rho = as_rational(ratio);
    if (!rho) return false;
    return rational_nth_root(*rho, q).has_value();
  }
  if (const auto* g = std::get_if<GeneratedMember>(&m)) {
    auto [elems, complete] = detail::closure(amb, g->generators, g->max_elements);
    for (const auto& e : elems)
      if (amb.equal(e, x)) return true;
    return complete ? std::optional<bool>(false) : std::nullopt;
  }
  const auto& p = std::get<PredicateMember>(m);
  if (p.name == "mon0") {
    return in_monad(detail::as_lc(x));
  }
  if (p.name == "power-span") {
    const LCNumber& v = detail::as_lc(x);
    if (v.is_zero()) return true;
    auto vb = valuation(*p.base);
    auto vx = valuation(v);
    // Nonzero span elements have valuation a*val(base) for some a >= 1.
    if (sign(*vx) != sign(*vb)) return false;
    if (rational_abs(*vx) < rational_abs(*vb)) return false;
    return std::nullopt;
  }
  if (p.name == "zspan-generators") {
    const LCNumber& v = detail::as_lc(x);
    if (v.is_zero()) return true;
    std::vector<Rational> vals;
    for (const auto& g : p.generators) {
      auto vg = valuation(detail::as_lc(g));
      if (!vg) continue;
      vals.push_back(*vg);
    }
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j)
        if (vals[i] == vals[j]) return std::nullopt;  // leading-term argument unavailable
    auto vx = valuation(v);
    for (const auto& w : vals)
      if (*vx == w) return std::nullopt;
    return false;  // no Z-combination can reach a fresh valuation
  }
  return std::nullopt;
}

// --- pairwise disjointness ------------------------------------------------------

struct DisjointResult {
  enum Kind { exact_disjoint, disjoint_bounded, overlap } kind = exact_disjoint;
  std::string reason;
  std::uint64_t bound = 0;
  std::optional<MonoidElement> witness;  // non-idempotent common element
};

// Decides (or bounded-checks) that every common element of A and B is
// idempotent — the paper's disjointness convention.
inline DisjointResult disjoint_up_to_idempotents(const Ambient& amb, const SubStructure& A,
                                                 const SubStructure& B, std::uint64_t bound) {
  DisjointResult res;

  const auto* ca = std::get_if<CyclicMember>(&A.membership);
  const auto* cb = std::get_if<CyclicMember>(&B.membership);
  const auto* sa = std::get_if<ScalarLineMember>(&A.membership);
  const auto* sb = std::get_if<ScalarLineMember>(&B.membership);
  const auto* ga = std::get_if<GeneratedMember>(&A.membership);
  const auto* gb = std::get_if<GeneratedMember>(&B.membership);

  if (ca && cb && amb.instance() && amb.instance()->ratio_decidable()) {
    const auto& inst = *amb.instance();
    const MonoidElement &u = ca->generator, &v = cb->generator;
    if (inst.equal(u, inst.neutral()) || inst.equal(v, inst.neutral())) {
      res.reason = "a generator is neutral: that member is {0}";
      return res;
    }
    auto c = inst.ratio(u, v);
    if (!c || *c == 0) {
      res.reason = "no nonzero scalar c with u = c*v exists; n1*u = n2*v forces n1 = n2 = 0";
      return res;
    }
    if (!inst.is_group() && *c < 0) {
      res.reason = "scalar ratio is negative and the members are N-semigroups";
      return res;
    }
    res.kind = DisjointResult::overlap;
    res.witness = nfold(inst, u, static_cast<std::uint64_t>(den(*c)));
    res.reason = "u = (" + to_string(*c) + ")*v: " + to_string(den(*c)) + "*u = " +
                 to_string(num(*c)) + "*v is a common non-idempotent element";
    return res;
  }

  if (sa && sb) {
    Rational va = detail::line_valuation(*sa), vb = detail::line_valuation(*sb);
    if (va != vb) {
      res.reason = "element valuations differ: " + to_string(va) + " vs " + to_string(vb);
      return res;
    }
    // Equal valuations: the lines meet outside 0 iff base_a^(ea*L) and
    // base_b^(eb*L) lie on the same rational line (L clears both exponents).
    Integer l = boost::multiprecision::lcm(den(sa->exponent), den(sb->exponent));
    LCNumber ea = detail::integral_power(sa->base, sa->exponent * Rational(l), Integer(1));
    LCNumber eb = detail::integral_power(sb->base, sb->exponent * Rational(l), Integer(1));
    if (auto rho = as_rational(ea / eb)) {
      (void)rho;
      res.kind = DisjointResult::overlap;
      // A concrete common element, when one is materializable.
      try {
        res.witness = pow(sa->base, sa->exponent);
      } catch (const not_representable&) {
        try {
          res.witness = pow(sb->base, sb->exponent);
        } catch (const not_representable&) {
        }
      }
      res.reason = "the lines coincide up to a rational factor";
      return res;
    }
    res.reason = "equal valuations but the power ratio is not rational: intersection is {0}";
    return res;
  }

  // Cyclic against a scalar line: Zu meets the line outside 0 iff u lies on it.
  if ((ca && sb) || (cb && sa)) {
    const CyclicMember& c = ca ? *ca : *cb;
    const ScalarLineMember& s = sa ? *sa : *sb;
    auto in_line = member_contains(amb, Membership(s), c.generator);
    if (in_line && *in_line) {
      res.kind = DisjointResult::overlap;
      res.witness = c.generator;
      res.reason = "the cyclic generator lies on the line";
      return res;
    }
    if (in_line) {
      res.reason = "the cyclic generator is off the line, so every nonzero multiple is too";
      return res;
    }
  }

  if (ga && gb) {
    auto [ea2, ca2] = detail::closure(amb, ga->generators, ga->max_elements);
    auto [eb2, cb2] = detail::closure(amb, gb->generators, gb->max_elements);
    bool complete = ca2 && cb2;
    for (const auto& x : ea2)
      for (const auto& y : eb2)
        if (amb.equal(x, y) && !amb.is_idempotent(x)) {
          res.kind = DisjointResult::overlap;
          res.witness = x;
          res.reason = "closures share a non-idempotent element";
          return res;
        }
    if (complete) {
      res.reason = "exhaustive closure intersection contains idempotents only";
      return res;
    }
    res.kind = DisjointResult::disjoint_bounded;
    res.bound = std::max(ga->max_elements, gb->max_elements);
    res.reason = "closure capped; no non-idempotent common element among enumerated parts";
    return res;
  }

  // Bounded fallback: enumerate cyclic multiples when possible.
  if (ca && cb && amb.instance()) {
    const auto& inst = *amb.instance();
    res.kind = DisjointResult::disjoint_bounded;
    res.bound = bound;
    res.reason = "enumerated 0 < n1,n2 <= " + std::to_string(bound);
    MonoidElement x = ca->generator;
    for (std::uint64_t n1 = 1; n1 <= bound; ++n1) {
      MonoidElement y = cb->generator;
      for (std::uint64_t n2 = 1; n2 <= bound; ++n2) {
        if (inst.equal(x, y) && !amb.is_idempotent(x)) {
          res.kind = DisjointResult::overlap;
          res.witness = x;
          res.reason = "found equal multiples by enumeration";
          return res;
        }
        y = inst.op(y, cb->generator);
      }
      x = inst.op(x, ca->generator);
    }
    return res;
  }

  res.kind = DisjointResult::disjoint_bounded;
  res.bound = bound;
  res.reason = "no exact decision procedure for this pair of membership kinds";
  return res;
}

}  // namespace nonarch
