#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonarch {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
  division_by_zero() : error("division by zero") {}
};

struct not_finite : error {
  not_finite() : error("element is infinitely large; no standard part") {}
};

struct zero_argument : error {
  zero_argument() : error("nonzero argument required") {}
};

// A total sequence turned out to vanish (or be undefined) at some index.
struct undefined_at : error {
  std::uint64_t index;
  explicit undefined_at(std::uint64_t n)
      : error("undefined at index " + std::to_string(n)), index(n) {}
};

struct partial_order_only : error {
  partial_order_only() : error("instance order is not linear") {}
};

struct oracle_missing : error {
  explicit oracle_missing(const std::string& what) : error(what) {}
};

struct not_linear : error {
  not_linear() : error("instance order is not linear") {}
};

struct trivial_monoid : error {
  trivial_monoid() : error("monoid has no element u > 0") {}
};

struct wrong_kind : error {
  explicit wrong_kind(const std::string& what) : error(what) {}
};

struct exponent_below_one : error {
  exponent_below_one() : error("family exponents must be >= 1") {}
};

struct too_large : error {
  explicit too_large(const std::string& what) : error(what) {}
};

// Parse failure with a source position (0-based offset into the input).
struct syntax_error : error {
  std::size_t position;
  std::string expected;
  syntax_error(std::size_t pos, const std::string& exp)
      : error("syntax error at position " + std::to_string(pos) + ": expected " + exp),
        position(pos),
        expected(exp) {}
};

// Structurally valid input with no meaning in the algebra (e.g. eps^eps).
struct semantic_error : error {
  std::size_t position;
  semantic_error(std::size_t pos, const std::string& what)
      : error("semantic error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

}  // namespace nonarch
