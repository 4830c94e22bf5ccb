#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "cnz/errors.hpp"

namespace cnz {

/**
 * Arbitrary-precision signed integer, the prototypical integral domain.
 * Thin value wrapper over GMP's mpz_class; immutable in spirit, every
 * operation returns a fresh value.
 */
class Integer {
 public:
  Integer() : v_(0) {}
  Integer(long v) : v_(v) {}  // NOLINT: implicit by design, literals abound
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }

  /// Parses an optionally signed decimal literal; the whole text must match.
  static Integer from_string(std::string_view text) {
    if (text.empty()) throw parse_error("empty integer literal", 0);
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw parse_error("expected digits", i);
    for (std::size_t k = i; k < text.size(); ++k)
      if (text[k] < '0' || text[k] > '9')
        throw parse_error("invalid character in integer literal", k);
    mpz_class v;
    v.set_str(std::string(text), 10);
    return Integer(std::move(v));
  }

  bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
  bool is_one() const { return mpz_cmp_ui(v_.get_mpz_t(), 1) == 0; }
  /// -1, 0 or +1.
  int sign() const { return mpz_sgn(v_.get_mpz_t()); }
  Integer abs() const { return Integer(mpz_class(::abs(v_))); }

  std::string to_string() const { return v_.get_str(); }
  const mpz_class& value() const { return v_; }

  friend Integer operator+(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.v_ + b.v_));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.v_ - b.v_));
  }
  friend Integer operator-(const Integer& a) {
    return Integer(mpz_class(-a.v_));
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.v_ * b.v_));
  }
  friend bool operator==(const Integer& a, const Integer& b) {
    return a.v_ == b.v_;
  }

  /// Exact quotient; b must be nonzero and divide a.
  friend Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw usage_error("exact_div: division by zero");
    if (!mpz_divisible_p(a.v_.get_mpz_t(), b.v_.get_mpz_t()))
      throw integrity_error("exact_div: " + b.to_string() +
                            " does not divide " + a.to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(std::move(q));
  }

 private:
  mpz_class v_;
};

}  // namespace cnz
