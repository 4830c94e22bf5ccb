#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnz/errors.hpp"
#include "cnz/integer.hpp"

namespace cnz {

/**
 * Univariate polynomial in t over the arbitrary-precision integers: a second
 * integral domain that is neither a field nor a ring of scalars inside Q.
 *
 * Canonical form: coefficients stored in ascending degree with a nonzero
 * leading coefficient; the zero polynomial is the empty list. All operations
 * preserve canonical form, so equality is plain coefficient comparison.
 */
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long constant) {  // NOLINT: implicit by design
    if (constant != 0) coeffs_.emplace_back(constant);
  }
  explicit UniPoly(Integer constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  /// Coefficients in ascending degree: {1, -3, 1} is t^2 - 3t + 1.
  explicit UniPoly(std::vector<Integer> ascending)
      : coeffs_(std::move(ascending)) {
    trim();
  }
  UniPoly(std::initializer_list<long> ascending) {
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(1); }
  static UniPoly t() { return UniPoly({0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree of a nonzero polynomial; the zero polynomial has none.
  std::size_t degree() const {
    if (is_zero()) throw usage_error("degree of the zero polynomial");
    return coeffs_.size() - 1;
  }

  /// Coefficient of t^k (zero beyond the degree).
  const Integer& coefficient(std::size_t k) const {
    static const Integer kZero;
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }

  const Integer& lead() const {
    if (is_zero()) throw usage_error("leading coefficient of zero");
    return coeffs_.back();
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = a.coefficient(i) + b.coefficient(i);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = a.coefficient(i) - b.coefficient(i);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Integer> out(a.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs_[i];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /**
   * Exact quotient; b must be nonzero and divide a in Z[t]. Long division:
   * when the quotient exists in Z[t] every leading-coefficient division is
   * exact, so any inexact step or nonzero final remainder is an integrity
   * failure of the caller (fraction-free elimination).
   */
  friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw usage_error("exact_div: division by zero");
    if (a.is_zero()) return UniPoly();
    std::size_t db = b.degree();
    UniPoly rem = a;
    std::vector<Integer> q;
    if (!rem.is_zero() && rem.degree() >= db)
      q.assign(rem.degree() - db + 1, Integer(0));
    while (!rem.is_zero() && rem.degree() >= db) {
      std::size_t shift = rem.degree() - db;
      Integer qc = exact_div(rem.lead(), b.lead());
      q[shift] = qc;
      std::vector<Integer> sub(shift + db + 1);
      for (std::size_t i = 0; i <= db; ++i)
        sub[shift + i] = qc * b.coefficient(i);
      rem = rem - UniPoly(std::move(sub));
    }
    if (!rem.is_zero())
      throw integrity_error("exact_div: " + b.to_string() +
                            " does not divide " + a.to_string());
    return UniPoly(std::move(q));
  }

  /// Canonical text, descending powers: "t^2-3*t+1", "-t+5", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c.is_zero()) continue;
      bool first = out.empty();
      bool neg = c.sign() < 0;
      if (!first)
        out += neg ? '-' : '+';
      else if (neg)
        out += '-';
      Integer mag = c.abs();
      if (k == 0) {
        out += mag.to_string();
      } else {
        if (!mag.is_one()) {
          out += mag.to_string();
          out += '*';
        }
        out += 't';
        if (k > 1) {
          out += '^';
          out += std::to_string(k);
        }
      }
    }
    return out;
  }

  /**
   * Parses a polynomial expression starting at text[pos], advancing pos past
   * it. Stops at the first character that cannot extend the expression
   * (a comma or semicolon, for instance). Grammar:
   *   poly   := [sign] term (sign term)*
   *   term   := INT ['*' tpart] | tpart
   *   tpart  := 't' ['^' UINT]
   */
  static UniPoly parse(std::string_view text, std::size_t& pos) {
    std::vector<Integer> acc;
    bool first = true;
    for (;;) {
      skip_ws(text, pos);
      int sign = 1;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        break;  // no joining sign: expression ends here
      }
      skip_ws(text, pos);
      parse_term(text, pos, sign, acc);
      first = false;
    }
    return UniPoly(std::move(acc));
  }

  /// Parses a complete element text; trailing garbage is an error.
  static UniPoly from_string(std::string_view text) {
    std::size_t pos = 0;
    UniPoly p = parse(text, pos);
    skip_ws(text, pos);
    if (pos != text.size())
      throw parse_error("unexpected trailing text in polynomial", pos);
    return p;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  }

  static bool at_digit(std::string_view text, std::size_t pos) {
    return pos < text.size() && text[pos] >= '0' && text[pos] <= '9';
  }

  static Integer parse_uint(std::string_view text, std::size_t& pos) {
    if (!at_digit(text, pos)) throw parse_error("expected digits", pos);
    std::size_t start = pos;
    while (at_digit(text, pos)) ++pos;
    return Integer::from_string(text.substr(start, pos - start));
  }

  static std::size_t parse_exponent(std::string_view text, std::size_t& pos) {
    if (!at_digit(text, pos)) throw parse_error("expected exponent digits", pos);
    std::size_t e = 0;
    while (at_digit(text, pos)) {
      e = e * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (e > kMaxExponent) throw parse_error("exponent too large", pos);
      ++pos;
    }
    return e;
  }

  static void parse_term(std::string_view text, std::size_t& pos, int sign,
                         std::vector<Integer>& acc) {
    Integer coeff = Integer::one();
    std::size_t deg = 0;
    if (at_digit(text, pos)) {
      coeff = parse_uint(text, pos);
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws(text, pos);
        deg = parse_tpart(text, pos);
      }
    } else if (pos < text.size() && text[pos] == 't') {
      deg = parse_tpart(text, pos);
    } else {
      throw parse_error("expected integer or 't'", pos);
    }
    if (sign < 0) coeff = -coeff;
    if (acc.size() < deg + 1) acc.resize(deg + 1);
    acc[deg] = acc[deg] + coeff;
  }

  static std::size_t parse_tpart(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != 't')
      throw parse_error("expected 't'", pos);
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return parse_exponent(text, pos);
    }
    return 1;
  }

  static constexpr std::size_t kMaxExponent = 1u << 20;

  std::vector<Integer> coeffs_;
};

}  // namespace cnz
