#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnz/errors.hpp"
#include "cnz/ring.hpp"

namespace cnz {

/// Exponent tuple (d_1, ..., d_n) of a term in n variables.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)) {}

  static ExponentVector zeros(std::size_t arity) {
    return ExponentVector(std::vector<std::uint32_t>(arity, 0));
  }

  std::size_t arity() const { return e_.size(); }
  std::uint32_t operator[](std::size_t k) const { return e_[k]; }
  std::span<const std::uint32_t> values() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t sum = 0;
    for (auto d : e_) sum += d;
    return sum;
  }

  bool all_zero() const {
    for (auto d : e_)
      if (d != 0) return false;
    return true;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }

  /// "[2, 1]"
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < e_.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(e_[k]);
    }
    return out + "]";
  }

 private:
  std::vector<std::uint32_t> e_;
};

/**
 * Graded-lexicographic order, largest first: higher total degree wins, ties
 * broken by the lexicographically larger exponent vector. Gives every
 * polynomial a canonical, platform-independent term order.
 */
struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    const auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (std::size_t k = 0; k < a.arity(); ++k)
      if (a[k] != b[k]) return a[k] > b[k];
    return false;
  }
};

template <domain_element R>
struct Term {
  R coefficient;
  ExponentVector exponents;
};

/**
 * Sparse multivariate polynomial over one domain: a canonical map from
 * exponent vectors to nonzero coefficients, fixed arity. Immutable after
 * construction; all operations return fresh values.
 */
template <domain_element R>
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, R, GrlexDescending>;

  /// The zero polynomial in `arity` variables.
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  /// Merges duplicate exponent vectors and drops zero coefficients.
  static Polynomial from_terms(std::size_t arity,
                               std::span<const Term<R>> terms) {
    Polynomial p(arity);
    for (const auto& t : terms) {
      if (t.exponents.arity() != arity)
        throw usage_error("term arity does not match the polynomial");
      p.accumulate(t.exponents, t.coefficient);
    }
    return p;
  }

  static Polynomial constant(std::size_t arity, R value) {
    Polynomial p(arity);
    p.accumulate(ExponentVector::zeros(arity), std::move(value));
    return p;
  }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same_arity(b);
    Polynomial out = a;
    for (const auto& [ev, c] : b.terms_) out.accumulate(ev, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same_arity(b);
    Polynomial out = a;
    for (const auto& [ev, c] : b.terms_) out.accumulate(ev, -c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.arity_);
    for (const auto& [ev, c] : a.terms_) out.terms_.emplace(ev, -c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_arity(b);
    Polynomial out(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<std::uint32_t> e(a.arity_);
        for (std::size_t k = 0; k < a.arity_; ++k) e[k] = ea[k] + eb[k];
        out.accumulate(ExponentVector(std::move(e)), ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Exact value at the point: sum of c * s_1^{d_1} ... s_n^{d_n}.
  R evaluate(std::span<const R> point) const {
    if (point.size() != arity_)
      throw usage_error("evaluation point length does not match arity");
    R sum = R::zero();
    for (const auto& [ev, c] : terms_) {
      R val = c;
      for (std::size_t k = 0; k < arity_; ++k)
        if (ev[k] != 0) val = val * pow(point[k], ev[k]);
      sum = sum + val;
    }
    return sum;
  }
  R evaluate(const std::vector<R>& point) const {
    return evaluate(std::span<const R>(point));
  }

  /// Maximal total degree over all terms. The zero polynomial has none.
  std::uint64_t total_degree() const {
    if (is_zero()) throw input_error("total degree of the zero polynomial");
    return terms_.begin()->first.total_degree();  // map is grlex-descending
  }

  /// All terms of maximal total degree, grlex-descending.
  std::vector<Term<R>> max_degree_terms() const {
    const std::uint64_t deg = total_degree();
    std::vector<Term<R>> out;
    for (const auto& [ev, c] : terms_) {
      if (ev.total_degree() != deg) break;
      out.push_back(Term<R>{c, ev});
    }
    return out;
  }

  /**
   * The term the nonvanishing argument is run against. Without a request,
   * the grlex-largest among the maximal-degree terms; a request must name an
   * existing term of maximal total degree.
   */
  Term<R> select_leading_term(
      const std::optional<ExponentVector>& requested = {}) const {
    if (is_zero())
      throw input_error("the zero polynomial has no leading term");
    const std::uint64_t deg = total_degree();
    if (!requested) {
      const auto& [ev, c] = *terms_.begin();
      return Term<R>{c, ev};
    }
    if (requested->arity() != arity_)
      throw usage_error("requested exponents do not match arity");
    auto it = terms_.find(*requested);
    if (it == terms_.end())
      throw input_error("no term with exponents " + requested->to_string() +
                        "; maximal total degree is " + std::to_string(deg));
    if (it->first.total_degree() != deg)
      throw input_error("term " + requested->to_string() +
                        " has total degree " +
                        std::to_string(it->first.total_degree()) +
                        ", below the maximal " + std::to_string(deg));
    return Term<R>{it->second, it->first};
  }

  /// Canonical text, grlex-descending terms: "x1^2*x2+3*x1-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [ev, c] : terms_) {
      CoeffText ct = coefficient_text(c);
      const bool first = out.empty();
      if (!first)
        out += ct.negative ? '-' : '+';
      else if (ct.negative)
        out += '-';
      std::string mono = monomial_text(ev);
      if (mono.empty()) {
        out += ct.text;
      } else {
        if (!ct.unit_magnitude) {
          out += ct.text;
          out += '*';
        }
        out += mono;
      }
    }
    return out;
  }

 private:
  void check_same_arity(const Polynomial& other) const {
    if (arity_ != other.arity_)
      throw usage_error("polynomial arities differ (" +
                        std::to_string(arity_) + " vs " +
                        std::to_string(other.arity_) + ")");
  }

  void accumulate(const ExponentVector& ev, R coeff) {
    auto [it, inserted] = terms_.emplace(ev, std::move(coeff));
    if (!inserted) {
      it->second = it->second + coeff_ref(it, coeff);
      if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }

  // coeff was moved from only when insertion succeeded.
  static const R& coeff_ref(typename TermMap::iterator, const R& c) {
    return c;
  }

  static std::string monomial_text(const ExponentVector& ev) {
    std::string out;
    for (std::size_t k = 0; k < ev.arity(); ++k) {
      if (ev[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x';
      out += std::to_string(k + 1);
      if (ev[k] > 1) {
        out += '^';
        out += std::to_string(ev[k]);
      }
    }
    return out;
  }

  std::size_t arity_;
  TermMap terms_;
};

}  // namespace cnz
