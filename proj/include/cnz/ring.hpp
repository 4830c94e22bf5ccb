#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>

namespace cnz {

/**
 * Element of a fixed integral domain.
 *
 * Models provide exact ring arithmetic (no rounding, no overflow), a
 * canonical representation so that equality is decidable regardless of how a
 * value was built, and no zero divisors: the product of two nonzero elements
 * is nonzero. Distinct domains are distinct C++ types, so mixed-domain
 * arithmetic is rejected at compile time.
 */
template <typename R>
concept domain_element =
    std::regular<R> && requires(const R a, const R b) {
      { a + b } -> std::same_as<R>;
      { a - b } -> std::same_as<R>;
      { -a } -> std::same_as<R>;
      { a * b } -> std::same_as<R>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.is_one() } -> std::convertible_to<bool>;
      { R::zero() } -> std::same_as<R>;
      { R::one() } -> std::same_as<R>;
      { a.to_string() } -> std::same_as<std::string>;
    };

/**
 * Optional capability: exact division. exact_div(a, b) is the unique q with
 * q * b == a; callers must guarantee divisibility. Only fraction-free
 * elimination needs this.
 */
template <typename R>
concept exact_division_element =
    domain_element<R> && requires(const R a, const R b) {
      { exact_div(a, b) } -> std::same_as<R>;
    };

/// base^e by square and multiply; pow(x, 0) == one for every x.
template <domain_element R>
R pow(R base, std::uint32_t e) {
  R acc = R::one();
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return acc;
}

/// True when all elements are pairwise distinct under exact equality.
template <domain_element R>
bool all_distinct(std::span<const R> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (elems[i] == elems[j]) return false;
  return true;
}

}  // namespace cnz
