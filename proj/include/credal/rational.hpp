/**
 * Exact rational scalars.
 *
 * Every probability, bound and expectation in the engine is a Rat: an
 * arbitrary-precision rational kept in lowest terms with a positive
 * denominator (GMP canonicalizes on every operation, so the invariant holds
 * by construction and arithmetic never rounds).
 *
 * Text syntax: "a/b" with integers, plain integers, or decimal strings;
 * decimals convert exactly ("0.2" and "1/5" parse to the same value).
 * Canonical output is "a/b" in lowest terms, integers as "a".
 */
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "credal/errors.hpp"

namespace credal {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Canonical text form: lowest terms, "a/b" or "a" for integers.
inline std::string to_string(const Rat& r) { return r.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/**
 * Parse a rational from text. Accepts "a/b" (b > 0 after sign
 * normalization), integer literals, and decimal literals, all exact.
 * Throws SyntaxError on anything else.
 */
inline Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw SyntaxError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = (s.front() == '-');
    s.remove_prefix(1);
    if (s.empty()) throw SyntaxError("sign without digits in rational literal");
  }

  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw SyntaxError("bad rational literal '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    value = Rat(n, d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw SyntaxError("bad decimal literal '" + std::string(text) + "'");
    if (!whole.empty() && !detail::all_digits(whole))
      throw SyntaxError("bad decimal literal '" + std::string(text) + "'");
    if (!frac.empty() && !detail::all_digits(frac))
      throw SyntaxError("bad decimal literal '" + std::string(text) + "'");
    BigInt numerator = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt denominator = 1;
    for (char c : frac) {
      numerator = numerator * 10 + (c - '0');
      denominator *= 10;
    }
    value = Rat(numerator, denominator);
  } else {
    if (!detail::all_digits(s)) throw SyntaxError("bad rational literal '" + std::string(text) + "'");
    value = Rat(BigInt{std::string(s)});
  }
  return negative ? Rat(-value) : value;
}

}  // namespace credal
