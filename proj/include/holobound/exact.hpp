#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace holobound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer <= x.
BigInt floor(const Rational& x);
/// Smallest integer >= x.
BigInt ceil(const Rational& x);
/// Smallest integer s with s*s >= n, for n >= 0.
BigInt ceil_sqrt(const BigInt& n);
/// Smallest integer s >= 0 with s^k >= n, for n >= 0 and k >= 1.
BigInt ceil_root(const BigInt& n, unsigned k);

/// binom(n, k) for n >= 0; zero when k < 0 or k > n. Runs in O(k) big-int steps.
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt factorial(unsigned n);

/// Canonical text forms: "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "p", "-p", "p/q". Throws Error(domain, "parse.rational") on junk or q == 0.
Rational parse_rational(std::string_view text);
/// Parses an optionally signed decimal integer.
BigInt parse_bigint(std::string_view text);

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace holobound
