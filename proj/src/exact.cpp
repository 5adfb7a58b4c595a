#include "holobound/exact.hpp"

#include "holobound/error.hpp"

#include <cctype>

namespace holobound {

namespace mp = boost::multiprecision;

BigInt floor(const Rational& x) {
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);  // always > 0
  BigInt q = num / den;                   // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& x) { return -floor(-x); }

BigInt ceil_sqrt(const BigInt& n) {
  if (n < 0) domain_error("exact.negative_sqrt", "square root of a negative integer");
  BigInt s = mp::sqrt(n);
  if (s * s < n) ++s;
  return s;
}

BigInt ceil_root(const BigInt& n, unsigned k) {
  if (n < 0) domain_error("exact.negative_root", "root of a negative integer");
  if (k == 0) domain_error("exact.zero_root", "zeroth root requested");
  if (n <= 1) return n;
  if (k == 1) return n;
  BigInt lo = 0;
  BigInt hi = 1;
  while (mp::pow(hi, k) < n) hi <<= 1;
  // invariant: lo^k < n <= hi^k
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (mp::pow(mid, k) >= n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt kk = k;
  if (n - kk < kk) kk = n - kk;
  BigInt result = 1;
  for (BigInt i = 1; i <= kk; ++i) {
    result = result * (n - kk + i) / i;  // exact at every step
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  const BigInt den = mp::denominator(x);
  if (den == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + den.str();
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_integer(text)) {
    domain_error("parse.integer", "not a decimal integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      domain_error("parse.rational", "not an exact rational: '" + std::string(text) + "'");
    }
    return Rational(parse_bigint(text));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal_integer(num_text) || !is_decimal_integer(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    domain_error("parse.rational", "not an exact rational: '" + std::string(text) + "'");
  }
  const BigInt den = parse_bigint(den_text);
  if (den == 0) domain_error("parse.rational", "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(num_text), den);
}

}  // namespace holobound
