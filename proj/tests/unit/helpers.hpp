#pragma once

#include "holobound/chern.hpp"
#include "holobound/error.hpp"

#include <doctest.h>

#include <random>
#include <string>

namespace testing {

using holobound::BigInt;
using holobound::ChernData;
using holobound::Rational;

inline ChernData cd(long long r, Rational d, Rational s, Rational c) { return {BigInt(r), d, s, c}; }

// Runs `fn`, expecting a holobound::Error with the given code.
template <class Fn>
std::string error_code(Fn&& fn) {
  try {
    fn();
  } catch (const holobound::Error& e) {
    return e.code();
  }
  return "<no error>";
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 50, int den_max = 12) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_max);
  return Rational(num(rng), den(rng));
}

}  // namespace testing

namespace holobound {
inline doctest::String toString(const ChernData& e) {
  return ("(" + to_string(e.rank) + "," + to_string(e.deg) + "," + to_string(e.c1sq) + "," +
          to_string(e.c2) + ")")
      .c_str();
}
}  // namespace holobound

namespace boost::multiprecision {
template <class B, expression_template_option E>
doctest::String toString(const number<B, E>& x) {
  return x.str().c_str();
}
}  // namespace boost::multiprecision
