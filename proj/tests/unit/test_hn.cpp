#include "helpers.hpp"

#include "holobound/hn_slopes.hpp"

#include <algorithm>

using namespace holobound;
using testing::error_code;

namespace {

HNProfile prof(std::initializer_list<std::pair<long long, Rational>> f) {
  HNProfile p;
  for (const auto& [r, d] : f) p.factors.push_back({BigInt(r), d});
  return p;
}

HNProfile random_valid(std::mt19937_64& rng, bool top_zero) {
  const int len = 1 + static_cast<int>(rng() % 4);
  HNProfile p;
  Rational mu = top_zero ? Rational(0) : testing::random_rational(rng);
  for (int i = 0; i < len; ++i) {
    const BigInt r = 1 + static_cast<long long>(rng() % 4);
    p.factors.push_back({r, mu * Rational(r)});
    mu -= Rational(1 + static_cast<long long>(rng() % 7), 1 + static_cast<long long>(rng() % 5));
  }
  return p;
}

}  // namespace

TEST_CASE("profile validity") {
  CHECK(validate_profile(prof({{2, 3}, {1, 0}})).valid);
  auto v = validate_profile(prof({{1, 0}, {1, 0}}));
  CHECK_FALSE(v.valid);
  CHECK(v.first_violation == 1u);
  v = validate_profile(prof({{1, 0}, {1, 2}}));
  CHECK_FALSE(v.valid);
  CHECK(v.first_violation == 1u);
  CHECK_FALSE(validate_profile(HNProfile{}).valid);
}

TEST_CASE("shuffling a valid profile breaks it unless the order is kept") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    HNProfile p = random_valid(rng, false);
    REQUIRE(validate_profile(p).valid);
    HNProfile s = p;
    std::shuffle(s.factors.begin(), s.factors.end(), rng);
    bool same = true;
    for (std::size_t k = 0; k < p.factors.size(); ++k) {
      same = same && p.factors[k].rank == s.factors[k].rank && p.factors[k].deg == s.factors[k].deg;
    }
    CHECK(validate_profile(s).valid == same);
  }
}

TEST_CASE("maximal and total slope") {
  CHECK(mu_max(prof({{2, 3}, {1, 0}})) == Rational(3, 2));
  CHECK(total_slope(prof({{2, 3}, {1, 0}})) == 1);
  CHECK(mu_max(prof({{5, 0}})) == 0);
  CHECK(total_slope(prof({{5, 0}})) == 0);
  CHECK(mu_max(prof({{1, 5}})) == 5);
  CHECK(error_code([] { mu_max(prof({{1, 0}, {1, 0}})); }) == "hn.invalid_profile");
}

TEST_CASE("pushforward bound") {
  CHECK(pushforward_bound_check(3, {2, true}, prof({{1, 1}})));
  CHECK_FALSE(pushforward_bound_check(3, {2, true}, prof({{1, 2}})));
  CHECK(pushforward_bound_check(0, {7, true}, prof({{7, 0}})));
  CHECK(error_code([] { pushforward_bound_check(3, {2, false}, prof({{1, 1}})); }) ==
        "hn.inseparable_cover");
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const HNProfile p = random_valid(rng, false);
    const Rational w = testing::random_rational(rng);
    const BigInt deg = 1 + static_cast<long long>(rng() % 9);
    CHECK(pushforward_bound_check(w, {deg, true}, p) == (mu_max(p) <= w / Rational(deg)));
  }
}

TEST_CASE("etale criterion") {
  for (int n = 1; n <= 6; ++n) CHECK(etale_criterion(prof({{n, 0}})) == EtaleVerdict::etale_consistent);
  CHECK(etale_criterion(prof({{1, 0}, {3, -2}})) == EtaleVerdict::not_etale);
  CHECK(etale_criterion(prof({{2, 1}})) == EtaleVerdict::not_etale);
  std::mt19937_64 rng(33);
  for (int i = 0; i < 500; ++i) {
    const HNProfile p = random_valid(rng, rng() % 2 == 0);
    const bool single_zero = p.factors.size() == 1 && p.factors[0].deg == 0;
    CHECK((etale_criterion(p) == EtaleVerdict::etale_consistent) == single_zero);
  }
}

TEST_CASE("genuinely ramified criterion") {
  CHECK(genuinely_ramified_criterion(prof({{1, 0}, {3, -2}})) == RamificationVerdict::genuinely_ramified);
  CHECK(genuinely_ramified_criterion(prof({{2, 0}, {2, -1}})) == RamificationVerdict::factors_through_etale);
  CHECK(genuinely_ramified_criterion(prof({{1, 0}})) == RamificationVerdict::genuinely_ramified);
  CHECK(error_code([] { genuinely_ramified_criterion(prof({{1, 1}, {1, -1}})); }) ==
        "hn.inconsistent_pushforward");
  // An etale profile of rank > 1 factors through an etale cover.
  for (int n = 2; n <= 5; ++n) {
    CHECK(etale_criterion(prof({{n, 0}})) == EtaleVerdict::etale_consistent);
    CHECK(genuinely_ramified_criterion(prof({{n, 0}})) == RamificationVerdict::factors_through_etale);
  }
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    const HNProfile p = random_valid(rng, true);
    const auto expected = p.factors[0].rank == 1 ? RamificationVerdict::genuinely_ramified
                                                 : RamificationVerdict::factors_through_etale;
    CHECK(genuinely_ramified_criterion(p) == expected);
  }
}

TEST_CASE("frobenius degree scaling") {
  CHECK(frobenius_degree_scale(0, 5, 7) == 0);
  CHECK(frobenius_degree_scale(3, 2, 3) == 24);
  CHECK(frobenius_degree_scale(Rational(-1, 3), 3, 2) == -3);
  CHECK(error_code([] { frobenius_degree_scale(1, 4, 1); }) != "<no error>");
  std::mt19937_64 rng(35);
  const long long primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 300; ++i) {
    const Rational d = testing::random_rational(rng);
    const BigInt p = primes[rng() % 6];
    const unsigned m = rng() % 5, n = rng() % 5;
    CHECK(frobenius_degree_scale(d, p, m + n) == frobenius_degree_scale(frobenius_degree_scale(d, p, m), p, n));
    CHECK((d >= 0) == (frobenius_degree_scale(d, p, n) >= 0));
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(BigInt("1000000007")));
  CHECK_FALSE(is_prime(BigInt("1000000007") * 3));
}
