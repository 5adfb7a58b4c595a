#include "holobound/hn_slopes.hpp"

#include "holobound/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace holobound {

BigInt HNProfile::total_rank() const {
  BigInt r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

Rational HNProfile::total_deg() const {
  Rational d = 0;
  for (const auto& f : factors) d += f.deg;
  return d;
}

ProfileValidity validate_profile(const HNProfile& p) {
  if (p.factors.empty()) return {false, std::nullopt};
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    if (p.factors[i].rank < 1) return {false, i};
    if (i > 0 && !(p.factors[i - 1].slope() > p.factors[i].slope())) return {false, i};
  }
  return {true, std::nullopt};
}

namespace {

void require_valid(const HNProfile& p) {
  const auto v = validate_profile(p);
  if (v.valid) return;
  if (!v.first_violation) domain_error("hn.invalid_profile", "HN profile is empty");
  domain_error("hn.invalid_profile", "HN profile invalid at factor " +
                                         std::to_string(*v.first_violation) +
                                         ": slopes must strictly decrease and ranks be >= 1");
}

}  // namespace

Rational mu_max(const HNProfile& p) {
  require_valid(p);
  return p.factors.front().slope();
}

Rational total_slope(const HNProfile& p) {
  require_valid(p);
  return p.total_deg() / Rational(p.total_rank());
}

bool pushforward_bound_check(const Rational& w_slope, const CoverData& f, const HNProfile& candidate) {
  if (f.degree < 1) domain_error("hn.bad_cover_degree", "cover degree must be >= 1");
  if (!f.separable) {
    domain_error("hn.inseparable_cover",
                 "pushforward slope bound is only available for separable covers");
  }
  return mu_max(candidate) <= w_slope / Rational(f.degree);
}

EtaleVerdict etale_criterion(const HNProfile& p) {
  require_valid(p);
  const bool semistable_degree_zero = p.factors.size() == 1 && p.factors.front().deg == 0;
  return semistable_degree_zero ? EtaleVerdict::etale_consistent : EtaleVerdict::not_etale;
}

RamificationVerdict genuinely_ramified_criterion(const HNProfile& p) {
  if (mu_max(p) != 0) {
    domain_error("hn.inconsistent_pushforward",
                 "profile cannot be HN data of f_*O_X: need mu_max f_*O_X = 0");
  }
  return p.factors.front().rank == 1 ? RamificationVerdict::genuinely_ramified
                                     : RamificationVerdict::factors_through_etale;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 1'000'000) {
    const auto v = n.convert_to<std::uint64_t>();
    for (std::uint64_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 40);
}

Rational frobenius_degree_scale(const Rational& deg, const BigInt& p, unsigned n) {
  if (!is_prime(p)) domain_error("hn.not_prime", "characteristic " + p.str() + " is not prime");
  return deg * Rational(boost::multiprecision::pow(p, n));
}

const char* to_string(EtaleVerdict v) {
  return v == EtaleVerdict::etale_consistent ? "etale_consistent" : "not_etale";
}

const char* to_string(RamificationVerdict v) {
  return v == RamificationVerdict::genuinely_ramified ? "genuinely_ramified"
                                                      : "factors_through_etale";
}

}  // namespace holobound
