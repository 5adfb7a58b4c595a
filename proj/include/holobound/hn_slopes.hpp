#pragma once

#include "holobound/exact.hpp"

#include <optional>
#include <vector>

namespace holobound {

/// One successive quotient E_i/E_{i-1} of a Harder–Narasimhan filtration.
struct HNFactor {
  BigInt rank;
  Rational deg;

  Rational slope() const { return deg / Rational(rank); }
  friend bool operator==(const HNFactor&, const HNFactor&) = default;
};

/// Ordered (rank, degree) data of the HN quotients, first = maximal slope.
struct HNProfile {
  std::vector<HNFactor> factors;

  BigInt total_rank() const;
  Rational total_deg() const;
};

struct ProfileValidity {
  bool valid = false;
  /// Index of the first factor whose slope fails to drop strictly, or of the
  /// first factor with rank < 1; nullopt when valid or when the list is empty.
  std::optional<std::size_t> first_violation;
};

ProfileValidity validate_profile(const HNProfile& p);

/// Both throw Error(domain, "hn.invalid_profile") on an invalid profile.
Rational mu_max(const HNProfile& p);
Rational total_slope(const HNProfile& p);

struct CoverData {
  BigInt degree = 1;
  bool separable = true;
};

/// True iff mu_max(candidate) <= w_slope / deg f, i.e. the candidate is
/// numerically admissible as the HN profile of f_*W for a finite separable f.
bool pushforward_bound_check(const Rational& w_slope, const CoverData& f, const HNProfile& candidate);

enum class EtaleVerdict { etale_consistent, not_etale };
enum class RamificationVerdict { genuinely_ramified, factors_through_etale };

/// Reads `p` as the HN data of f_*O_X: étale iff it is one factor of slope 0.
EtaleVerdict etale_criterion(const HNProfile& p);
/// Reads `p` as the HN data of f_*O_X, whose maximal slope must be 0.
/// Genuinely ramified iff the maximal-slope factor has rank 1.
RamificationVerdict genuinely_ramified_criterion(const HNProfile& p);

/// Degree after pulling back along the n-th iterated Frobenius: p^n · deg.
Rational frobenius_degree_scale(const Rational& deg, const BigInt& p, unsigned n);

bool is_prime(const BigInt& n);

const char* to_string(EtaleVerdict v);
const char* to_string(RamificationVerdict v);

}  // namespace holobound
