#pragma once

#include "holobound/exact.hpp"

#include <optional>

namespace holobound {

/// Numerical Chern data of a bundle on a polarized variety (X, Θ) of
/// dimension d. Only intersection numbers are stored, not classes:
///   deg  = c1 · Θ^{d-1}
///   c1sq = c1² · Θ^{d-2}
///   c2   = c2 · Θ^{d-2}
/// rank 0 is reserved for the zero object (see `ChernData::zero()`).
struct ChernData {
  BigInt rank = 1;
  Rational deg = 0;
  Rational c1sq = 0;
  Rational c2 = 0;

  static ChernData trivial(const BigInt& rank = 1) { return {rank, 0, 0, 0}; }
  static ChernData zero() { return {0, 0, 0, 0}; }

  bool is_zero_object() const { return rank == 0; }
  bool has_vanishing_c1() const { return deg == 0 && c1sq == 0; }

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Chern character truncated after degree 2. `ch1_deg` and `ch1_sq` are the
/// Θ-pairings of ch1 and ch1², which together with ch0 and ch2 make the
/// conversion to and from ChernData lossless.
struct TruncatedCh {
  Rational ch0 = 0;
  Rational ch1_deg = 0;
  Rational ch1_sq = 0;
  Rational ch2 = 0;

  friend bool operator==(const TruncatedCh&, const TruncatedCh&) = default;
};

/// Throws Error(domain) unless rank >= 1 (or the rank-0 zero object).
void validate(const ChernData& e);

TruncatedCh to_ch(const ChernData& e);
/// Inverse of to_ch. ch0 must be a nonnegative integer.
ChernData from_ch(const TruncatedCh& ch);

/// Graded product truncated at degree 2. `cross` is the pairing
/// ch1(a)·ch1(b)·Θ^{d-2}.
TruncatedCh ch_product(const TruncatedCh& a, const TruncatedCh& b, const Rational& cross);

Rational slope(const ChernData& e);
/// Δ = 2 r c2 - (r - 1) c1².
Rational discriminant(const ChernData& e);
/// μ₂ = c2 / rank, defined only on the c1 = 0 subcategory.
Rational secondary_slope(const ChernData& e);

/// Whitney sum. `cross` is c1(a)·c1(b)·Θ^{d-2}; it may be omitted only when
/// one side has vanishing c1 data, otherwise Error(domain, "chern.cross_required").
ChernData direct_sum(const ChernData& a, const ChernData& b,
                     const std::optional<Rational>& cross = std::nullopt);
ChernData tensor(const ChernData& a, const ChernData& b,
                 const std::optional<Rational>& cross = std::nullopt);
ChernData dual(const ChernData& e);
/// End(E) = E ⊗ E*, using the cross pairing c1(E)·c1(E*) = -c1².
ChernData endomorphisms(const ChernData& e);

/// Truncated ch of an object built from a single bundle E by λ-operations.
/// Every degree-1 class that occurs is a rational multiple of c1(E), so the
/// class is stored as that multiple and pairings reduce to deg(E) and c1²(E).
struct ProportionalCh {
  Rational ch0 = 0;
  Rational c1_multiple = 0;
  Rational ch2 = 0;

  friend bool operator==(const ProportionalCh&, const ProportionalCh&) = default;
};

ProportionalCh proportional_ch(const ChernData& e);
ProportionalCh adams(const ProportionalCh& x, const Rational& k);
ProportionalCh multiply(const ProportionalCh& a, const ProportionalCh& b, const ChernData& base);
ChernData to_chern(const ProportionalCh& x, const ChernData& base);

/// ch of Symⁿ(E) and Λⁿ(E) via the Newton-type recursions
///   n·Symⁿ = Σ_{k=1..n} ψᵏ·Sym^{n-k},   n·Λⁿ = Σ_{k=1..n} (-1)^{k-1} ψᵏ·Λ^{n-k}.
ProportionalCh sym_power_ch(const ChernData& e, unsigned n);
ProportionalCh wedge_power_ch(const ChernData& e, unsigned n);

ChernData sym_power(const ChernData& e, unsigned n);
/// Returns ChernData::zero() when n > rank.
ChernData wedge_power(const ChernData& e, unsigned n);

/// rank Symⁿ of a rank-r bundle: binom(n + r - 1, r - 1).
BigInt sym_rank(const BigInt& r, const BigInt& n);

}  // namespace holobound
