#pragma once

#include "holobound/chern.hpp"
#include "holobound/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace holobound {

/// Numeric context of the polarized ambient variety (X, Θ).
struct AmbientSpace {
  int dim = 2;
  BigInt theta_top = 1;              // m = Θ^d
  std::map<BigInt, Rational> beta;   // β_r, keyed by rank
  bool assume_beta_zero = false;     // treat every missing β_r as 0

  /// β_r, or Error(domain, "bounds.missing_beta") if absent and not assumed zero.
  Rational beta_for(const BigInt& rank) const;
  void validate() const;
};

namespace jordan {
struct Schur {};
/// (r+1)! · r^{a·ln r + b}
struct Weisfeiler {
  Rational a;
  Rational b;
  unsigned precision_bits = 256;
};
struct Explicit {
  BigInt value;
};
}  // namespace jordan

using JordanMode = std::variant<jordan::Schur, jordan::Weisfeiler, jordan::Explicit>;

/// Exact data behind Schur's bound: (x+1)^N - (x-1)^N = b·x for x = √(8r), N = 2r².
struct SchurExpansion {
  BigInt radicand;     // 8r
  BigInt coefficient;  // b
  BigInt ceiling;      // ⌈b·√(8r)⌉
};

SchurExpansion schur_expansion(unsigned r);

/// J(r). Weisfeiler mode throws Error(resource, "bounds.precision") when the
/// certified interval straddles an integer; retry with more precision bits.
BigInt jordan_constant(unsigned r, const JordanMode& mode);

/// Restriction index ⌊(r-1)/r · Δ·Θ^{d-1} + 1/(m r (r-1)) + (r-1) β_r / (m r)⌋.
/// `delta_pairing` is the caller-evaluated Δ(E)·Θ^{d-1}; on surfaces use
/// discriminant(e).
BigInt langer_index(const ChernData& e, const AmbientSpace& amb, const Rational& delta_pairing);
/// The same quantity under its other name.
BigInt bogomolov_index(const ChernData& e, const AmbientSpace& amb, const Rational& delta_pairing);

/// The unfloored three-term sum of langer_index.
Rational langer_sum(const BigInt& rank, const AmbientSpace& amb, const Rational& delta_pairing);

enum class EllVariant { as_printed, normalized };

struct EllBound {
  BigInt jordan;      // J(r)
  BigInt sym_rank;    // t = rank Sym^{J(r)}
  Rational delta;     // 2 t c
  Rational sum;       // value before flooring
  BigInt value;       // ℓ(r, c)
};

/// ℓ(r, c) = ⌊coef · Δ + 1/(m t (t-1)) + (t-1) β_t / (m t)⌋ with Δ = 2tc,
/// coef = (t-1)/r (as_printed) or (t-1)/t (normalized).
EllBound ell_bound(unsigned r, const Rational& c, const AmbientSpace& amb, const JordanMode& mode,
                   EllVariant variant = EllVariant::as_printed);

struct Summand {
  ChernData chern;
  std::optional<Rational> delta_pairing;  // defaults to discriminant on surfaces
};

struct SummandIndex {
  std::string group;            // "end" or "sym"
  ChernData chern;
  std::optional<BigInt> index;  // nullopt = -inf (rank < 2, skipped)
};

struct RestrictionReport {
  BigInt rank;
  BigInt jordan;
  BigInt sym_rank;
  std::vector<SummandIndex> summands;
  BigInt ell;  // max index over ranked summands
  std::vector<std::string> warnings;
};

/// Bogomolov indices of caller-supplied stable summands of End(E) and
/// Sym^{J(r)}(E) together with their maximum.
RestrictionReport restriction_report(const ChernData& e, const std::vector<Summand>& end_summands,
                                     const std::vector<Summand>& sym_summands,
                                     const AmbientSpace& amb, const JordanMode& mode);

}  // namespace holobound
