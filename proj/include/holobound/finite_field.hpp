#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace holobound {

/// An element of F_q stored as its table index Σ c_i p^i, where c_i are the
/// coefficients of the residue polynomial (low degree first).
using FqElem = std::uint8_t;

/// Default cap on q = p^e.
inline constexpr unsigned kMaxFieldSize = 81;

/// F_q = F_p[x]/(f) with full addition/multiplication tables. Immutable after
/// construction and shared between matrices through shared_ptr<const>.
class FiniteField {
 public:
  /// `modulus` is monic, low degree first (x²+x+1 → {1,1,1}). When omitted,
  /// the first irreducible in enumeration order is used. Throws
  /// Error(domain) for a non-prime p or reducible modulus, Error(resource)
  /// when p^e exceeds `max_size`.
  static std::shared_ptr<const FiniteField> make(unsigned p, unsigned e,
                                                 std::optional<std::vector<unsigned>> modulus = {},
                                                 unsigned max_size = kMaxFieldSize);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  unsigned size() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }
  FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
  FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  /// Throws Error(domain, "field.zero_inverse") for a == 0.
  FqElem inv(FqElem a) const;

  /// Image of an integer in the prime subfield.
  FqElem from_int(long long n) const;
  /// Coefficients low degree first, length e.
  std::vector<unsigned> coefficients(FqElem a) const;
  FqElem from_coefficients(std::span<const unsigned> coeffs) const;

  /// Position of `a` when all elements are sorted lexicographically by
  /// their coefficient vectors; this is the canonical element order.
  unsigned canonical_key(FqElem a) const { return key_[a]; }

  bool same_as(const FiniteField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField() = default;

  unsigned p_ = 0;
  unsigned e_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<FqElem> add_;
  std::vector<FqElem> mul_;
  std::vector<FqElem> neg_;
  std::vector<FqElem> inv_;
  std::vector<unsigned> key_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const unsigned> poly, unsigned p);

}  // namespace holobound
