#include "holobound/chern.hpp"

#include "holobound/error.hpp"

#include <vector>

namespace holobound {

void validate(const ChernData& e) {
  if (e.rank < 0) domain_error("chern.negative_rank", "rank must be >= 1");
  if (e.rank == 0 && !(e.deg == 0 && e.c1sq == 0 && e.c2 == 0)) {
    domain_error("chern.bad_zero_object", "rank 0 is reserved for the zero object");
  }
}

namespace {

void require_positive_rank(const ChernData& e, const char* op) {
  validate(e);
  if (e.rank == 0) {
    domain_error("chern.zero_object", std::string(op) + " is undefined on the zero object");
  }
}

Rational resolve_cross(const ChernData& a, const ChernData& b,
                       const std::optional<Rational>& cross) {
  if (cross) return *cross;
  if (a.has_vanishing_c1() || b.has_vanishing_c1()) return 0;
  domain_error("chern.cross_required",
               "the c1 cross pairing of two bundles with nonzero c1 data must be supplied");
}

}  // namespace

TruncatedCh to_ch(const ChernData& e) {
  validate(e);
  return {Rational(e.rank), e.deg, e.c1sq, (e.c1sq - 2 * e.c2) / 2};
}

ChernData from_ch(const TruncatedCh& ch) {
  if (!is_integer(ch.ch0) || ch.ch0 < 0) {
    domain_error("chern.bad_rank", "ch0 must be a nonnegative integer, got " + to_string(ch.ch0));
  }
  ChernData e{boost::multiprecision::numerator(ch.ch0), ch.ch1_deg, ch.ch1_sq,
              (ch.ch1_sq - 2 * ch.ch2) / 2};
  if (e.rank == 0 && !(e.deg == 0 && e.c1sq == 0 && e.c2 == 0)) {
    domain_error("chern.bad_zero_object", "rank-0 character with nonzero higher terms");
  }
  return e;
}

TruncatedCh ch_product(const TruncatedCh& a, const TruncatedCh& b, const Rational& cross) {
  return {
      a.ch0 * b.ch0,
      a.ch0 * b.ch1_deg + b.ch0 * a.ch1_deg,
      a.ch0 * a.ch0 * b.ch1_sq + b.ch0 * b.ch0 * a.ch1_sq + 2 * a.ch0 * b.ch0 * cross,
      a.ch0 * b.ch2 + b.ch0 * a.ch2 + cross,
  };
}

Rational slope(const ChernData& e) {
  require_positive_rank(e, "slope");
  return e.deg / Rational(e.rank);
}

Rational discriminant(const ChernData& e) {
  validate(e);
  return 2 * Rational(e.rank) * e.c2 - Rational(e.rank - 1) * e.c1sq;
}

Rational secondary_slope(const ChernData& e) {
  require_positive_rank(e, "secondary slope");
  if (!e.has_vanishing_c1()) {
    domain_error("chern.mu2_nonzero_c1", "mu2 undefined outside c1 = 0 subcategory");
  }
  return e.c2 / Rational(e.rank);
}

ChernData direct_sum(const ChernData& a, const ChernData& b, const std::optional<Rational>& cross) {
  validate(a);
  validate(b);
  const Rational x = resolve_cross(a, b, cross);
  const TruncatedCh ca = to_ch(a);
  const TruncatedCh cb = to_ch(b);
  return from_ch({ca.ch0 + cb.ch0, ca.ch1_deg + cb.ch1_deg, ca.ch1_sq + cb.ch1_sq + 2 * x,
                  ca.ch2 + cb.ch2});
}

ChernData tensor(const ChernData& a, const ChernData& b, const std::optional<Rational>& cross) {
  validate(a);
  validate(b);
  return from_ch(ch_product(to_ch(a), to_ch(b), resolve_cross(a, b, cross)));
}

ChernData dual(const ChernData& e) {
  validate(e);
  return {e.rank, -e.deg, e.c1sq, e.c2};
}

ChernData endomorphisms(const ChernData& e) { return tensor(e, dual(e), -e.c1sq); }

ProportionalCh proportional_ch(const ChernData& e) {
  validate(e);
  return {Rational(e.rank), 1, (e.c1sq - 2 * e.c2) / 2};
}

ProportionalCh adams(const ProportionalCh& x, const Rational& k) {
  return {x.ch0, k * x.c1_multiple, k * k * x.ch2};
}

ProportionalCh multiply(const ProportionalCh& a, const ProportionalCh& b, const ChernData& base) {
  return {
      a.ch0 * b.ch0,
      a.ch0 * b.c1_multiple + b.ch0 * a.c1_multiple,
      a.ch0 * b.ch2 + b.ch0 * a.ch2 + a.c1_multiple * b.c1_multiple * base.c1sq,
  };
}

ChernData to_chern(const ProportionalCh& x, const ChernData& base) {
  const Rational& lambda = x.c1_multiple;
  return from_ch({x.ch0, lambda * base.deg, lambda * lambda * base.c1sq, x.ch2});
}

namespace {

// Shared Newton recursion; sign = +1 for Sym, -1 for Λ.
std::vector<ProportionalCh> newton_powers(const ChernData& e, unsigned n, int sign) {
  const ProportionalCh base = proportional_ch(e);
  std::vector<ProportionalCh> powers;
  powers.reserve(n + 1);
  powers.push_back({1, 0, 0});
  std::vector<ProportionalCh> psi;
  psi.reserve(n + 1);
  psi.push_back({});
  for (unsigned k = 1; k <= n; ++k) psi.push_back(adams(base, k));

  for (unsigned m = 1; m <= n; ++m) {
    ProportionalCh acc;
    for (unsigned k = 1; k <= m; ++k) {
      const ProportionalCh term = multiply(psi[k], powers[m - k], e);
      const Rational s = (sign > 0 || k % 2 == 1) ? Rational(1) : Rational(-1);
      acc.ch0 += s * term.ch0;
      acc.c1_multiple += s * term.c1_multiple;
      acc.ch2 += s * term.ch2;
    }
    const Rational inv(1, m);
    powers.push_back({acc.ch0 * inv, acc.c1_multiple * inv, acc.ch2 * inv});
  }
  return powers;
}

}  // namespace

ProportionalCh sym_power_ch(const ChernData& e, unsigned n) {
  require_positive_rank(e, "symmetric power");
  return newton_powers(e, n, +1).back();
}

ProportionalCh wedge_power_ch(const ChernData& e, unsigned n) {
  require_positive_rank(e, "exterior power");
  return newton_powers(e, n, -1).back();
}

ChernData sym_power(const ChernData& e, unsigned n) { return to_chern(sym_power_ch(e, n), e); }

ChernData wedge_power(const ChernData& e, unsigned n) {
  require_positive_rank(e, "exterior power");
  if (BigInt(n) > e.rank) return ChernData::zero();
  return to_chern(wedge_power_ch(e, n), e);
}

BigInt sym_rank(const BigInt& r, const BigInt& n) {
  if (r < 1) domain_error("chern.bad_rank", "sym_rank needs rank >= 1");
  if (n < 0) domain_error("chern.negative_power", "sym_rank needs n >= 0");
  return binomial(n + r - 1, r - 1);
}

}  // namespace holobound
