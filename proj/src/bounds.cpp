#include "holobound/bounds.hpp"

#include "holobound/error.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <array>

namespace holobound {

namespace mp = boost::multiprecision;

Rational AmbientSpace::beta_for(const BigInt& rank) const {
  if (auto it = beta.find(rank); it != beta.end()) return it->second;
  if (assume_beta_zero) return 0;
  domain_error("bounds.missing_beta",
               "no beta constant for rank " + rank.str() +
                   "; supply it or explicitly assume beta = 0");
}

void AmbientSpace::validate() const {
  if (dim < 1) domain_error("bounds.bad_dimension", "ambient dimension must be >= 1");
  if (theta_top < 1) domain_error("bounds.bad_theta_top", "Theta^d must be a positive integer");
  for (const auto& [rank, value] : beta) {
    if (rank < 1) domain_error("bounds.bad_beta", "beta keyed by a rank < 1");
    if (value < 0) domain_error("bounds.bad_beta", "beta_" + rank.str() + " is negative");
  }
}

SchurExpansion schur_expansion(unsigned r) {
  if (r < 1) domain_error("bounds.bad_rank", "Jordan constant needs r >= 1");
  const BigInt radicand = BigInt(8) * r;
  const unsigned n = 2 * r * r;
  // (x+1)^N - (x-1)^N = 2 Σ_{k odd} C(N,k) x^k, and x^k = radicand^{(k-1)/2} x.
  BigInt b = 0;
  BigInt binom = 1;  // C(N, k)
  BigInt power = 1;  // radicand^{(k-1)/2}
  for (unsigned k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    if (k % 2 == 1) {
      b += binom * power;
      power *= radicand;
    }
  }
  b *= 2;
  return {radicand, b, ceil_sqrt(radicand * b * b)};
}

namespace {

// RAII MPFR value at a fixed precision.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding at every step.
struct Interval {
  explicit Interval(mpfr_prec_t bits) : lo(bits), hi(bits) {}
  Mpfr lo;
  Mpfr hi;
};

void set_rational(Interval& out, const Rational& q) {
  mpq_t g;
  mpq_init(g);
  const std::string text = mp::numerator(q).str() + "/" + mp::denominator(q).str();
  mpq_set_str(g, text.c_str(), 10);
  mpq_canonicalize(g);
  mpfr_set_q(out.lo.get(), g, MPFR_RNDD);
  mpfr_set_q(out.hi.get(), g, MPFR_RNDU);
  mpq_clear(g);
}

void multiply(Interval& out, const Interval& a, const Interval& b, mpfr_prec_t bits) {
  std::array<const Mpfr*, 2> as{&a.lo, &a.hi};
  std::array<const Mpfr*, 2> bs{&b.lo, &b.hi};
  Mpfr tmp(bits);
  bool first = true;
  for (const Mpfr* x : as) {
    for (const Mpfr* y : bs) {
      mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), out.lo.get())) mpfr_set(out.lo.get(), tmp.get(), MPFR_RNDD);
      mpfr_mul(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), out.hi.get())) mpfr_set(out.hi.get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
}

BigInt ceil_of(const Mpfr& x) {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x.get(), MPFR_RNDU);
  std::string text(mpz_sizeinbase(z, 10) + 2, '\0');
  mpz_get_str(text.data(), 10, z);
  text.resize(std::char_traits<char>::length(text.c_str()));
  BigInt result(text);
  mpz_clear(z);
  return result;
}

// ⌈(r+1)! · r^{p/q}⌉ exactly, for the a = 0 case.
BigInt ceil_factorial_times_rational_power(unsigned r, const Rational& exponent) {
  const BigInt fact = factorial(r + 1);
  const BigInt p = mp::numerator(exponent);
  const BigInt q = mp::denominator(exponent);
  if (q > 64 || mp::abs(p) > 4096) {
    resource_error("bounds.precision", "exponent too large for exact evaluation");
  }
  const unsigned qq = q.convert_to<unsigned>();
  const unsigned pp = mp::abs(p).convert_to<unsigned>();
  const BigInt rr = r;
  // value^q = fact^q · r^p; want smallest J with J^q · den >= num.
  BigInt num = mp::pow(fact, qq);
  BigInt den = 1;
  if (p >= 0) {
    num *= mp::pow(rr, pp);
  } else {
    den = mp::pow(rr, pp);
  }
  BigInt j = ceil_root(num / den, qq);
  while (j > 0 && mp::pow(j - 1, qq) * den >= num) --j;
  while (mp::pow(j, qq) * den < num) ++j;
  return j;
}

BigInt weisfeiler_constant(unsigned r, const jordan::Weisfeiler& w) {
  if (r == 1) return 2;  // 1^anything = 1, so the value is 2! exactly
  if (w.a == 0) return ceil_factorial_times_rational_power(r, w.b);
  if (w.precision_bits < 32) {
    domain_error("bounds.precision", "Weisfeiler evaluation needs at least 32 precision bits");
  }
  const auto bits = static_cast<mpfr_prec_t>(w.precision_bits);

  Interval log_r(bits);
  Mpfr r_exact(bits);
  mpfr_set_ui(r_exact.get(), r, MPFR_RNDN);  // exact for any unsigned at >= 32 bits
  mpfr_log(log_r.lo.get(), r_exact.get(), MPFR_RNDD);
  mpfr_log(log_r.hi.get(), r_exact.get(), MPFR_RNDU);

  Interval a(bits);
  Interval b(bits);
  set_rational(a, w.a);
  set_rational(b, w.b);

  // exponent = a·ln r + b
  Interval exponent(bits);
  multiply(exponent, a, log_r, bits);
  mpfr_add(exponent.lo.get(), exponent.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(exponent.hi.get(), exponent.hi.get(), b.hi.get(), MPFR_RNDU);

  // r^exponent = exp(exponent · ln r)
  Interval power_log(bits);
  multiply(power_log, exponent, log_r, bits);
  Interval value(bits);
  mpfr_exp(value.lo.get(), power_log.lo.get(), MPFR_RNDD);
  mpfr_exp(value.hi.get(), power_log.hi.get(), MPFR_RNDU);

  Interval fact(bits);
  set_rational(fact, Rational(factorial(r + 1)));
  Interval total(bits);
  multiply(total, fact, value, bits);

  if (!mpfr_number_p(total.lo.get()) || !mpfr_number_p(total.hi.get())) {
    resource_error("bounds.precision", "Weisfeiler value overflowed the floating exponent range");
  }
  const BigInt lo = ceil_of(total.lo);
  const BigInt hi = ceil_of(total.hi);
  if (lo != hi) {
    resource_error("bounds.precision",
                   "certified interval does not determine the ceiling at " +
                       std::to_string(w.precision_bits) + " bits; retry with higher precision");
  }
  return lo;
}

}  // namespace

BigInt jordan_constant(unsigned r, const JordanMode& mode) {
  if (r < 1) domain_error("bounds.bad_rank", "Jordan constant needs r >= 1");
  return std::visit(
      [r](const auto& m) -> BigInt {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, jordan::Schur>) {
          return schur_expansion(r).ceiling;
        } else if constexpr (std::is_same_v<M, jordan::Weisfeiler>) {
          return weisfeiler_constant(r, m);
        } else {
          if (m.value < 1) domain_error("bounds.bad_jordan", "explicit J must be >= 1");
          return m.value;
        }
      },
      mode);
}

Rational langer_sum(const BigInt& rank, const AmbientSpace& amb, const Rational& delta_pairing) {
  amb.validate();
  if (rank < 2) domain_error("bounds.rank_too_small", "Langer index undefined for line bundles");
  const Rational r(rank);
  const Rational m(amb.theta_top);
  const Rational beta = amb.beta_for(rank);
  return (r - 1) / r * delta_pairing + Rational(1) / (m * r * (r - 1)) + (r - 1) * beta / (m * r);
}

BigInt langer_index(const ChernData& e, const AmbientSpace& amb, const Rational& delta_pairing) {
  validate(e);
  return floor(langer_sum(e.rank, amb, delta_pairing));
}

BigInt bogomolov_index(const ChernData& e, const AmbientSpace& amb, const Rational& delta_pairing) {
  return langer_index(e, amb, delta_pairing);
}

EllBound ell_bound(unsigned r, const Rational& c, const AmbientSpace& amb, const JordanMode& mode,
                   EllVariant variant) {
  amb.validate();
  if (r < 1) domain_error("bounds.bad_rank", "ell bound needs r >= 1");
  if (c < 0) domain_error("bounds.negative_c2", "ell bound needs c >= 0");
  EllBound out;
  out.jordan = jordan_constant(r, mode);
  out.sym_rank = sym_rank(r, out.jordan);
  if (out.sym_rank <= 1) {
    domain_error("bounds.degenerate_rank",
                 "t = rank Sym^J(E) = " + out.sym_rank.str() + " makes 1/(m t (t-1)) undefined");
  }
  const Rational t(out.sym_rank);
  const Rational m(amb.theta_top);
  const Rational beta = amb.beta_for(out.sym_rank);
  out.delta = 2 * t * c;
  const Rational coefficient =
      variant == EllVariant::as_printed ? (t - 1) / Rational(r) : (t - 1) / t;
  out.sum = coefficient * out.delta + Rational(1) / (m * t * (t - 1)) + (t - 1) * beta / (m * t);
  out.value = floor(out.sum);
  return out;
}

RestrictionReport restriction_report(const ChernData& e, const std::vector<Summand>& end_summands,
                                     const std::vector<Summand>& sym_summands,
                                     const AmbientSpace& amb, const JordanMode& mode) {
  validate(e);
  amb.validate();
  if (e.rank < 1 || e.rank > 1024) {
    domain_error("bounds.bad_rank", "restriction report needs 1 <= rank <= 1024");
  }
  if (end_summands.empty() && sym_summands.empty()) {
    domain_error("bounds.empty_summands", "restriction report needs at least one summand");
  }
  RestrictionReport report;
  report.rank = e.rank;
  const unsigned r = e.rank.convert_to<unsigned>();
  report.jordan = jordan_constant(r, mode);
  report.sym_rank = sym_rank(e.rank, report.jordan);

  std::optional<BigInt> best;
  auto visit = [&](const std::vector<Summand>& list, const std::string& group) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Summand& s = list[i];
      validate(s.chern);
      SummandIndex entry{group, s.chern, std::nullopt};
      if (s.chern.rank < 2) {
        report.warnings.push_back(group + "[" + std::to_string(i) +
                                  "]: rank < 2 summand skipped, index -inf");
      } else {
        Rational delta;
        if (s.delta_pairing) {
          delta = *s.delta_pairing;
        } else if (amb.dim == 2) {
          delta = discriminant(s.chern);
        } else {
          domain_error("bounds.delta_required",
                       "Delta.Theta^{d-1} must be supplied for summands when dim != 2");
        }
        entry.index = langer_index(s.chern, amb, delta);
        if (!best || *entry.index > *best) best = entry.index;
      }
      report.summands.push_back(std::move(entry));
    }
  };
  visit(end_summands, "end");
  visit(sym_summands, "sym");
  if (!best) {
    domain_error("bounds.no_ranked_summand",
                 "every summand has rank < 2; the restriction index is -inf");
  }
  report.ell = *best;
  return report;
}

}  // namespace holobound
