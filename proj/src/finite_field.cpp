#include "holobound/finite_field.hpp"

#include "holobound/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace holobound {

namespace {

bool small_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

using Poly = std::vector<unsigned>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

Poly digits(unsigned index, unsigned p, unsigned len) {
  Poly c(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

}  // namespace

bool is_irreducible(std::span<const unsigned> poly, unsigned p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;  // constants are not irreducible
  const unsigned deg = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      Poly g = digits(idx, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(unsigned p, unsigned e,
                                                     std::optional<std::vector<unsigned>> modulus,
                                                     unsigned max_size) {
  if (!small_prime(p)) domain_error("field.not_prime", std::to_string(p) + " is not prime");
  if (e < 1) domain_error("field.bad_degree", "extension degree must be >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > max_size / p) {
      resource_error("field.cap_exceeded", "field size exceeds cap " + std::to_string(max_size));
    }
    q *= p;
  }
  if (q > 256) resource_error("field.cap_exceeded", "field elements are stored in one byte");

  Poly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != e + 1 || f.back() != 1) {
      domain_error("field.bad_modulus", "modulus must be monic of degree " + std::to_string(e) +
                                            ", given low degree first");
    }
    for (unsigned c : f) {
      if (c >= p) domain_error("field.bad_modulus", "modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(f, p)) {
      domain_error("field.reducible_modulus", "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    for (unsigned idx = 0; idx < q; ++idx) {
      Poly g = digits(idx, p, e);
      g.push_back(1);
      if (is_irreducible(g, p)) {
        f = g;
        break;
      }
    }
  }

  std::shared_ptr<FiniteField> field(new FiniteField());
  field->p_ = p;
  field->e_ = e;
  field->q_ = q;
  field->modulus_ = f;
  field->add_.resize(q * q);
  field->mul_.resize(q * q);
  field->neg_.resize(q);
  field->inv_.assign(q, 0);

  auto encode = [&](Poly c) {
    c.resize(e, 0);
    unsigned idx = 0;
    for (unsigned i = e; i-- > 0;) idx = idx * p + c[i];
    return static_cast<FqElem>(idx);
  };
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = digits(a, p, e);
    Poly na(e);
    for (unsigned i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    field->neg_[a] = encode(na);
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = digits(b, p, e);
      Poly sum(e);
      for (unsigned i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      field->add_[a * q + b] = encode(sum);
      field->mul_[a * q + b] = encode(poly_mod(poly_mul(pa, pb, p), f, p));
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (field->mul_[a * q + b] == 1) {
        field->inv_[a] = static_cast<FqElem>(b);
        break;
      }
    }
    if (field->inv_[a] == 0) domain_error("field.not_a_field", "element without inverse");
  }

  // canonical key: lexicographic order of (c0, c1, ..., c_{e-1})
  std::vector<unsigned> order(q);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
    return digits(a, p, e) < digits(b, p, e);
  });
  field->key_.resize(q);
  for (unsigned pos = 0; pos < q; ++pos) field->key_[order[pos]] = pos;
  return field;
}

FqElem FiniteField::inv(FqElem a) const {
  if (a == 0) domain_error("field.zero_inverse", "zero has no inverse");
  return inv_[a];
}

FqElem FiniteField::from_int(long long n) const {
  const long long r = ((n % static_cast<long long>(p_)) + p_) % p_;
  return static_cast<FqElem>(r);  // constant polynomial r has index r
}

std::vector<unsigned> FiniteField::coefficients(FqElem a) const { return digits(a, p_, e_); }

FqElem FiniteField::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() > e_) {
    domain_error("field.bad_element", "element has more than " + std::to_string(e_) +
                                          " coefficients");
  }
  unsigned idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) domain_error("field.bad_element", "coefficient outside [0, p)");
    idx = idx * p_ + coeffs[i];
  }
  return static_cast<FqElem>(idx);
}

}  // namespace holobound
