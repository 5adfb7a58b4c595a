#include "holobound/serre.hpp"

#include "holobound/chern.hpp"
#include "holobound/error.hpp"

#include <algorithm>

namespace holobound {

BigInt h0_plane(const BigInt& d) {
  if (d < 0) return 0;
  return (d + 2) * (d + 1) / 2;
}

namespace {

// c2 of E ⊗ O(-n) for rank-2 E with c1(E) = 2nH on P² (H² = 1).
BigInt twisted_c2(const BigInt& n, const BigInt& c2) {
  const Rational nn(n);
  const ChernData e{2, 2 * nn, 4 * nn * nn, Rational(c2)};
  const ChernData line{1, -nn, nn * nn, 0};
  const ChernData v = tensor(e, line, -2 * nn * nn);
  return boost::multiprecision::numerator(v.c2);
}

}  // namespace

SerrePlan plan(const PlaneLineBundle& m, const BigInt& extra_stability_floor) {
  SerrePlan p;
  p.m_degree = m.degree;
  // least n >= 1 with 2n > deg M
  p.n = m.degree < 2 ? BigInt(1) : m.degree / 2 + 1;
  p.q_degree = 2 * p.n;
  p.h0_q = h0_plane(p.q_degree);
  p.h0_qm = h0_plane(p.q_degree + m.degree);
  p.lz_min = p.h0_qm + 1;
  p.stability_floor = extra_stability_floor;
  p.c2_min = std::max(p.lz_min, extra_stability_floor);
  p.twisted_c2_min = twisted_c2(p.n, p.c2_min);
  return p;
}

SerrePlan alpha_of_curve(const BigInt& curve_degree, const BigInt& extra_stability_floor) {
  if (curve_degree < 1) domain_error("serre.bad_curve_degree", "curve degree must be >= 1");
  return plan(PlaneLineBundle{curve_degree - 3}, extra_stability_floor);
}

std::vector<ConditionCheck> check_assumptions(const SerrePlan& p, const PlaneLineBundle& m) {
  const BigInt q_degree = 2 * p.n;
  return {
      {"n >= 1 (Q = 2n Theta is a positive multiple)", p.n >= 1},
      {"h0(Q) > 0", h0_plane(q_degree) > 0},
      {"deg Q > deg M", q_degree > m.degree},
      {"l(Z) > h0(Q (x) M)", p.lz_min > h0_plane(q_degree + m.degree)},
  };
}

}  // namespace holobound
