#include "helpers.hpp"

#include "holobound/serre.hpp"

using namespace holobound;
using testing::cd;

TEST_CASE("plane sections") {
  CHECK(h0_plane(0) == 1);
  CHECK(h0_plane(3) == 10);
  CHECK(h0_plane(-1) == 0);
  CHECK(h0_plane(-7) == 0);
}

TEST_CASE("plan examples") {
  SerrePlan p = plan({1});
  CHECK(p.n == 1);
  CHECK(p.h0_qm == 10);
  CHECK(p.lz_min == 11);
  CHECK(p.c2_min == 11);
  CHECK(p.twisted_c2_min == 10);
  CHECK(all_hold(check_assumptions(p, {1})));

  p = plan({-5});
  CHECK(p.n == 1);
  CHECK(p.h0_q == 6);
  CHECK(p.h0_qm == 0);
  CHECK(p.lz_min == 1);
  CHECK(p.c2_min == 1);

  p = plan({0}, 100);
  CHECK(p.n == 1);
  CHECK(p.h0_qm == 6);
  CHECK(p.lz_min == 7);
  CHECK(p.c2_min == 100);

  p = plan({10});
  CHECK(p.q_degree == 12);
  CHECK(all_hold(check_assumptions(p, {10})));
}

TEST_CASE("curve constants") {
  CHECK(alpha_of_curve(4).c2_min == 11);
  CHECK(alpha_of_curve(3).lz_min == 7);
  const SerrePlan p = alpha_of_curve(1);
  CHECK(p.m_degree == -2);
  CHECK(p.h0_qm == 1);
  CHECK(p.lz_min == 2);
  CHECK(testing::error_code([] { alpha_of_curve(0); }) == "serre.bad_curve_degree");
}

TEST_CASE("tampered plans fail") {
  SerrePlan p = plan({1});
  p.lz_min = p.h0_qm;
  const auto checks = check_assumptions(p, {1});
  CHECK_FALSE(all_hold(checks));
  CHECK_FALSE(checks[3].holds);
}

TEST_CASE("plans hold and are minimal on [-20, 20]") {
  for (int m = -20; m <= 20; ++m) {
    const SerrePlan p = plan({m});
    CHECK(all_hold(check_assumptions(p, {m})));
    CHECK(p.lz_min == p.h0_qm + 1);
    CHECK(p.c2_min >= p.lz_min);
    SerrePlan smaller_n = p;
    smaller_n.n -= 1;
    CHECK_FALSE(all_hold(check_assumptions(smaller_n, {m})));
    SerrePlan smaller_lz = p;
    smaller_lz.lz_min -= 1;
    CHECK_FALSE(all_hold(check_assumptions(smaller_lz, {m})));
  }
}

TEST_CASE("twist consistency") {
  for (int m = -20; m <= 20; ++m) {
    const SerrePlan p = plan({m});
    const long long n = p.n.convert_to<long long>();
    const ChernData e = cd(2, 2 * n, 4 * n * n, Rational(p.c2_min));
    const ChernData v = tensor(e, cd(1, -n, n * n, 0), Rational(-2 * n * n));
    CHECK(v.deg == 0);
    CHECK(v.c2 == Rational(p.c2_min - p.n * p.n));
    CHECK(v.c2 == Rational(p.twisted_c2_min));
  }
}
