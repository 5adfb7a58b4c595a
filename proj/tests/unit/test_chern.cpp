#include "helpers.hpp"
#include "oracles.hpp"

#include "holobound/chern.hpp"

using namespace holobound;
using testing::cd;
using testing::error_code;

TEST_CASE("slope") {
  CHECK(slope(cd(2, 0, 0, 0)) == 0);
  CHECK(slope(cd(3, 6, 1, 1)) == 2);
  CHECK(slope(cd(4, -2, 0, 0)) == Rational(-1, 2));
}

TEST_CASE("discriminant") {
  CHECK(discriminant(cd(2, 0, 0, 5)) == 20);
  CHECK(discriminant(cd(1, 7, 3, 0)) == 0);
  CHECK(discriminant(cd(3, 0, 1, 2)) == 10);
}

TEST_CASE("secondary slope") {
  CHECK(secondary_slope(cd(2, 0, 0, 4)) == 2);
  CHECK(secondary_slope(cd(1, 0, 0, 0)) == 0);
  const ChernData v = tensor(cd(2, 0, 0, 1), cd(2, 0, 0, 3), Rational(0));
  CHECK(v == cd(4, 0, 0, 8));
  CHECK(secondary_slope(v) == 2);
  CHECK(error_code([] { secondary_slope(cd(2, 1, 0, 0)); }) == "chern.mu2_nonzero_c1");
  CHECK(error_code([] { secondary_slope(cd(2, 0, 1, 0)); }) == "chern.mu2_nonzero_c1");
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(cd(1, 0, 0, 0), cd(1, 0, 0, 0)) == cd(2, 0, 0, 0));
  CHECK(direct_sum(cd(2, 0, 0, 1), cd(2, 0, 0, 3)) == cd(4, 0, 0, 4));
  // L + L^-1 with c1(L)^2 = 4: the cross pairing is -4.
  CHECK(direct_sum(cd(1, 2, 4, 0), cd(1, -2, 4, 0), Rational(-4)) == cd(2, 0, 0, -4));
  CHECK(error_code([] { direct_sum(cd(1, 2, 4, 0), cd(1, -2, 4, 0)); }) == "chern.cross_required");
  // ch is additive whatever the cross term.
  const ChernData a = cd(2, 1, 3, 2), b = cd(3, -1, 5, 1);
  const TruncatedCh s = to_ch(direct_sum(a, b, Rational(7, 2)));
  CHECK(s.ch0 == to_ch(a).ch0 + to_ch(b).ch0);
  CHECK(s.ch1_deg == to_ch(a).ch1_deg + to_ch(b).ch1_deg);
  CHECK(s.ch2 == to_ch(a).ch2 + to_ch(b).ch2);
}

TEST_CASE("tensor") {
  CHECK(tensor(cd(2, 0, 0, 1), cd(2, 0, 0, 1), Rational(0)) == cd(4, 0, 0, 4));
  const ChernData e = cd(3, 1, Rational(2, 3), 7);
  CHECK(tensor(e, ChernData::trivial()) == e);
  CHECK(tensor(ChernData::trivial(), e) == e);
  for (int n = -3; n <= 3; ++n) {
    const ChernData twisted =
        tensor(cd(2, 2 * n, 4 * n * n, 9), cd(1, -n, n * n, 0), Rational(-2 * n * n));
    CHECK(twisted == cd(2, 0, 0, 9 - n * n));
  }
  CHECK(error_code([] { tensor(cd(2, 1, 1, 0), cd(2, 1, 1, 0)); }) == "chern.cross_required");
}

TEST_CASE("dual") {
  CHECK(dual(cd(2, 0, 0, 5)) == cd(2, 0, 0, 5));
  CHECK(dual(cd(1, 3, 9, 0)) == cd(1, -3, 9, 0));
  CHECK(dual(dual(cd(3, 1, 1, 7))) == cd(3, 1, 1, 7));
  CHECK(slope(dual(cd(3, 1, 1, 7))) == -slope(cd(3, 1, 1, 7)));
}

TEST_CASE("endomorphisms") {
  CHECK(endomorphisms(cd(2, 0, 0, 1)) == cd(4, 0, 0, 4));
  // End E has c1 = 0 and discriminant of E scaled: c2(End E) = 2r c2 - (r-1) c1^2.
  const ChernData e = cd(2, 1, 1, 3);
  const ChernData end = endomorphisms(e);
  CHECK(end.rank == 4);
  CHECK(end.deg == 0);
  CHECK(end.c1sq == 0);
  CHECK(end.c2 == discriminant(e));
}

TEST_CASE("sym and wedge examples") {
  CHECK(sym_power(cd(2, 0, 0, 1), 2) == cd(3, 0, 0, 4));
  for (int c = -3; c <= 3; ++c) CHECK(sym_power(cd(2, 0, 0, c), 2) == cd(3, 0, 0, 4 * c));
  CHECK(wedge_power(cd(2, 3, 5, 7), 2) == cd(1, 3, 5, 0));
  const ChernData e = cd(3, 2, 1, -1);
  CHECK(sym_power(e, 0) == ChernData::trivial());
  CHECK(sym_power(e, 1) == e);
  CHECK(wedge_power(e, 0) == ChernData::trivial());
  CHECK(wedge_power(e, 1) == e);
  CHECK(wedge_power(e, 4).is_zero_object());
  CHECK(sym_power(cd(3, 0, 0, 0), 4).rank == 15);
}

TEST_CASE("sym rank") {
  CHECK(sym_rank(2, 384064) == 384065);
  CHECK(sym_rank(3, 2) == 6);
  CHECK(sym_rank(1, 17) == 1);
  CHECK(sym_rank(4, 0) == 1);
}

TEST_CASE("round trip through the Chern character") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const ChernData e{BigInt(1 + static_cast<int>(rng() % 6)), testing::random_rational(rng),
                      testing::random_rational(rng), testing::random_rational(rng)};
    const TruncatedCh ch = to_ch(e);
    CHECK(ch.ch0 == Rational(e.rank));
    CHECK(ch.ch1_deg == e.deg);
    CHECK(ch.ch2 == (e.c1sq - 2 * e.c2) / 2);
    CHECK(from_ch(ch) == e);
  }
}

TEST_CASE("tensor is the graded product of characters") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const ChernData a{BigInt(1 + static_cast<int>(rng() % 4)), testing::random_rational(rng),
                      testing::random_rational(rng), testing::random_rational(rng)};
    const ChernData b{BigInt(1 + static_cast<int>(rng() % 4)), testing::random_rational(rng),
                      testing::random_rational(rng), testing::random_rational(rng)};
    const Rational cross = testing::random_rational(rng);
    const TruncatedCh x = to_ch(a), y = to_ch(b), z = to_ch(tensor(a, b, cross));
    const Rational r(a.rank), s(b.rank);
    CHECK(z.ch0 == r * s);
    CHECK(z.ch1_deg == r * y.ch1_deg + s * x.ch1_deg);
    CHECK(z.ch1_sq == r * r * y.ch1_sq + s * s * x.ch1_sq + 2 * r * s * cross);
    CHECK(z.ch2 == r * y.ch2 + s * x.ch2 + cross);
  }
}

TEST_CASE("mu2 is additive on the c1 = 0 subcategory") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const ChernData a{BigInt(1 + static_cast<int>(rng() % 5)), 0, 0, testing::random_rational(rng)};
    const ChernData b{BigInt(1 + static_cast<int>(rng() % 5)), 0, 0, testing::random_rational(rng)};
    CHECK(secondary_slope(tensor(a, b, Rational(0))) == secondary_slope(a) + secondary_slope(b));
  }
}

TEST_CASE("sym and wedge agree with the formal-root oracle") {
  for (int r = 1; r <= 3; ++r)
    for (int d = -3; d <= 3; ++d)
      for (int s = -3; s <= 3; ++s)
        for (int c = -3; c <= 3; ++c) {
          if (r == 1 && c != 0) continue;
          const ChernData e = cd(r, d, s, c);
          for (unsigned n = 0; n <= 4; ++n) {
            CHECK(sym_power(e, n) == oracle::formal_sym(e, n));
            CHECK(wedge_power(e, n) == oracle::formal_wedge(e, n));
          }
        }
}

TEST_CASE("sym / wedge alternating sum vanishes") {
  // sum_k (-1)^k Sym^{n-k} Lambda^k = 0 in degrees 0..2, for every rank-1 c2 too.
  for (int r = 1; r <= 3; ++r)
    for (int d = -2; d <= 2; ++d)
      for (int s = -2; s <= 2; ++s)
        for (int c = -2; c <= 2; ++c) {
          const ChernData e = cd(r, d, s, c);
          for (unsigned n = 1; n <= 4; ++n) {
            Rational t0 = 0, t_lambda = 0, t2 = 0;
            for (unsigned k = 0; k <= n; ++k) {
              const ProportionalCh a = sym_power_ch(e, n - k);
              const ProportionalCh b = wedge_power_ch(e, k);
              const int sign = (k % 2 == 0) ? 1 : -1;
              t0 += sign * a.ch0 * b.ch0;
              t_lambda += sign * (a.ch0 * b.c1_multiple + b.ch0 * a.c1_multiple);
              t2 += sign * (a.ch0 * b.ch2 + b.ch0 * a.ch2 + a.c1_multiple * b.c1_multiple * e.c1sq);
            }
            CHECK(t0 == 0);
            CHECK(t_lambda == 0);
            CHECK(t2 == 0);
          }
        }
}

TEST_CASE("validation") {
  CHECK(error_code([] { validate(cd(0, 0, 0, 0)); }) == "<no error>");  // the zero object
  CHECK(error_code([] { validate(cd(0, 1, 0, 0)); }) == "chern.bad_zero_object");
  CHECK(error_code([] { slope(ChernData::zero()); }) == "chern.zero_object");
  CHECK(error_code([] { validate(cd(-1, 0, 0, 0)); }) != "<no error>");
}
