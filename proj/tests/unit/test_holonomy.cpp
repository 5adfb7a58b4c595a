#include "helpers.hpp"
#include "oracles.hpp"

#include "holobound/bounds.hpp"
#include "holobound/finite_field.hpp"
#include "holobound/group_table.hpp"
#include "holobound/matrix_group.hpp"

#include <set>

using namespace holobound;
using testing::error_code;

namespace {

const std::pair<unsigned, unsigned> kFields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

FqMatrix mat2(const FiniteField& f, long long a, long long b, long long c, long long d) {
  return FqMatrix{2, {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)}};
}

FreeGroupRep elementary_rep(const FieldPtr& f) {
  return FreeGroupRep{f, 2, {mat2(*f, 1, 1, 0, 1), mat2(*f, 1, 0, 1, 1)}};
}

}  // namespace

TEST_CASE("field construction") {
  const FieldPtr f2 = FiniteField::make(2, 1);
  CHECK(f2->size() == 2);
  const FieldPtr f4 = FiniteField::make(2, 2, std::vector<unsigned>{1, 1, 1});
  CHECK(f4->size() == 4);
  CHECK(error_code([] { FiniteField::make(2, 2, std::vector<unsigned>{1, 0, 1}); }) ==
        "field.reducible_modulus");
  CHECK(error_code([] { FiniteField::make(4, 1); }) == "field.not_prime");
  CHECK(error_code([] { FiniteField::make(2, 7); }) == "field.cap_exceeded");
  CHECK(error_code([] { FiniteField::make(3, 5); }) == "field.cap_exceeded");
  CHECK(FiniteField::make(3, 4)->size() == 81);
}

TEST_CASE("field axioms") {
  for (auto [p, e] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 2u}, {3u, 4u}, {2u, 6u}}) {
    const FieldPtr f = FiniteField::make(p, e);
    const unsigned q = f->size();
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == f->zero());
      CHECK(f->mul(a, f->one()) == a);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == f->one());
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == f->mul(b, a));
        if (a != 0 && b != 0) CHECK(f->mul(a, b) != f->zero());
      }
    }
    std::set<unsigned> keys;
    for (unsigned a = 0; a < q; ++a) keys.insert(f->canonical_key(a));
    CHECK(keys.size() == q);
    CHECK(error_code([&] { f->inv(0); }) == "field.zero_inverse");
  }
}

TEST_CASE("sl2 generation matches order formula and determinant filter") {
  for (auto [p, e] : kFields) {
    const FieldPtr f = FiniteField::make(p, e);
    const MatrixGroup g = sl2_generate(f);
    const std::size_t q = f->size();
    CHECK(g.order() == q * q * q - q);
    std::set<std::vector<FqElem>> enumerated;
    for (const auto& m : g.elements) {
      CHECK(determinant(*f, m) == f->one());
      enumerated.insert(m.entries);
    }
    CHECK(enumerated == oracle::sl2_by_filter(*f));
    for (std::size_t i = 1; i < g.elements.size(); ++i) {
      CHECK(canonical_less(*f, g.elements[i - 1], g.elements[i]));
    }
  }
}

TEST_CASE("the two elementary matrices only reach SL(2, F_p)") {
  for (auto [p, e] : kFields) {
    const FieldPtr f = FiniteField::make(p, e);
    const std::size_t pp = p;
    CHECK(elementary_closure(f).order() == pp * pp * pp - pp);
    CHECK(sl2_generators(*f).size() == 2 * e);
  }
}

TEST_CASE("closure caps") {
  const FieldPtr f = FiniteField::make(7, 1);
  CHECK(error_code([&] { sl2_generate(f, 100); }) == "group.cap_exceeded");
}

TEST_CASE("matrix functors") {
  const FieldPtr f = FiniteField::make(5, 1);
  const FqMatrix a = mat2(*f, 1, 2, 3, 4);
  const FqMatrix b = mat2(*f, 2, 0, 1, 3);
  CHECK(dual_matrix(*f, dual_matrix(*f, a)) == a);
  CHECK(wedge_power_matrix(*f, a, 2) == FqMatrix{1, {determinant(*f, a)}});
  // Sym^n and Lambda^n are multiplicative.
  const FqMatrix ab = multiply(*f, a, b);
  for (unsigned n = 1; n <= 3; ++n) {
    CHECK(sym_power_matrix(*f, ab, n) ==
          multiply(*f, sym_power_matrix(*f, a, n), sym_power_matrix(*f, b, n)));
  }
  CHECK(kronecker(*f, ab, ab) == multiply(*f, kronecker(*f, a, a), kronecker(*f, b, b)));
  CHECK(sym_power_matrix(*f, a, 2).dim == 3);
  CHECK(error_code([&] { inverse(*f, mat2(*f, 1, 2, 2, 4)); }) == "matrix.singular");
}

TEST_CASE("burnside examples") {
  const FieldPtr f3 = FiniteField::make(3, 1);
  const auto natural = burnside_irreducible(*f3, 2, elementary_rep(f3).images);
  CHECK(natural.irreducible);
  CHECK(natural.span_dim == 4);

  const FieldPtr f5 = FiniteField::make(5, 1);
  const auto diag = burnside_irreducible(*f5, 2, {mat2(*f5, 2, 0, 0, 3)});
  CHECK_FALSE(diag.irreducible);
  CHECK(diag.span_dim == 2);

  const auto trivial = burnside_irreducible(*f3, 2, {identity_matrix(2)});
  CHECK_FALSE(trivial.irreducible);
  CHECK(trivial.span_dim == 1);

  const FreeGroupRep sym2 = associated_rep(elementary_rep(f3), functor::Sym{2});
  CHECK(sym2.dim == 3);
  const auto s2 = burnside_irreducible(*f3, 3, sym2.images);
  CHECK(s2.irreducible);
  CHECK(s2.span_dim == 9);

  const auto sym1 = associated_rep(elementary_rep(f3), functor::Sym{1});
  CHECK(burnside_irreducible(*f3, 2, sym1.images).irreducible);

  const auto upper = burnside_irreducible(*f3, 2, {mat2(*f3, 1, 1, 0, 1), mat2(*f3, 2, 0, 0, 2)});
  CHECK_FALSE(upper.irreducible);
}

TEST_CASE("burnside agrees with the common eigenvector oracle in dimension 2") {
  std::mt19937_64 rng(41);
  for (auto [p, e] : kFields) {
    const FieldPtr f = FiniteField::make(p, e);
    const unsigned q = f->size();
    auto random_invertible = [&] {
      for (;;) {
        FqMatrix m{2, {static_cast<FqElem>(rng() % q), static_cast<FqElem>(rng() % q),
                       static_cast<FqElem>(rng() % q), static_cast<FqElem>(rng() % q)}};
        if (determinant(*f, m) != f->zero()) return m;
      }
    };
    for (int i = 0; i < 60; ++i) {
      std::vector<FqMatrix> gens;
      const int kind = i % 3;
      if (kind == 0) {
        gens = {random_invertible()};
      } else if (kind == 1) {
        gens = {random_invertible(), random_invertible()};
      } else {
        // Upper triangular pairs, conjugated, to exercise reducible cases.
        const FqElem a = 1 + rng() % (q - 1), d = 1 + rng() % (q - 1);
        const FqMatrix t1{2, {a, static_cast<FqElem>(rng() % q), 0, d}};
        const FqMatrix t2{2, {d, static_cast<FqElem>(rng() % q), 0, a}};
        const FqMatrix c = random_invertible();
        const FqMatrix ci = inverse(*f, c);
        gens = {multiply(*f, multiply(*f, c, t1), ci), multiply(*f, multiply(*f, c, t2), ci)};
      }
      const bool reducible = !burnside_irreducible(*f, 2, gens).irreducible;
      CHECK(reducible == oracle::common_eigenvector(*f, gens));
    }
  }
}

TEST_CASE("holonomy") {
  const FieldPtr f3 = FiniteField::make(3, 1);
  const MatrixGroup target = sl2_generate(f3);
  const HolonomyResult full = holonomy(elementary_rep(f3), &target);
  CHECK(full.group.order() == 24);
  CHECK(full.full == true);

  const FreeGroupRep trivial{f3, 2, {identity_matrix(2), identity_matrix(2)}};
  const HolonomyResult t = holonomy(trivial, &target);
  CHECK(t.group.order() == 1);
  CHECK(t.full == false);

  const FreeGroupRep upper{f3, 2, {mat2(*f3, 1, 1, 0, 1), mat2(*f3, 2, 0, 0, 2)}};
  const HolonomyResult u = holonomy(upper, &target);
  CHECK(u.group.order() == 6);
  CHECK(u.full == false);
  CHECK_FALSE(burnside_irreducible(*f3, 2, u.group.generators).irreducible);

  CHECK_FALSE(holonomy(elementary_rep(f3)).full.has_value());
}

TEST_CASE("holonomy commutes with matrix functors") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const FieldPtr f = FiniteField::make(p, e);
    const FreeGroupRep rep = elementary_rep(f);
    const MatrixGroup g = holonomy(rep).group;
    const std::vector<RepFunctor> functors = {functor::Dual{}, functor::Sym{1}, functor::Sym{2},
                                              functor::Sym{3}, functor::Wedge{2},
                                              functor::TensorWith{rep}};
    for (const RepFunctor& fn : functors) {
      const FreeGroupRep assoc = associated_rep(rep, fn);
      const MatrixGroup h = holonomy(assoc).group;
      std::set<std::vector<FqElem>> image;
      for (const auto& m : g.elements) {
        const FqMatrix fm = std::holds_alternative<functor::TensorWith>(fn) ? kronecker(*f, m, m)
                                                                            : apply_functor(*f, fn, m);
        image.insert(fm.entries);
      }
      std::set<std::vector<FqElem>> got;
      for (const auto& m : h.elements) got.insert(m.entries);
      CHECK(got == image);
    }
    const FreeGroupRep det = associated_rep(rep, functor::Wedge{2});
    for (const auto& m : det.images) CHECK(m == identity_matrix(1));
    const FreeGroupRep dd = associated_rep(associated_rep(rep, functor::Dual{}), functor::Dual{});
    CHECK(dd.images == rep.images);
  }
}

TEST_CASE("associated rep errors") {
  const FieldPtr f3 = FiniteField::make(3, 1);
  const FieldPtr f5 = FiniteField::make(5, 1);
  CHECK(error_code([&] { associated_rep(elementary_rep(f3), functor::TensorWith{elementary_rep(f5)}); }) ==
        "rep.field_mismatch");
  CHECK(error_code([&] { associated_rep(elementary_rep(f3), functor::Sym{20}); }) == "rep.dim_cap");
}

TEST_CASE("tables from matrix groups") {
  const FieldPtr f2 = FiniteField::make(2, 1);
  const FiniteGroupTable s3 = table_from_matrix_group(sl2_generate(f2));
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.exponent() == 6);

  const FiniteGroupTable one = table_from_matrix_group(generate_group(f2, 2, {identity_matrix(2)}));
  CHECK(one.order() == 1);

  const FieldPtr f3 = FiniteField::make(3, 1);
  const FiniteGroupTable c3 = table_from_matrix_group(generate_group(f3, 2, {mat2(*f3, 1, 1, 0, 1)}));
  CHECK(c3.order() == 3);
  CHECK(c3.is_abelian());
}

TEST_CASE("table validation") {
  CHECK(error_code([] { FiniteGroupTable::from_table({0, 1, 1, 1}, 2); }) != "<no error>");
  CHECK(error_code([] { FiniteGroupTable::from_table({0, 1, 2}, 2); }) != "<no error>");
  // Latin square without associativity: a loop of order 5.
  const std::vector<std::uint32_t> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                           3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(error_code([&] { FiniteGroupTable::from_table(loop, 5); }) != "<no error>");
}

TEST_CASE("jordan verification on fixtures") {
  const BigInt j2 = jordan_constant(2, jordan::Schur{});
  const BigInt j3 = jordan_constant(3, jordan::Schur{});
  struct Case {
    const char* name;
    std::size_t order;
    std::size_t index;
  };
  for (const Case c : {Case{"s3", 6, 2}, Case{"d4", 8, 2}, Case{"q8", 8, 2}, Case{"a4", 12, 3},
                       Case{"s4", 24, 6}, Case{"sl2:2:1", 6, 2}, Case{"sl2:3:1", 24, 12}}) {
    CAPTURE(c.name);
    const FiniteGroupTable g = named_group(c.name);
    const unsigned r = natural_dimension(c.name);
    const JordanCertificate cert = jordan_verify(g, r, r == 2 ? j2 : j3);
    CHECK(cert.group_order == c.order);
    CHECK(cert.index == c.index);
    CHECK(cert.index == oracle::min_abelian_normal_index(g));
    CHECK(cert.holds);
    CHECK(cert.abelian_verified);
    CHECK(cert.normal_verified);
    CHECK(is_abelian_subset(g, cert.normal_subgroup));
    CHECK(is_normal_subset(g, cert.normal_subgroup));
  }
}

TEST_CASE("jordan verification corner cases") {
  const FieldPtr f5 = FiniteField::make(5, 1);
  const FiniteGroupTable cyclic = table_from_matrix_group(generate_group(f5, 2, {mat2(*f5, 2, 0, 0, 3)}));
  const JordanCertificate c = jordan_verify(cyclic, 2, 1);
  CHECK(c.index == 1);
  CHECK(c.holds);
  // A bound below the true index is reported, not hidden.
  CHECK_FALSE(jordan_verify(named_group("s4"), 3, 5).holds);
  const FieldPtr f8 = FiniteField::make(2, 3);
  CHECK(error_code([&] { jordan_verify(table_from_matrix_group(sl2_generate(f8)), 2, 1); }) ==
        "jordan.cap_exceeded");
}
