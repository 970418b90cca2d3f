// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/autos.hpp"

using namespace lsa;

TEST_CASE("identity and delta_lambda are automorphisms") {
  Family f = build(FamilyTag::SL, {2, 1});
  CHECK(is_automorphism(f.g, AlgebraMap::identity(f.g.dim())).pass());
  AlgebraMap d = delta_lambda(f.g, FieldScalar(2));
  CHECK(is_automorphism(f.g, d).pass());
  CHECK(delta_lambda(f.g, FieldScalar(1)).is_identity());
  CHECK(fixes_pointwise(d, f.g.subspace("g0ss")));
  // Conjugation by diag(2, 2, 1) acts as 2^deg.
  Matrix x = Matrix::identity(3);
  x(0, 0) = FieldScalar(2);
  x(1, 1) = FieldScalar(2);
  CHECK(ad_conjugation(f, x) == d);
}

TEST_CASE("a parity-mixing map is rejected") {
  Family f = build(FamilyTag::SL, {2, 1});
  Matrix m = Matrix::identity(f.g.dim());
  std::size_t e = 0, o = 0;
  while (f.g.parity(e) != 0) ++e;
  while (f.g.parity(o) != 1) ++o;
  m(o, e) = FieldScalar(1);
  Report r = is_automorphism(f.g, {m});
  CHECK_FALSE(r.pass());
}

TEST_CASE("exp ad of a root vector matches matrix conjugation") {
  Family f = build(FamilyTag::SL, {2, 1});
  std::size_t k = 0;
  while (f.g.labels()[k] != "E1,2") ++k;
  Vec x = unit_vec(f.g.dim(), k);
  AlgebraMap e = exp_ad(f.g, x);
  Matrix X = Matrix::identity(3);
  X(0, 1) = FieldScalar(1);
  CHECK(e == ad_conjugation(f, X));
  CHECK(e.compose(exp_ad(f.g, vec_scale(FieldScalar(-1), x))).is_identity());
  CHECK_FALSE(fixes_pointwise(e, f.g.subspace("g0ss")));
  CHECK(exp_ad(f.g, Vec(f.g.dim())).is_identity());
}

TEST_CASE("delta on W(3) scales graded pieces") {
  Family f = build(FamilyTag::W, {3});
  AlgebraMap d = delta_lambda(f.g, FieldScalar(2));
  for (std::size_t k = 0; k < f.g.dim(); ++k) CHECK(d.matrix(k, k) == FieldScalar(2).pow(f.g.zdeg()[k]));
  CHECK_FALSE(n_membership(f.g, d));
  CHECK(n_membership(f.g, AlgebraMap::identity(f.g.dim())));
}

TEST_CASE("exp ad of g^2 lies in N") {
  Family f = build(FamilyTag::S, {3});
  for (const auto& v : f.g.subspace("g2").vectors()) {
    AlgebraMap e = exp_ad(f.g, v);
    CHECK(n_membership(f.g, e));
    CHECK(is_automorphism(f.g, e).pass());
  }
}

TEST_CASE("type II delta_-1 and root-of-unity guard") {
  Family f = build(FamilyTag::OSP, {3, 2});
  AlgebraMap d = delta_minus_one(f.g);
  CHECK(is_automorphism(f.g, d).pass());
  for (std::size_t k = 0; k < f.g.dim(); ++k) CHECK(d.matrix(k, k) == FieldScalar(f.g.parity(k) ? -1 : 1));
  CHECK_THROWS_AS(delta_lambda(f.g, FieldScalar(2)), LambdaNotRootOfUnity);
}

TEST_CASE("beta_a on H(6)") {
  Family f = build(FamilyTag::H, {6});
  AlgebraMap b = beta_a(f, FieldScalar(1));
  CHECK(is_automorphism(f.g, b).pass());
  CHECK(fixes_pointwise(b, f.g.subspace("g0ss")));
  CHECK(beta_a(f, FieldScalar(0)).is_identity());
  CHECK(b.compose(beta_a(f, FieldScalar(2))) == beta_a(f, FieldScalar(3)));
  CHECK_THROWS_AS(beta_a(build(FamilyTag::H, {5}), FieldScalar(1)), WrongFamily);
}

TEST_CASE("rho on psl(2|2)") {
  Family f = build(FamilyTag::PSL, {2});
  CHECK(psi(Matrix::identity(2)) == FieldScalar(-1) * Matrix::identity(2));
  CHECK(rho(f, Matrix::identity(2)).is_identity());
  Matrix x = Matrix::from_ints({{1, 1}, {0, 1}}), y = Matrix::from_ints({{1, 0}, {1, 1}});
  CHECK(rho(f, x).compose(rho(f, y)) == rho(f, x * y));
  CHECK(is_automorphism(f.g, rho(f, x)).pass());
  CHECK_THROWS_AS(rho(f, Matrix::from_ints({{2, 0}, {0, 1}})), DeterminantNotOne);
  Matrix z = Matrix::identity(4);
  z(0, 0) = FieldScalar(-1);
  z(1, 1) = FieldScalar(-1);
  CHECK(is_automorphism(f.g, ad_conjugation(f, z)).pass());
}

TEST_CASE("supertransposition") {
  Family f = build(FamilyTag::SL, {2, 3});
  AlgebraMap s = supertranspose(f);
  CHECK(is_automorphism(f.g, s).pass());
  Family g = build(FamilyTag::SL, {2, 1});
  AlgebraMap t = supertranspose(g);
  CHECK(t.compose(t).compose(t).compose(t).is_identity());
}

TEST_CASE("torus action") {
  Family f = build(FamilyTag::SL, {2, 1});
  RootPackage rp = root_package(f);
  std::size_t r = torus_basis(rp.full).size();
  CHECK(r == 2);
  CHECK(torus_action(f.g, rp.full, {std::vector<FieldScalar>(r, FieldScalar(1))}).is_identity());
  AlgebraMap t = torus_action(f.g, rp.full, {{FieldScalar(2), FieldScalar(1)}});
  CHECK(is_automorphism(f.g, t).pass());
  CHECK(aut_pi0(f, rp, t));
  CHECK(fixes_pointwise(t, f.g.subspace("h_g0ss")));
}

TEST_CASE("Ad(-I) on S'(4)") {
  Family f = build(FamilyTag::SPRIME, {4});
  AlgebraMap a = grassmann_conjugation(f, GrassmannAutomorphism::scaling(4, FieldScalar(-1)));
  CHECK(is_automorphism(f.g, a).pass());
  CHECK_FALSE(a.is_identity());
  CHECK(a.compose(a).is_identity());
  CHECK(fixes_pointwise(a, f.g.subspace("g0ss")));
}

TEST_CASE("unipotent fixer probe, small") {
  CHECK(lemma_cart_probe(build(FamilyTag::W, {3}), 20, 7).pass());
  CHECK(lemma_cart_probe(build(FamilyTag::H, {6}), 10, 7).pass());
}
