// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/loop.hpp"

using namespace lsa;

namespace {

using LS = LaurentScalar;

const CheckRecord* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  LS a = LS::t(1) + LS(1), b = LS::t(-1) - LS(2);
  LS p = a * b;
  // (t + 1)(1/t - 2) = -2t - 1 + 1/t
  CHECK(p.terms().size() == 3);
  CHECK(p.coeff(1) == FieldScalar(-2));
  CHECK(p.coeff(0) == FieldScalar(-1));
  CHECK(p.coeff(-1) == FieldScalar(1));
  CHECK_FALSE(p.is_unit());
  CHECK(LS::monomial(FieldScalar(3), -2).is_unit());
  CHECK(LS::monomial(FieldScalar(3), -2).inv() == LS::monomial(FieldScalar(Rational(1, 3)), 2));
  CHECK_THROWS_AS(a.inv(), NotAUnit);
  CHECK(LS::divexact(p, a) == b);
  CHECK_THROWS_AS(LS::divexact(a, b), NotExactlyDivisible);
  CHECK(a.substitute(FieldScalar(2), -1) == LS::monomial(FieldScalar(2), -1) + LS(1));
  CHECK(p.evaluate(FieldScalar(1)) == FieldScalar(-2));
  CHECK((a - a).is_zero());
}

TEST_CASE("quadratic extension") {
  LS r = LS::t(1);
  QuadExt s = QuadExt::s_power(1, r);
  CHECK(s * s == QuadExt(r, LS(), r));
  CHECK(QuadExt::s_power(-1, r) * s == QuadExt(LS(1), LS(), r));
  CHECK(QuadExt::s_power(3, r) == QuadExt(LS(), LS::t(1), r));
  CHECK_FALSE(QuadExt::s_power(-3, r).in_base());
  CHECK_THROWS_AS(QuadExt::s_power(1, LS::t(1) + LS(1)), NotAUnit);
}

TEST_CASE("determinant over R") {
  LoopMap m = loop_identity(3);
  m(0, 0) = LS::t(1);
  m(0, 1) = LS(5);
  m(1, 1) = LS::t(-2);
  CHECK(loop_determinant(m) == LS::t(-1));
  m(1, 0) = LS(1);
  m(2, 2) = LS::t(1) + LS(1);
  // Expanded by hand: (t * t^-2 - 5) (t + 1).
  CHECK(loop_determinant(m) == (LS::t(-1) - LS(5)) * (LS::t(1) + LS(1)));
}

TEST_CASE("R-automorphism predicate") {
  Family f = build(FamilyTag::SL, {2, 1});
  std::size_t n = f.g.dim();
  CHECK(is_R_automorphism(f.g, loop_identity(n)).pass());
  LoopMap bad = loop_identity(n);
  bad(0, 0) = LS::t(1) + LS(1);
  Report r = is_R_automorphism(f.g, bad);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(find_check(r, "determinant is a unit")->pass);

  RootPackage rp = root_package(f);
  std::vector<LS> vals(torus_basis(rp.full).size(), LS(1));
  vals[0] = LS::t(1);
  CHECK(is_R_automorphism(f.g, loop_torus(f.g, rp.full, vals)).pass());
  CHECK(is_R_automorphism(f.g, loop_delta(f.g, LS::t(2))).pass());
  // Specializing t -> 2 gives the constant torus element.
  TorusCharacter chi;
  for (const auto& v : vals) chi.values.push_back(v.evaluate(FieldScalar(2)));
  CHECK(loop_specialize(loop_torus(f.g, rp.full, vals), FieldScalar(2)) == torus_action(f.g, rp.full, chi).matrix);
}

TEST_CASE("exp ad over R on sl(2|3)") {
  Family f = build(FamilyTag::SL, {2, 3});
  Vec x = f.mat->coords(elementary(5, 0, 1));
  LoopMap m = loop_exp_ad(f.g, x, LS::t(1));
  CHECK(is_R_automorphism(f.g, m).pass());
  CHECK(loop_specialize(m, FieldScalar(1)) == exp_ad(f.g, x).matrix);
}

TEST_CASE("ring automorphism lifts") {
  RingAutoLift tau = ring_auto_lift(FieldScalar(3), -1);
  LoopVec v = {LS::t(2) + LS(1), LS::t(-1)};
  CHECK(tau.inverse().apply(tau.apply(v)) == v);
  RingAutoLift sh = ring_auto_lift(FieldScalar(2), 1);
  CHECK(sh.inverse().apply(sh.apply(v)) == v);
  CHECK_THROWS(ring_auto_lift(FieldScalar(1), 2));
  Family f = build(FamilyTag::SL, {2, 1});
  CHECK(semidirect_check(f, 7).pass());
}

TEST_CASE("generators over R") {
  for (const auto& s : {FamilySpec{FamilyTag::SL, {2, 3}}, FamilySpec{FamilyTag::W, {3}},
                        FamilySpec{FamilyTag::PSL, {2}}}) {
    CAPTURE(s.str());
    Family f = build(s);
    Report r = theorem_main_generators(f, 11);
    CHECK(r.pass());
  }
  Family w = build(FamilyTag::W, {3});
  Vec z = w.g.subspace("g2").vector(0);
  CHECK(loop_n_membership(w.g, loop_exp_ad(w.g, z, LS::t(2))));
  CHECK_FALSE(loop_n_membership(w.g, loop_delta(w.g, LS::t(1))));
}

TEST_CASE("twisted factorization on H(6)") {
  Family f = build(FamilyTag::H, {6});
  Report r = remark_factorization_check(f, LS::t(1));
  CHECK(find_check(r, "sigma is an R-automorphism")->pass);
  CHECK(find_check(r, "sigma on g_-1 and g_0 root spaces as prescribed")->pass);
  CHECK(find_check(r, "composite Ad(r^-1/2, r^1/2) delta_{r^-1/2}: stabilizes g(R)")->pass);
  CHECK(find_check(r, "composite Ad(r^-1/2, r^1/2) delta_{r^-1/2}: restricts to sigma")->pass);
  const CheckRecord* lit = find_check(r, "printed composite Ad(r^1/2, r^-1/2) delta_{r^1/2}: restricts to sigma");
  REQUIRE(lit != nullptr);
  // The printed composite lands on sigma^{-1}.
  CHECK_FALSE(lit->pass);
  CHECK(lit->witness["sigma_tilde_equals_sigma_inverse"] == true);
  CHECK(find_check(r, "t=2: product of factors equals sigma")->pass);
  CHECK(find_check(r, "t=-1: Ad factor lies in H (automorphism fixing h)")->pass);

  Report one = remark_factorization_check(f, LS(1));
  CHECK(one.pass());
  Report four = remark_factorization_check(f, LS(4));
  CHECK(find_check(four, "t=2: product of factors equals sigma")->pass);
  CHECK_THROWS_AS(remark_factorization_check(f, LS::t(1) + LS(1)), NotAUnit);
  CHECK_THROWS_AS(remark_factorization_check(build(FamilyTag::H, {5}), LS::t(1)), WrongFamily);
}

TEST_CASE("Weyl representatives act by reflections") {
  for (const auto& s : {FamilySpec{FamilyTag::SL, {2, 1}}, FamilySpec{FamilyTag::H, {6}}}) {
    CAPTURE(s.str());
    Family f = build(s);
    CHECK(weyl_representative_check(f).pass());
  }
}
