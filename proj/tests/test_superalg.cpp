// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/superalg.hpp"

using namespace lsa;

namespace {

// Test-side oracle: the superalgebra spanned by given (m|n) block matrices, bracket = supercommutator.
struct MatAlg {
  int m, n;
  std::vector<Matrix> basis;
  std::vector<int> par;
};

int mat_parity(const Matrix& x, int m) {
  bool odd = false, even = false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) ((static_cast<int>(i) < m) != (static_cast<int>(j) < m) ? odd : even) = true;
  return odd ? 1 : 0;
}

Matrix elem(int s, int i, int j) {
  Matrix e(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
  e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return e;
}

LieSuperalgebra build(const MatAlg& a) {
  std::size_t s = static_cast<std::size_t>(a.m + a.n);
  std::vector<Vec> flat;
  for (const auto& b : a.basis) {
    Vec v;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) v.push_back(b(i, j));
    flat.push_back(v);
  }
  Subspace span = Subspace::span(s * s, flat);
  REQUIRE(span.dim() == flat.size());
  // Coordinates relative to the given basis via a linear solve.
  Matrix cols(s * s, flat.size());
  for (std::size_t k = 0; k < flat.size(); ++k) cols.set_col(k, flat[k]);
  return LieSuperalgebra("mat", a.par, [&](std::size_t i, std::size_t j) {
    const Matrix& x = a.basis[i];
    const Matrix& y = a.basis[j];
    Matrix c = x * y;
    Matrix d = y * x;
    Matrix br = (a.par[i] & a.par[j]) ? c + d : c - d;
    Vec v;
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t q = 0; q < s; ++q) v.push_back(br(r, q));
    Matrix aug(s * s, flat.size() + 1);
    for (std::size_t r = 0; r < s * s; ++r) {
      for (std::size_t k = 0; k < flat.size(); ++k) aug(r, k) = cols(r, k);
      aug(r, flat.size()) = -v[r];
    }
    Subspace ker = kernel(aug);
    for (const auto& w : ker.vectors())
      if (!w.back().is_zero()) {
        Vec out(flat.size());
        for (std::size_t k = 0; k < flat.size(); ++k) out[k] = w[k] / w.back();
        return out;
      }
    REQUIRE(is_zero(v));
    return Vec(flat.size());
  });
}

MatAlg gl11() {
  MatAlg a{1, 1, {elem(2, 0, 0), elem(2, 1, 1), elem(2, 0, 1), elem(2, 1, 0)}, {0, 0, 1, 1}};
  return a;
}

MatAlg sl21() {
  MatAlg a{2, 1, {}, {}};
  a.basis.push_back(elem(3, 0, 0) - elem(3, 1, 1));
  a.basis.push_back(elem(3, 1, 1) + elem(3, 2, 2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) a.basis.push_back(elem(3, i, j));
  for (const auto& b : a.basis) a.par.push_back(mat_parity(b, 2));
  return a;
}

MatAlg sl22() {
  MatAlg a{2, 2, {}, {}};
  a.basis.push_back(elem(4, 0, 0) - elem(4, 1, 1));
  a.basis.push_back(elem(4, 1, 1) + elem(4, 2, 2));
  a.basis.push_back(elem(4, 2, 2) - elem(4, 3, 3));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) a.basis.push_back(elem(4, i, j));
  for (const auto& b : a.basis) a.par.push_back(mat_parity(b, 2));
  return a;
}

}  // namespace

TEST_CASE("bracket examples") {
  LieSuperalgebra ab("abelian", {0, 0}, [](std::size_t, std::size_t) { return Vec(2); });
  Vec x{FieldScalar(1), FieldScalar(2)};
  CHECK(is_zero(ab.bracket(x, x)));
  auto g = build(sl21());
  // [E12, E21] = E11 - E22 = h1 (basis index 0); E12 is index 2, E21 is index 4.
  Vec r = g.bracket(unit_vec(g.dim(), 2), unit_vec(g.dim(), 4));
  CHECK(r == unit_vec(g.dim(), 0));
  CHECK_THROWS_AS(g.bracket(Vec(3), Vec(3)), DimensionMismatch);
}

TEST_CASE("jacobi check") {
  LieSuperalgebra ab("abelian", {0, 1}, [](std::size_t, std::size_t) { return Vec(2); });
  CHECK(jacobi_check(ab).pass());
  auto g = build(sl21());
  CHECK(structure_check(g).pass());
  auto bad = g.perturbed(2, 4, 1, FieldScalar(1));
  auto rep = jacobi_check(bad);
  CHECK_FALSE(rep.pass());
  CHECK(!rep.checks().back().witness.is_null());
}

TEST_CASE("derived, center, ideals") {
  auto g22 = build(sl22());
  CHECK(g22.dim() == 15);
  Subspace z = center(g22);
  CHECK(z.dim() == 1);
  auto gl = build(gl11());
  CHECK(derived(gl).dim() < gl.dim());
  CHECK(ideal_generated(g22, Subspace::full(15)).dim() == 15);
}

TEST_CASE("quotient") {
  auto g22 = build(sl22());
  auto q0 = quotient(g22, Subspace(15));
  CHECK(q0.algebra.dim() == 15);
  auto q = quotient(g22, center(g22));
  CHECK(q.algebra.dim() == 14);
  CHECK(structure_check(q.algebra).pass());
  // Projection is a homomorphism.
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = 0; j < 15; ++j) {
      Vec a = unit_vec(15, i), b = unit_vec(15, j);
      CHECK(q.project(g22.bracket(a, b)) == q.algebra.bracket(q.project(a), q.project(b)));
    }
  CHECK_THROWS_AS(quotient(g22, Subspace::span(15, {unit_vec(15, 3)})), NotAnIdeal);
}

TEST_CASE("simplicity probe") {
  auto psl = quotient(build(sl22()), center(build(sl22()))).algebra;
  CHECK(simplicity_probe(psl, 5, 1).pass());
  CHECK_FALSE(simplicity_probe(build(gl11()), 5, 1).pass());
  LieSuperalgebra ab("abelian", {0, 0}, [](std::size_t, std::size_t) { return Vec(2); });
  CHECK_FALSE(simplicity_probe(ab, 5, 1).pass());
}

TEST_CASE("normalizer and subalgebra generation") {
  auto g = build(sl21());
  Subspace h = Subspace::span(g.dim(), {unit_vec(g.dim(), 0), unit_vec(g.dim(), 1)});
  CHECK(normalizer(g, h) == h);
  CHECK(centralizer(g, h) == h);
  // E12 and E21 (even) together with odd E13, E31 generate sl(2|1).
  Subspace gens = Subspace::span(g.dim(), {unit_vec(g.dim(), 2), unit_vec(g.dim(), 4), unit_vec(g.dim(), 3),
                                           unit_vec(g.dim(), 6)});
  CHECK(subalgebra_generated(g, gens).dim() == g.dim());
}
