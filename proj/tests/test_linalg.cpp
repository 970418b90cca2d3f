// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "lsa/linalg.hpp"

using namespace lsa;

TEST_CASE("rref examples") {
  auto [r, p] = rref(Matrix::identity(3));
  CHECK(r == Matrix::identity(3));
  CHECK(p.size() == 3);
  auto [z, pz] = rref(Matrix(2, 2));
  CHECK(z.rows() == 0);
  CHECK(pz.empty());
  auto [m, pm] = rref(Matrix::from_ints({{2, 4}, {1, 2}}));
  CHECK(m == Matrix::from_ints({{1, 2}}));
  CHECK(pm == std::vector<std::size_t>{0});
}

TEST_CASE("rref idempotent and rank") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Matrix a(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) a(i, j) = (j + t) % 3 == 0 ? FieldScalar() : rng.scalar();
    auto [r, p] = rref(a);
    auto [r2, p2] = rref(r);
    CHECK(r == r2);
    CHECK(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(3, 3)).dim() == 3);
  Subspace k = kernel(Matrix::from_ints({{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec{FieldScalar(1), FieldScalar(-1)}));
}

TEST_CASE("subspace operations") {
  Subspace a = Subspace::span(2, {{1, 0}});
  Subspace b = Subspace::span(2, {{1, 1}});
  CHECK(subspace_sum(a, Subspace(2)) == a);
  CHECK(subspace_intersection(a, a) == a);
  CHECK(subspace_intersection(a, b).dim() == 0);
  CHECK(subspace_sum(a, b).dim() == 2);
  CHECK(subspace_sum(a, b).contains(b));
  CHECK_THROWS_AS(subspace_sum(a, Subspace(3)), AmbientMismatch);
}

TEST_CASE("generalized eigenspaces") {
  Matrix d = Matrix::from_ints({{1, 0}, {0, 2}});
  CHECK(generalized_eigenspace(d, 1) == Subspace::span(2, {{1, 0}}));
  Matrix j2 = Matrix::from_ints({{0, 1}, {0, 0}});
  CHECK(generalized_eigenspace(j2, 0).dim() == 2);
  Matrix u = Matrix::from_ints({{1, 1}, {0, 1}});
  CHECK(generalized_eigenspace(u, 2).dim() == 0);
  Matrix a = Matrix::from_ints({{2, 1, 0}, {0, 2, 0}, {0, 0, 3}});
  Subspace e = generalized_eigenspace(a, 2);
  CHECK(e.dim() == 2);
  for (const auto& v : e.vectors()) CHECK(e.contains(a * v));
}

TEST_CASE("weight decomposition") {
  auto cands = default_candidates(2);
  auto pcs = weight_decomposition({Matrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})}, 3, cands);
  REQUIRE(pcs.size() == 2);
  CHECK(pcs[0].weight == std::vector<FieldScalar>{FieldScalar(1)});
  CHECK(pcs[0].space.dim() == 2);
  CHECK(pcs[1].space.dim() == 1);
  auto none = weight_decomposition({}, 3, cands);
  REQUIRE(none.size() == 1);
  CHECK(none[0].weight.empty());
  CHECK(none[0].space.dim() == 3);
  CHECK_THROWS_AS(weight_decomposition({Matrix::from_ints({{7}})}, 1, cands), EigenvaluesOutsideCandidateSet);
  // Eigenvalue i of a rotation generator.
  auto rot = weight_decomposition({Matrix::from_ints({{0, -1}, {1, 0}})}, 2, cands);
  CHECK(rot.size() == 2);
}

TEST_CASE("weight decomposition independent of operator order") {
  Matrix a = Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
  Matrix b = Matrix::from_ints({{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto c = default_candidates(2);
  auto ab = weight_decomposition({a, b}, 4, c);
  auto ba = weight_decomposition({b, a}, 4, c);
  REQUIRE(ab.size() == ba.size());
  for (const auto& p : ab) {
    std::vector<FieldScalar> sw{p.weight[1], p.weight[0]};
    auto it = std::find_if(ba.begin(), ba.end(), [&](const WeightPiece& q) { return q.weight == sw; });
    REQUIRE(it != ba.end());
    CHECK(it->space == p.space);
  }
}

TEST_CASE("inverse and determinant") {
  Matrix m = Matrix::from_ints({{2, 1}, {1, 1}});
  CHECK(m * inverse_matrix(m) == Matrix::identity(2));
  CHECK(determinant(m) == FieldScalar(1));
  CHECK_THROWS(inverse_matrix(Matrix::from_ints({{1, 2}, {2, 4}})));
}
