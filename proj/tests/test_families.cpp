// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/families.hpp"

using namespace lsa;

namespace {

std::size_t pow2(int n) { return std::size_t{1} << n; }

std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

TEST_CASE("dimensions of the default instances") {
  struct Row {
    FamilySpec s;
    std::size_t dim;
  };
  std::vector<Row> rows = {
      {{FamilyTag::SL, {2, 3}}, 24},  {{FamilyTag::SL, {3, 1}}, 15},  {{FamilyTag::PSL, {2}}, 14},
      {{FamilyTag::PSL, {3}}, 34},    {{FamilyTag::OSP, {3, 2}}, 12}, {{FamilyTag::OSP, {4, 2}}, 17},
      {{FamilyTag::OSP, {2, 4}}, 19}, {{FamilyTag::P, {3}}, 17},      {{FamilyTag::Q, {3}}, 18},
      {{FamilyTag::PSQ, {3}}, 16},    {{FamilyTag::W, {2}}, 2 * pow2(2)}, {{FamilyTag::W, {3}}, 3 * pow2(3)},
      {{FamilyTag::S, {3}}, 2 * pow2(3) + 1}, {{FamilyTag::S, {4}}, 3 * pow2(4) + 1},
      {{FamilyTag::SPRIME, {4}}, 3 * pow2(4) + 1}, {{FamilyTag::H, {5}}, pow2(5) - 2},
      {{FamilyTag::H, {6}}, pow2(6) - 2}, {{FamilyTag::HTILDE, {6}}, pow2(6) - 1}};
  for (const auto& r : rows) {
    CAPTURE(r.s.str());
    Family f = build(r.s);
    CHECK(f.g.dim() == r.dim);
  }
}

TEST_CASE("built algebras satisfy the structure axioms") {
  for (const auto& s : std::vector<FamilySpec>{{FamilyTag::SL, {2, 1}},
                                               {FamilyTag::PSL, {2}},
                                               {FamilyTag::OSP, {3, 2}},
                                               {FamilyTag::OSP, {2, 4}},
                                               {FamilyTag::P, {3}},
                                               {FamilyTag::PSQ, {3}},
                                               {FamilyTag::W, {3}},
                                               {FamilyTag::S, {3}},
                                               {FamilyTag::SPRIME, {4}},
                                               {FamilyTag::H, {5}}}) {
    CAPTURE(s.str());
    Family f = build(s);
    Report r = structure_check(f.g);
    CHECK(r.pass());
    Report sp = simplicity_probe(f.g, 4, 7);
    CHECK(sp.pass());
  }
}

TEST_CASE("grading is additive on brackets") {
  Family f = build(FamilyTag::H, {6});
  const auto& z = f.g.zdeg();
  for (std::size_t i = 0; i < f.g.dim(); ++i)
    for (std::size_t j = 0; j < f.g.dim(); ++j)
      for (const auto& e : f.g.bracket_basis(i, j)) REQUIRE(z[e.k] == z[i] + z[j]);
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(build(FamilyTag::SPRIME, {3}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(FamilyTag::SL, {2, 2}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(FamilyTag::H, {4}), ParameterOutOfRange);
  CHECK_THROWS_AS(build(FamilyTag::P, {2}), ParameterOutOfRange);
  CHECK_THROWS_AS(FamilySpec::parse("XYZ", {1}), ParameterOutOfRange);
  CHECK(FamilySpec::parse("sl", {2, 1}).str() == "sl(2|1)");
}

TEST_CASE("type I grading element") {
  Family f = build(FamilyTag::SL, {2, 1});
  Vec z = grading_element(f.g);
  // z is proportional to diag(1,1,2).
  Matrix zm = f.mat->matrix(z);
  CHECK(zm(0, 1).is_zero());
  CHECK(zm(0, 0) == zm(1, 1));
  CHECK(zm(2, 2) == FieldScalar(2) * zm(0, 0));
  std::vector<int> deg = type_one_grading(f.g);
  CHECK(deg == f.g.zdeg());

  Family o = build(FamilyTag::OSP, {2, 4});
  std::vector<int> od = type_one_grading(o.g);
  CHECK(std::count(od.begin(), od.end(), 1) == 4);
  CHECK(std::count(od.begin(), od.end(), -1) == 4);

  Family t = build(FamilyTag::OSP, {3, 2});
  CHECK_THROWS_AS(type_one_grading(t.g), NoGradingElement);
}

TEST_CASE("Cartan subsuperalgebras") {
  Family h6 = build(FamilyTag::H, {6});
  CHECK(h6.g.subspace("h_g0ss").dim() == 3);
  CHECK(h6.g.subspace("h_1bar").dim() == 0);
  CHECK(h6.g.subspace("g2").contains(h6.g.subspace("h2")));
  CHECK(h6.g.subspace("g0").dim() == binom(6, 2));
  CHECK(h6.g.subspace("g0ss") == h6.g.subspace("g0"));

  Family h5 = build(FamilyTag::H, {5});
  CHECK(h5.g.subspace("h_1bar").dim() == 3);
  CHECK(h5.g.subspace("h_g0ss").dim() == 2);

  Family w2 = build(FamilyTag::W, {2});
  CHECK(w2.g.subspace("h_0bar").dim() == 2);
  CHECK(w2.g.subspace("h2").dim() == 0);
  CHECK(w2.g.subspace("g0ss").dim() == 3);

  for (const auto& s : std::vector<FamilySpec>{{FamilyTag::SL, {2, 1}},
                                               {FamilyTag::W, {2}},
                                               {FamilyTag::OSP, {3, 2}},
                                               {FamilyTag::PSQ, {3}},
                                               {FamilyTag::H, {5}},
                                               {FamilyTag::S, {3}}}) {
    CAPTURE(s.str());
    Family f = build(s);
    CHECK(self_normalizing_nilpotent_check(f.g, f.g.subspace("h")).pass());
  }
}

TEST_CASE("a root vector adjoined to the Cartan breaks the check") {
  Family f = build(FamilyTag::SL, {2, 1});
  Subspace h = f.g.subspace("h");
  // E_{1,2} is a root vector; h + k E_{1,2} is a subalgebra but not self-normalizing.
  std::size_t k = 0;
  while (f.g.labels()[k] != "E1,2") ++k;
  Subspace bad = subspace_sum(h, Subspace::span(f.g.dim(), {unit_vec(f.g.dim(), k)}));
  CHECK_FALSE(self_normalizing_nilpotent_check(f.g, bad).pass());
  Subspace notsub = Subspace::span(f.g.dim(), {unit_vec(f.g.dim(), k), unit_vec(f.g.dim(), k + 1)});
  CHECK_THROWS_AS(self_normalizing_nilpotent_check(f.g, notsub), NotASubalgebra);
}

TEST_CASE("H(n): f -> D_f kills only constants, and D_top lies outside H(n)") {
  for (int n : {5, 6}) {
    std::vector<Vec> rows;
    std::size_t cols = static_cast<std::size_t>(n) << n;
    for (Mono m = 0; m < (Mono{1} << n); ++m) {
      SuperDerivation d = d_f(GElem::monomial(n, m));
      Vec v(cols);
      for (int i = 1; i <= n; ++i)
        for (const auto& [mm, c] : d.coeff(i).terms()) v[(static_cast<std::size_t>(i - 1) << n) + mm] = c;
      rows.push_back(v);
    }
    Subspace k = kernel(Matrix::from_rows(rows, cols).transpose());
    REQUIRE(k.dim() == 1);
    CHECK(k.vector(0) == unit_vec(pow2(n), 0));
    Family h = build(FamilyTag::H, {n});
    CHECK_FALSE(h.der->try_coords(d_f(GElem::monomial(n, (Mono{1} << n) - 1))).has_value());
    CHECK(h.g.dim() == pow2(n) - 2);
  }
}

TEST_CASE("functionals give the expected weights on root vectors") {
  Family f = build(FamilyTag::SL, {2, 1});
  std::size_t k = 0;
  while (f.g.labels()[k] != "E1,3") ++k;
  Vec e = unit_vec(f.g.dim(), k);
  Vec w = f.weight({1, 0}, {-1});
  for (std::size_t c = 0; c < f.g.cartan_basis().size(); ++c)
    CHECK(f.g.bracket(f.g.cartan_basis()[c], e) == vec_scale(w[c], e));
}

TEST_CASE("S'(4) is graded modulo 4") {
  Family f = build(FamilyTag::SPRIME, {4});
  CHECK(f.g.zmod() == 4);
  const auto& z = f.g.zdeg();
  for (std::size_t i = 0; i < f.g.dim(); ++i)
    for (std::size_t j = 0; j < f.g.dim(); ++j)
      for (const auto& e : f.g.bracket_basis(i, j)) REQUIRE(((z[e.k] - z[i] - z[j]) % 4 + 4) % 4 == 0);
  // The degree -1 elements d_i - top d_i lie outside S(4).
  Family s = build(FamilyTag::S, {4});
  std::size_t found = 0;
  for (std::size_t k = 0; k < f.g.dim(); ++k)
    if (z[k] == -1) {
      ++found;
      CHECK_FALSE(s.der->try_coords(f.der->basis[k]).has_value());
    }
  CHECK(found == 4);
}
