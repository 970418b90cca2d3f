// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/grassmann.hpp"

using namespace lsa;

namespace {

GElem x(int n, int i) { return GElem::var(n, i); }
SuperDerivation dd(int n, int i) { return SuperDerivation::partial(n, i); }

// Random element of fixed degree with small rational coefficients.
GElem random_homogeneous(Rng& rng, int n, int deg) {
  GElem g(n);
  for (Mono m = 0; m < (Mono(1) << n); ++m)
    if (popcount(m) == deg && rng.range(0, 2) == 0) g.add_term(m, rng.scalar(true, 2));
  return g;
}

SuperDerivation random_derivation(Rng& rng, int n, int wdeg) {
  SuperDerivation d(n);
  for (int i = 1; i <= n; ++i) d.coeff(i) = random_homogeneous(rng, n, wdeg + 1);
  return d;
}

}  // namespace

TEST_CASE("g_mul examples") {
  CHECK(x(2, 1) * x(2, 2) == GElem::monomial(2, 0b11));
  CHECK(x(2, 2) * x(2, 1) == GElem::monomial(2, 0b11, -1));
  CHECK((x(2, 1) * x(2, 1)).is_zero());
  CHECK_THROWS_AS(x(2, 1) * x(3, 1), VariableCountMismatch);
  // xi3 xi1 xi2 = xi1 xi2 xi3 (two transpositions)
  CHECK(GElem::product(3, {3, 1, 2}) == GElem::monomial(3, 0b111));
  CHECK(GElem::product(3, {2, 1, 3}) == GElem::monomial(3, 0b111, -1));
}

TEST_CASE("g_partial examples") {
  CHECK(g_partial(1, x(2, 1)) == GElem::constant(2, 1));
  CHECK(g_partial(2, x(2, 1) * x(2, 2)) == -x(2, 1));
  CHECK(g_partial(3, x(3, 1) * x(3, 2)).is_zero());
  CHECK_THROWS_AS(g_partial(4, x(3, 1)), IndexOutOfRange);
}

TEST_CASE("g_partial is an odd derivation") {
  Rng rng(99);
  const int n = 5;
  for (int t = 0; t < 50; ++t) {
    int df = static_cast<int>(rng.range(0, n)), dg = static_cast<int>(rng.range(0, n));
    GElem f = random_homogeneous(rng, n, df), g = random_homogeneous(rng, n, dg);
    for (int i = 1; i <= n; ++i) {
      GElem lhs = g_partial(i, f * g);
      GElem rhs = g_partial(i, f) * g;
      GElem second = f * g_partial(i, g);
      rhs = (df % 2) ? rhs - second : rhs + second;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("d_bracket examples") {
  const int n = 2;
  auto h1 = SuperDerivation::term(n, x(n, 1), 1);
  auto h2 = SuperDerivation::term(n, x(n, 2), 2);
  CHECK(d_bracket(h1, h2).is_zero());
  auto a = SuperDerivation::term(n, x(n, 1), 2);
  auto b = SuperDerivation::term(n, x(n, 2), 1);
  CHECK(d_bracket(a, b) == h1 - h2);
  CHECK(d_bracket(dd(n, 1), a) == dd(n, 2));
  CHECK(d_bracket(h1, dd(n, 1)) == FieldScalar(-1) * dd(n, 1));
  SuperDerivation mixed = dd(n, 1) + h1;
  CHECK_THROWS_AS(d_bracket(mixed, h1), InhomogeneousParity);
}

TEST_CASE("super Jacobi in W(3)") {
  Rng rng(2024);
  const int n = 3;
  for (int t = 0; t < 100; ++t) {
    int d1 = static_cast<int>(rng.range(-1, 2)), d2 = static_cast<int>(rng.range(-1, 2)),
        d3 = static_cast<int>(rng.range(-1, 2));
    auto a = random_derivation(rng, n, d1), b = random_derivation(rng, n, d2), c = random_derivation(rng, n, d3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    int pa = *a.parity(), pb = *b.parity();
    auto lhs = d_bracket(a, d_bracket(b, c));
    auto t1 = d_bracket(d_bracket(a, b), c);
    auto t2 = d_bracket(b, d_bracket(a, c));
    auto rhs = (pa & pb) ? t1 - t2 : t1 + t2;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d_f and poisson examples") {
  CHECK(poisson(x(1, 1), x(1, 1)) == GElem::constant(1, -1));
  CHECK(poisson(x(3, 1) * x(3, 2), x(3, 3)).is_zero());
  auto d = d_f(x(2, 1) * x(2, 2));
  CHECK(d == SuperDerivation::term(2, x(2, 2), 1) - SuperDerivation::term(2, x(2, 1), 2));
}

TEST_CASE("[D_f, D_g] = D_{f,g} on random pairs in Lambda(6)") {
  Rng rng(6);
  const int n = 6;
  int checked = 0;
  while (checked < 100) {
    GElem f = random_homogeneous(rng, n, static_cast<int>(rng.range(1, n)));
    GElem g = random_homogeneous(rng, n, static_cast<int>(rng.range(1, n)));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(d_bracket(d_f(f), d_f(g)) == d_f(poisson(f, g)));
    ++checked;
  }
}

TEST_CASE("phi_conjugate examples") {
  const int n = 3;
  auto d = SuperDerivation::term(n, x(n, 1) * x(n, 2), 3);
  CHECK(phi_conjugate(GrassmannAutomorphism::identity(n), d) == d);
  FieldScalar lam(3);
  auto sc = GrassmannAutomorphism::scaling(n, lam);
  CHECK(phi_conjugate(sc, dd(n, 1)) == lam.inv() * dd(n, 1));
  // B_a on Lambda(4): agrees with D_{xi1 xi2} modulo W-degree >= 2.
  auto ba = b_a(4, FieldScalar(1));
  auto df = d_f(x(4, 1) * x(4, 2));
  auto c = phi_conjugate(ba, df);
  CHECK((c - df).min_degree() >= 2);
  // On d/dxi_1 the correction is nonzero and sits in W-degree 2l-3 = 1.
  auto p1 = phi_conjugate(ba, dd(4, 1));
  auto diff = p1 - dd(4, 1);
  CHECK(!diff.is_zero());
  CHECK(diff.min_degree() == 1);
}

TEST_CASE("automorphism inverse and multiplicativity") {
  const int n = 4;
  std::vector<GElem> im{x(n, 1) + x(n, 2) * x(n, 3) * x(n, 4), x(n, 2) - x(n, 1), FieldScalar(2) * x(n, 3),
                        x(n, 4) + x(n, 1) * x(n, 2) * x(n, 3)};
  GrassmannAutomorphism phi(im);
  auto inv = phi.inverse();
  CHECK(phi.compose(inv) == GrassmannAutomorphism::identity(n));
  CHECK(inv.compose(phi) == GrassmannAutomorphism::identity(n));
  auto psi = b_a(n, FieldScalar(Rational(1, 2)));
  auto d = SuperDerivation::term(n, x(n, 2), 1) + SuperDerivation::term(n, x(n, 1) * x(n, 3) * x(n, 4), 2);
  CHECK(phi_conjugate(phi.compose(psi), d) == phi_conjugate(phi, phi_conjugate(psi, d)));
  CHECK_THROWS_AS(GrassmannAutomorphism({x(2, 1), x(2, 1)}), NonInvertibleLinearPart);
}

TEST_CASE("B_a additivity") {
  auto a = b_a(4, FieldScalar(2)), b = b_a(4, FieldScalar(3));
  CHECK(a.compose(b) == b_a(4, FieldScalar(5)));
}

TEST_CASE("eta change") {
  auto eta = eta_change(2);
  FieldScalar s = FieldScalar(Rational(1, 2)) * FieldScalar::sqrt2();
  CHECK(eta.image(1) == s * x(2, 1) + s * FieldScalar::i() * x(2, 2));
  CHECK(eta.compose(eta.inverse()) == GrassmannAutomorphism::identity(2));
  // {eta_1, eta_2} computed in xi coordinates equals the eta-form value -1; {eta_1, eta_1} = 0.
  CHECK(poisson(eta.image(1), eta.image(2)) == GElem::constant(2, -1));
  CHECK(poisson(eta.image(1), eta.image(1)).is_zero());
  // eta-form bracket against direct computation on random pairs in Lambda(5).
  const int n = 5, l = 2;
  auto e5 = eta_change(n);
  std::vector<SuperDerivation> deta;
  for (int i = 1; i <= n; ++i) deta.push_back(phi_conjugate(e5, dd(n, i)));
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    GElem f = random_homogeneous(rng, n, static_cast<int>(rng.range(1, 4)));
    GElem g = random_homogeneous(rng, n, static_cast<int>(rng.range(1, 4)));
    GElem s2(n);
    for (int i = 1; i <= l; ++i) {
      s2 += d_apply(deta[static_cast<std::size_t>(i + l - 1)], f) * d_apply(deta[static_cast<std::size_t>(i - 1)], g);
      s2 += d_apply(deta[static_cast<std::size_t>(i - 1)], f) * d_apply(deta[static_cast<std::size_t>(i + l - 1)], g);
    }
    s2 += d_apply(deta[4], f) * d_apply(deta[4], g);
    if (*f.parity()) s2 = -s2;
    CHECK(s2 == poisson(f, g));
  }
}
