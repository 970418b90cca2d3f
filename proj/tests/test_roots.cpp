// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <set>

#include "lsa/roots.hpp"

using namespace lsa;

namespace {

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end(), tuple_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Weights of the monomial basis xi^M d_i of W(n): sum_{m in M} eps_m - eps_i.
std::vector<Weight> w_oracle(const Family& f, int n) {
  std::vector<Weight> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    for (int i = 0; i < n; ++i) {
      std::vector<long> a(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        if (m & (1u << k)) a[static_cast<std::size_t>(k)] += 1;
      a[static_cast<std::size_t>(i)] -= 1;
      Weight w = f.weight(a);
      if (!is_zero(w)) out.push_back(w);
    }
  return sorted(out);
}

}  // namespace

TEST_CASE("W(2) root decomposition") {
  Family f = build(FamilyTag::W, {2});
  RootDatum rd = root_decomposition(f.g);
  CHECK(rd.roots.size() == 6);
  CHECK(rd.zero_space.dim() == 2);
  CHECK(sorted(rd.weights()) == w_oracle(f, 2));
}

TEST_CASE("sl(2|1) has 2 even and 4 odd roots") {
  Family f = build(FamilyTag::SL, {2, 1});
  RootDatum rd = root_decomposition(f.g);
  REQUIRE(rd.roots.size() == 6);
  std::size_t ev = 0, od = 0;
  for (const auto& r : rd.roots) {
    CHECK(r.space.dim() == 1);
    ev += r.dim_even;
    od += r.dim_odd;
  }
  CHECK(ev == 2);
  CHECK(od == 4);
  CHECK(rd.find(f.weight({1, 0}, {-1})) != nullptr);
  CHECK(roots_bracket_check(f.g, rd).pass());
}

TEST_CASE("appendix root formulas agree with a monomial oracle") {
  for (int n : {2, 3}) {
    Family f = build(FamilyTag::W, {n});
    CHECK(sorted(appendix_roots(f)) == w_oracle(f, n));
    CHECK(sorted(root_decomposition(f.g).weights()) == w_oracle(f, n));
  }
  // S(3): weights of W(3) minus those carried only by divergence-ful elements.
  Family s3 = build(FamilyTag::S, {3});
  CHECK(sorted(root_decomposition(s3.g).weights()) == sorted(appendix_roots(s3)));
  for (int n : {5, 6}) {
    Family h = build(FamilyTag::H, {n});
    CHECK(sorted(root_decomposition(h.g).weights()) == sorted(appendix_roots(h)));
  }
}

TEST_CASE("Hermite normal form and lattices") {
  auto h = hermite_normal_form({{Integer(2), Integer(4)}, {Integer(3), Integer(5)}});
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == 1);
  CHECK(h[1][0] == 0);
  CHECK(h[1][1] == 2);
  Lattice a = Lattice::span(2, std::vector<std::vector<Rational>>{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}});
  Lattice b = Lattice::span(2, std::vector<std::vector<Rational>>{{Rational(1), Rational(2)}, {Rational(1), Rational(0)}});
  CHECK(a == b);
  Lattice c = Lattice::span(2, std::vector<std::vector<Rational>>{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1)}});
  CHECK(c.contains(a));
  CHECK_FALSE(a.contains(c));
}

TEST_CASE("lattice chain") {
  Family psq = build(FamilyTag::PSQ, {3});
  RootPackage rp = root_package(psq);
  Report r = lattice_chain_check(psq, rp);
  CHECK(r.pass());

  Family sl = build(FamilyTag::SL, {2, 1});
  RootPackage rs = root_package(sl);
  CHECK(lattice_chain_check(sl, rs).pass());
  // Q_ss is strictly smaller than P(g) here: odd roots restrict to fundamental weights.
  std::size_t ss = sl.g.cartan_ss_dim();
  std::vector<Weight> pd;
  for (const auto& w : rs.full.weights()) pd.push_back(restrict_p(w, ss));
  Lattice pg = Lattice::span(ss, pd), qss = Lattice::span(ss, rs.ss.weights());
  CHECK(pg.contains(qss));
  CHECK_FALSE(pg == qss);
}

TEST_CASE("g0ss types") {
  struct Row {
    FamilySpec s;
    std::string type;
  };
  for (const auto& r : std::vector<Row>{{{FamilyTag::H, {6}}, "D3"},
                                        {{FamilyTag::H, {5}}, "B2"},
                                        {{FamilyTag::W, {3}}, "A2"},
                                        {{FamilyTag::OSP, {3, 2}}, "B1+C1"},
                                        {{FamilyTag::OSP, {4, 2}}, "A1+A1+A1"},
                                        {{FamilyTag::SL, {2, 3}}, "A1+A2"},
                                        {{FamilyTag::P, {3}}, "A2"}}) {
    CAPTURE(r.s.str());
    Family f = build(r.s);
    RootPackage rp = root_package(f);
    Report rep = ss_type_check(f, rp, r.type);
    CHECK(rep.pass());
  }
  CHECK(same_type("D3", "A3"));
  CHECK(same_type("C2", "B2"));
  CHECK_FALSE(same_type("B3", "C3"));
}

TEST_CASE("Cartan matrix classification") {
  CHECK(root_system_type({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}) == "B3");
  CHECK(root_system_type({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}) == "C3");
  CHECK(root_system_type({{2, -1}, {-3, 2}}) == "G2");
  CHECK(root_system_type({{2, -1, -1, 0}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {0, 0, 0, 2}}) == "A1+A3");
  CHECK(root_system_type({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}) == "D4");
}

TEST_CASE("simple systems give bases") {
  Family f = build(FamilyTag::H, {6});
  RootPackage rp = root_package(f);
  CHECK(rp.pi0.size() == 3);
  for (const auto& r : rp.ss.weights()) CHECK(base_coords(rp.pi0, r).has_value());
}

TEST_CASE("sl(n|1) root lattice basis") {
  Family f = build(FamilyTag::SL, {3, 1});
  RootPackage rp = root_package(f);
  T2Result t = lemma_t2_bases(f, rp);
  CHECK(t.basis.size() == 3);
  CHECK(t.report.pass());
  Family bad = build(FamilyTag::OSP, {4, 2});
  RootPackage rb = root_package(bad);
  CHECK_THROWS_AS(lemma_t2_bases(bad, rb), HypothesisNotSatisfied);
}

TEST_CASE("multiplicity one on sl(2|3)") {
  Family f = build(FamilyTag::SL, {2, 3});
  RootPackage rp = root_package(f);
  CHECK(lemma_t3_check(f, rp).pass());
}

TEST_CASE("sigma star of the identity is trivial") {
  Family f = build(FamilyTag::SL, {2, 1});
  RootPackage rp = root_package(f);
  SigmaStar s = sigma_star(f, rp, Matrix::identity(f.g.dim()));
  CHECK(s.report.pass());
  for (std::size_t k = 0; k < s.perm.size(); ++k) CHECK(s.perm[k] == k);
}
