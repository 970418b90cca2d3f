// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/suites.hpp"

using namespace lsa;

TEST_CASE("suite ids") {
  CHECK(suite_ids().size() == 13);
  CHECK(is_suite("remark53"));
  CHECK_FALSE(is_suite("nosuchsuite"));
  CHECK_THROWS_AS(run_suite("nosuchsuite", {}), UnknownSuite);
  CHECK_THROWS_AS(fault_injection("nosuchsuite", {}), UnknownSuite);
}

TEST_CASE("family selection") {
  SuiteOptions opt;
  CHECK(suite_families("lemma32", opt).size() == default_specs().size());
  CHECK(suite_families("lemma36", opt).size() == 2);
  opt.max_rank = 3;
  auto specs = suite_families("lemma34", opt);
  for (const auto& s : specs) {
    CAPTURE(s.str());
    CHECK_NOTHROW(s.validate());
    for (int p : s.params) CHECK(p <= 3);
  }
  // sl(1|2), sl(2|1), sl(1|3), sl(3|1), sl(2|3), sl(3|2), psl(2), psl(3), osp(1|2), osp(2|2), osp(3|2),
  // p(3), psq(3), W(2), W(3), S(3)
  CHECK(specs.size() == 16);
  // Suites with a fixed list ignore max_rank.
  CHECK(suite_families("appendix-BIJ", opt).size() == 2);
}

TEST_CASE("Cartan derivation precondition") {
  Family f = build(FamilyTag::SL, {2, 1});
  CHECK(cartan_derivation_check(f.g).pass());
  // Perturb [h, x] for a root vector x.
  const Vec& h = f.g.cartan_basis().front();
  std::size_t i = 0;
  while (h[i].is_zero()) ++i;
  Subspace hs = f.g.subspace("h_0bar");
  std::size_t j = 0;
  while (hs.contains(unit_vec(f.g.dim(), j)) || f.g.bracket_basis(i, j).empty()) ++j;
  LieSuperalgebra bad = f.g.perturbed(std::min(i, j), std::max(i, j), j, FieldScalar(1));
  Report r = cartan_derivation_check(bad);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.checks().front().witness.is_null());
}

TEST_CASE("small suites") {
  SuiteOptions opt;
  opt.seed = 5;
  Report r = run_suite("lemma36", opt);
  CHECK(r.pass());
  CHECK(r.to_json(false)["seed"] == 5);
  Report fi = fault_injection("lemma36", opt);
  CHECK(fi.pass());
}

TEST_CASE("contained errors become witnessed failures") {
  Family f = build(FamilyTag::W, {3});
  SuiteOptions opt;
  // remark53 needs H(2l); on W(3) the factorization check throws.
  CHECK_THROWS(run_suite_on("remark53", f, opt));
  opt.contain_errors = true;
  Report r = run_suite_on("remark53", f, opt);
  CHECK_FALSE(r.pass());
  for (const auto& c : r.checks())
    if (!c.pass) CHECK_FALSE(c.witness.is_null());
}
