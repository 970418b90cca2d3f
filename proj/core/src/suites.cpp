// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace lsa {

namespace {

using FS = FieldScalar;

const std::vector<FamilySpec>& all_defaults_marker() {
  static const std::vector<FamilySpec> v;
  return v;
}

bool runs_on_defaults(const std::string& id) {
  static const std::set<std::string> s = {"lemma32", "lemma34", "lemma-star", "prop-semi",
                                          "prop-F-membership", "table-crosschecks", "loop-main"};
  return s.count(id) != 0;
}

std::vector<FamilySpec> fixed_families(const std::string& id) {
  using T = FamilyTag;
  if (id == "lemma35")
    return {{T::PSL, {2}}, {T::SL, {2, 1}}, {T::SL, {3, 1}}, {T::OSP, {1, 2}}, {T::OSP, {2, 2}}, {T::P, {3}},
            {T::PSQ, {3}}, {T::W, {2}},     {T::S, {3}},     {T::SPRIME, {4}}, {T::H, {5}}};
  if (id == "lemma36") return {{T::SL, {2, 3}}, {T::OSP, {4, 2}}};
  if (id == "lemma-cart") return {{T::W, {3}}, {T::S, {3}}, {T::SPRIME, {4}}, {T::H, {5}}, {T::H, {6}}};
  if (id == "remark53") return {{T::H, {6}}};
  if (id == "appendix-roots") return {{T::W, {2}}, {T::W, {3}}, {T::S, {3}}, {T::H, {5}}, {T::H, {6}}};
  if (id == "appendix-BIJ") return {{T::H, {6}}, {T::H, {5}}};
  return all_defaults_marker();
}

// Which hard-coded basis B a family uses.
std::string t2_case(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::PSL: return "B(psl)";
    case FamilyTag::SL: return "B(sl)";
    case FamilyTag::OSP: return "B(osp)";
    case FamilyTag::P: return "B(p)";
    case FamilyTag::PSQ: return "B(psq)";
    case FamilyTag::W:
    case FamilyTag::S:
    case FamilyTag::SPRIME: return "B(W,S,S')";
    default: return "B(H)";
  }
}

std::string join_types(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    out += (out.empty() ? "" : "+") + p;
  }
  return out.empty() ? "0" : out;
}

std::string a_type(int rank) { return rank >= 1 ? "A" + std::to_string(rank) : ""; }

std::string so_type(int m) {
  if (m <= 2) return "";
  if (m == 4) return "A1+A1";
  return (m % 2 ? "B" : "D") + std::to_string(m / 2);
}

// Type of g0ss from the even part of each family (gl, so + sp, so(n) for H).
std::string expected_g0ss_type(const FamilySpec& s) {
  const auto& p = s.params;
  switch (s.tag) {
    case FamilyTag::SL: return join_types({a_type(p[0] - 1), a_type(p[1] - 1)});
    case FamilyTag::PSL: return join_types({a_type(p[0] - 1), a_type(p[0] - 1)});
    case FamilyTag::OSP: return join_types({so_type(p[0]), "C" + std::to_string(p[1] / 2)});
    case FamilyTag::P:
    case FamilyTag::Q:
    case FamilyTag::PSQ:
    case FamilyTag::W:
    case FamilyTag::S:
    case FamilyTag::SPRIME: return join_types({a_type(p[0] - 1)});
    case FamilyTag::H:
    case FamilyTag::HTILDE: return so_type(p[0]);
  }
  return "0";
}

Report suite_lemma32(const Family& f) {
  Report rep;
  RootPackage rp = root_package(f);
  rep.merge(p_delta_check(f, rp), "p(Delta)");
  rep.merge(lattice_chain_check(f, rp), "lattices");
  rep.merge(roots_bracket_check(f.g, rp.full), "roots");
  return rep;
}

Report suite_lemma34(const Family& f) {
  Report rep;
  RootPackage rp = root_package(f);
  rep.merge(compatible_root_check(f, rp));
  return rep;
}

Report suite_lemma_star(const Family& f, std::uint64_t seed) {
  Report rep;
  const auto& g = f.g;
  RootPackage rp = root_package(f);
  auto identity_perm = [](const SigmaStar& s) {
    for (std::size_t k = 0; k < s.perm.size(); ++k)
      if (s.perm[k] != k) return false;
    return true;
  };
  SigmaStar id = sigma_star(f, rp, Matrix::identity(g.dim()));
  rep.add("identity: transport holds", id.report.pass(), id.report.pass() ? Json(nullptr) : id.report.to_json(false));
  rep.add("identity: trivial permutation", identity_perm(id));
  Rng rng(seed);
  TorusCharacter chi;
  for (std::size_t k = 0; k < torus_basis(rp.full).size(); ++k) chi.values.push_back(rng.nonzero_scalar(true));
  SigmaStar tor = sigma_star(f, rp, torus_action(g, rp.full, chi).matrix);
  rep.add("torus: transport holds", tor.report.pass(), tor.report.pass() ? Json(nullptr) : tor.report.to_json(false));
  rep.add("torus: trivial permutation", identity_perm(tor));
  if (f.spec.tag == FamilyTag::SL || f.spec.tag == FamilyTag::PSL) {
    SigmaStar st = sigma_star(f, rp, supertranspose(f).matrix);
    rep.add("supertranspose: transport holds", st.report.pass(),
            st.report.pass() ? Json(nullptr) : st.report.to_json(false));
    bool negates = true;
    for (std::size_t k = 0; k < rp.ss.roots.size(); ++k)
      negates = negates && k < st.perm.size() && st.perm[k] < rp.ss.roots.size() &&
                rp.ss.roots[st.perm[k]].weight == vec_scale(FS(-1), rp.ss.roots[k].weight);
    rep.note(std::string("supertranspose acts on Delta_g0ss by ") + (negates ? "beta -> -beta" : "a non-trivial permutation"));
  }
  rep.merge(weyl_representative_check(f), "weyl");
  return rep;
}

Report suite_lemma35(const Family& f) {
  Report rep;
  RootPackage rp = root_package(f);
  std::string c = t2_case(f.spec);
  try {
    T2Result t = lemma_t2_bases(f, rp);
    Json b = Json::array();
    for (const auto& w : t.basis) b.push_back(weight_str(w));
    rep.merge(t.report, c);
    rep.note(c + " B = " + b.dump());
  } catch (const HypothesisNotSatisfied& e) {
    rep.add(c + ": hypotheses hold", false, {{"error", e.what()}});
  }
  return rep;
}

Report suite_lemma36(const Family& f) {
  Report rep;
  RootPackage rp = root_package(f);
  try {
    rep.merge(lemma_t3_check(f, rp));
  } catch (const HypothesisNotSatisfied& e) {
    rep.add("hypotheses hold", false, {{"error", e.what()}});
  }
  return rep;
}

Report suite_tables(const Family& f) {
  Report rep;
  RootPackage rp = root_package(f);
  rep.merge(ss_type_check(f, rp, expected_g0ss_type(f.spec)));
  if (f.kind == Kind::Cartan) rep.merge(unipotent_dim_crosscheck(f), "unipotent-dim");
  return rep;
}

Report suite_loop(const Family& f, std::uint64_t seed) {
  Report rep;
  rep.merge(theorem_main_generators(f, seed), "generators");
  rep.merge(semidirect_check(f, seed), "semidirect");
  rep.merge(weyl_representative_check(f), "weyl");
  return rep;
}

Report suite_remark53(const Family& f) {
  Report rep;
  rep.merge(remark_factorization_check(f, LaurentScalar::t(1)), "r=t");
  rep.merge(remark_factorization_check(f, LaurentScalar(4)), "r=4");
  rep.merge(remark_factorization_check(f, LaurentScalar(1)), "r=1");
  return rep;
}

Report suite_appendix_roots(const Family& f) {
  Report rep;
  const auto& g = f.g;
  RootDatum rd = root_decomposition(g);
  auto sorted = [](std::vector<Weight> v) {
    std::sort(v.begin(), v.end(), tuple_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  std::vector<Weight> got = sorted(rd.weights()), want = sorted(appendix_roots(f));
  Json missing = Json::array(), extra = Json::array();
  for (const auto& w : want)
    if (!std::binary_search(got.begin(), got.end(), w, tuple_less)) missing.push_back(weight_str(w));
  for (const auto& w : got)
    if (!std::binary_search(want.begin(), want.end(), w, tuple_less)) extra.push_back(weight_str(w));
  rep.add("computed roots equal the appendix formula", got == want,
          {{"computed", got.size()}, {"formula", want.size()}, {"missing", missing}, {"extra", extra}});
  if (f.spec.tag == FamilyTag::H) {
    std::size_t ss = g.cartan_ss_dim(), bad = 0;
    Json wit = nullptr;
    for (const auto& w : got)
      for (std::size_t k = ss; k < w.size(); ++k)
        if (!w[k].is_zero() && ++bad == 1) wit = {{"root", weight_str(w)}};
    rep.add("roots vanish on h^2", bad == 0, wit);
  }
  return rep;
}

Report body(const std::string& id, const Family& f, const SuiteOptions& opt) {
  if (id == "lemma32") return suite_lemma32(f);
  if (id == "lemma34") return suite_lemma34(f);
  if (id == "lemma-star") return suite_lemma_star(f, opt.seed);
  if (id == "lemma35") return suite_lemma35(f);
  if (id == "lemma36") return suite_lemma36(f);
  if (id == "prop-semi") return prop_semi_suite(f, opt.seed);
  if (id == "lemma-cart") return lemma_cart_probe(f, opt.trials ? opt.trials : 200, opt.seed);
  if (id == "prop-F-membership") return prop_f_membership(f, opt.seed);
  if (id == "table-crosschecks") return suite_tables(f);
  if (id == "loop-main") return suite_loop(f, opt.seed);
  if (id == "remark53") return suite_remark53(f);
  if (id == "appendix-roots") return suite_appendix_roots(f);
  if (id == "appendix-BIJ") return bij_check(f, {1}, {2});
  throw UnknownSuite(id);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "lemma32",    "lemma34",           "lemma35",           "lemma36",   "lemma-star",
      "prop-semi",  "lemma-cart",        "prop-F-membership", "table-crosschecks",
      "loop-main",  "remark53",          "appendix-roots",    "appendix-BIJ"};
  return ids;
}

bool is_suite(const std::string& id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<FamilySpec> specs_up_to(std::optional<int> max_rank) {
  if (!max_rank) return default_specs();
  int r = *max_rank;
  using T = FamilyTag;
  std::vector<FamilySpec> cand;
  for (int m = 1; m <= r; ++m)
    for (int n = 1; n <= r; ++n)
      if (m != n && m + n >= 3) cand.push_back({T::SL, {m, n}});
  for (int n = 2; n <= r; ++n) cand.push_back({T::PSL, {n}});
  for (int m = 1; m <= r; ++m)
    for (int n2 = 2; n2 <= r; n2 += 2) cand.push_back({T::OSP, {m, n2}});
  for (int n = 3; n <= r; ++n) {
    cand.push_back({T::P, {n}});
    cand.push_back({T::PSQ, {n}});
  }
  for (int n = 2; n <= r; ++n) cand.push_back({T::W, {n}});
  for (int n = 3; n <= r; ++n) cand.push_back({T::S, {n}});
  for (int n = 4; n <= r; n += 2) cand.push_back({T::SPRIME, {n}});
  for (int n = 5; n <= r; ++n) cand.push_back({T::H, {n}});
  std::vector<FamilySpec> out;
  for (const auto& s : cand) {
    try {
      s.validate();
      out.push_back(s);
    } catch (const ParameterOutOfRange&) {
    }
  }
  return out;
}

std::vector<FamilySpec> suite_families(const std::string& id, const SuiteOptions& opt) {
  if (!is_suite(id)) throw UnknownSuite(id);
  if (runs_on_defaults(id)) return specs_up_to(opt.max_rank);
  return fixed_families(id);
}

Report cartan_derivation_check(const LieSuperalgebra& g) {
  Report rep;
  std::size_t n = g.dim(), bad = 0;
  Json wit = nullptr;
  for (std::size_t c = 0; c < g.cartan_basis().size() && bad == 0; ++c) {
    const Vec& h = g.cartan_basis()[c];
    Matrix ad = g.ad(h);
    for (std::size_t i = 0; i < n && bad == 0; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // h is even: [h,[x,y]] = [[h,x],y] + [x,[h,y]].
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
        Vec lhs = ad * g.bracket(ei, ej);
        Vec rhs = vec_add(g.bracket(ad.col(i), ej), g.bracket(ei, ad.col(j)));
        if (lhs != rhs) {
          ++bad;
          wit = {{"cartan_element", c}, {"i", i}, {"j", j}, {"lhs", vec_to_json(lhs)}, {"rhs", vec_to_json(rhs)}};
          break;
        }
      }
  }
  rep.add("h acts by derivations", bad == 0, wit);
  return rep;
}

Report run_suite_on(const std::string& id, const Family& f, const SuiteOptions& opt) {
  if (!is_suite(id)) throw UnknownSuite(id);
  Report rep;
  rep.merge(cartan_derivation_check(f.g), "precondition");
  if (!opt.contain_errors) {
    rep.merge(body(id, f, opt));
    return rep;
  }
  try {
    rep.merge(body(id, f, opt));
  } catch (const std::exception& e) {
    rep.add("completes without error", false, {{"error", e.what()}});
  }
  return rep;
}

Report run_suite(const std::string& id, const SuiteOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep(id);
  rep.set_seed(opt.seed);
  for (const auto& s : suite_families(id, opt)) {
    Family f = build(s);
    rep.merge(run_suite_on(id, f, opt), f.g.name());
  }
  if (id == "loop-main") rep.note("generation by the listed subgroups is sampled, not proved");
  rep.set_elapsed_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  return rep;
}

Report fault_injection(const std::string& id, const SuiteOptions& opt) {
  if (!is_suite(id)) throw UnknownSuite(id);
  std::vector<FamilySpec> fams = suite_families(id, opt);
  // Prefer a small representative.
  FamilySpec target = fams.front();
  for (const auto& s : fams)
    if (s.tag == FamilyTag::SL && s.params == std::vector<int>{2, 3}) target = s;
  if (id == "lemma-cart") target = {FamilyTag::W, {3}};
  Family f = build(target);
  const auto& g = f.g;
  // [h, x] for the first basis vector in the support of the first Cartan element and a root vector x.
  const Vec& h = g.cartan_basis().front();
  std::size_t i = 0;
  while (h[i].is_zero()) ++i;
  Subspace hs = g.subspace("h_0bar");
  std::size_t j = 0;
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (!hs.contains(unit_vec(g.dim(), k)) && !g.bracket_basis(i, k).empty()) {
      j = k;
      break;
    }
  std::size_t lo = std::min(i, j), hi = std::max(i, j);
  f.g = g.perturbed(lo, hi, j, FS(1));
  SuiteOptions o = opt;
  o.contain_errors = true;
  if (id == "lemma-cart" && o.trials == 0) o.trials = 20;
  Report run = run_suite_on(id, f, o);
  Report rep("fault-injection:" + id);
  std::size_t unwitnessed = 0;
  for (const auto& c : run.checks())
    if (!c.pass && c.witness.is_null()) ++unwitnessed;
  rep.add("suite fails on " + f.g.name(), !run.pass(),
          {{"perturbed", {{"i", lo}, {"j", hi}, {"k", j}, {"delta", "1"}}}, {"failures", run.failures()}});
  rep.add("every failure carries a witness", unwitnessed == 0, {{"unwitnessed", unwitnessed}});
  return rep;
}

}  // namespace lsa
