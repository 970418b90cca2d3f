// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.
// Usage: acceptance [--report path.json] [--seed N]

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "lsa/suites.hpp"

using namespace lsa;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string summary;
  Json detail = Json::object();
};

void absorb(Outcome& o, const Report& r, const std::string& key) {
  o.pass = o.pass && r.pass();
  o.detail[key] = r.to_json(false);
}

std::string failing_names(const Json& detail, std::size_t limit = 3) {
  std::vector<std::string> names;
  std::size_t total = 0;
  for (const auto& [key, rep] : detail.items()) {
    if (!rep.is_object() || !rep.contains("checks")) continue;
    for (const auto& c : rep["checks"])
      if (!c["pass"].get<bool>()) {
        if (names.size() < limit) names.push_back(c["name"].get<std::string>());
        ++total;
      }
  }
  if (total == 0) return "";
  std::string s = std::to_string(total) + " failing check(s): ";
  for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "; " : "") + names[k];
  if (total > names.size()) s += "; ...";
  return s;
}

// ---- Test-side Grassmann oracle on Lambda(n): bitmask monomials, rational coefficients.

using OElem = std::map<unsigned, Rational>;

void o_add(OElem& a, unsigned m, const Rational& c) {
  Rational& x = a[m];
  x += c;
  if (x == 0) a.erase(m);
}

// xi_A xi_B = sign * xi_{A u B}: move each generator of B left past the larger generators of A.
int o_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < 32; ++j)
    if (b >> j & 1u)
      for (int i = j + 1; i < 32; ++i) swaps += a >> i & 1u;
  return swaps % 2 ? -1 : 1;
}

OElem o_mul(const OElem& f, const OElem& g) {
  OElem r;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : g)
      if (int s = o_sign(a, b)) o_add(r, a | b, s * x * y);
  return r;
}

// Left derivative d/dxi_i (0-based i).
OElem o_partial(int i, const OElem& f) {
  OElem r;
  for (const auto& [m, c] : f)
    if (m >> i & 1u) {
      int below = std::popcount(m & ((1u << i) - 1));
      o_add(r, m & ~(1u << i), below % 2 ? -c : c);
    }
  return r;
}

int o_parity(const OElem& f) { return f.empty() ? 0 : std::popcount(f.begin()->first) % 2; }

// D_f(h) = sum_i d_i f d_i h, {f, g} = (-1)^{p(f)} sum_i d_i f d_i g.
OElem o_D(int n, const OElem& f, const OElem& h) {
  OElem r;
  for (int i = 0; i < n; ++i)
    for (const auto& [m, c] : o_mul(o_partial(i, f), o_partial(i, h))) o_add(r, m, c);
  return r;
}

OElem o_poisson(int n, const OElem& f, const OElem& g) {
  OElem r = o_D(n, f, g);
  if (o_parity(f))
    for (auto& [m, c] : r) c = -c;
  return r;
}

GElem to_lib(int n, const OElem& f) {
  GElem g(n);
  for (const auto& [m, c] : f) g.add_term(m, FieldScalar(c));
  return g;
}

OElem random_homogeneous(Rng& rng, int n, int deg) {
  OElem f;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == deg && rng.range(0, 2) != 0) o_add(f, m, Rational(rng.range(-4, 4)));
  if (f.empty()) {
    unsigned m = (1u << deg) - 1;
    o_add(f, m, Rational(1));
  }
  return f;
}

// ---- Criteria.

Outcome c1_structure() {
  Outcome o;
  for (const auto& s : default_specs()) {
    Family f = build(s);
    absorb(o, structure_check(f.g), s.str());
  }
  o.summary = std::to_string(default_specs().size()) + " default families";
  return o;
}

Outcome c2_hamiltonian(std::uint64_t seed) {
  const int n = 6;
  Outcome o;
  Rng rng(seed);
  std::size_t bad_op = 0, bad_lib = 0;
  Json first = nullptr;
  for (int trial = 0; trial < 100; ++trial) {
    OElem f = random_homogeneous(rng, n, static_cast<int>(rng.range(1, 5)));
    OElem g = random_homogeneous(rng, n, static_cast<int>(rng.range(1, 5)));
    OElem fg = o_poisson(n, f, g);
    int sgn = o_parity(f) * o_parity(g) ? -1 : 1;
    bool ok = true;
    // Operator identity on every monomial of Lambda(6).
    for (unsigned h = 0; h < (1u << n) && ok; ++h) {
      OElem hm{{h, Rational(1)}};
      OElem lhs = o_D(n, f, o_D(n, g, hm));
      for (const auto& [m, c] : o_D(n, g, o_D(n, f, hm))) o_add(lhs, m, -sgn * c);
      ok = lhs == o_D(n, fg, hm);
    }
    // Library agrees with the oracle.
    GElem lf = to_lib(n, f), lg = to_lib(n, g);
    bool lib = d_bracket(d_f(lf), d_f(lg)) == d_f(poisson(lf, lg)) && poisson(lf, lg) == to_lib(n, fg);
    bad_op += !ok;
    bad_lib += !lib;
    if ((!ok || !lib) && first.is_null())
      first = {{"trial", trial}, {"f", to_lib(n, f).to_json()}, {"g", to_lib(n, g).to_json()}};
  }
  o.pass = bad_op == 0 && bad_lib == 0;
  o.detail = {{"pairs", 100}, {"operator_failures", bad_op}, {"library_failures", bad_lib}, {"witness", first}};
  o.summary = "100 pairs in Lambda(6), operator identity checked on all 64 monomials";
  return o;
}

// Multiplicities of the adjoint weights of W(n) and H(n), computed from monomial weights.
std::vector<std::size_t> oracle_multiplicities(const FamilySpec& s) {
  int n = s.params[0];
  std::map<std::vector<int>, std::size_t> mult;
  if (s.tag == FamilyTag::W) {
    // xi^M d_i has weight eps_M - eps_i.
    for (unsigned m = 0; m < (1u << n); ++m)
      for (int i = 0; i < n; ++i) {
        std::vector<int> w(n, 0);
        for (int k = 0; k < n; ++k) w[k] += m >> k & 1u;
        w[i] -= 1;
        ++mult[w];
      }
  } else {
    // D_f for eta-monomials of degree 1..n-1; eta_i -> eps_i, eta_{i+l} -> -eps_i, eta_{2l+1} -> 0.
    int l = n / 2;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) {
      std::vector<int> w(l, 0);
      for (int k = 0; k < 2 * l; ++k)
        if (m >> k & 1u) w[k % l] += k < l ? 1 : -1;
      ++mult[w];
    }
  }
  std::vector<std::size_t> out;
  for (const auto& [w, c] : mult)
    if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome c3_appendix_roots(const SuiteOptions& opt) {
  Outcome o;
  absorb(o, run_suite("appendix-roots", opt), "suite");
  Json counts = Json::object();
  for (const auto& s : std::vector<FamilySpec>{{FamilyTag::W, {2}}, {FamilyTag::W, {3}}, {FamilyTag::H, {5}},
                                               {FamilyTag::H, {6}}}) {
    Family f = build(s);
    RootDatum rd = root_decomposition(f.g);
    std::vector<std::size_t> got;
    for (const auto& r : rd.roots) got.push_back(r.space.dim());
    std::sort(got.begin(), got.end());
    std::vector<std::size_t> want = oracle_multiplicities(s);
    bool ok = got == want;
    o.pass = o.pass && ok;
    counts[s.str()] = {{"pass", ok}, {"computed_roots", got.size()}, {"oracle_roots", want.size()}};
  }
  o.detail["multiplicity_oracle"] = counts;
  o.summary = "W(2), W(3), S(3), H(5), H(6) root sets; multiplicities vs monomial-weight count";
  return o;
}

Outcome suites_outcome(const std::vector<std::string>& ids, const SuiteOptions& opt, const std::string& summary) {
  Outcome o;
  for (const auto& id : ids) absorb(o, run_suite(id, opt), id);
  o.summary = summary;
  return o;
}

Outcome c11_fault_injection(const SuiteOptions& opt) {
  Outcome o;
  std::size_t caught = 0;
  for (const auto& id : suite_ids()) {
    Report r = fault_injection(id, opt);
    caught += r.pass();
    absorb(o, r, id);
  }
  o.summary = std::to_string(caught) + "/" + std::to_string(suite_ids().size()) + " suites detect the perturbation";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string report_path;
  std::uint64_t seed = 1;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--report") && k + 1 < argc) report_path = argv[++k];
    else if (!std::strcmp(argv[k], "--seed") && k + 1 < argc) seed = std::stoull(argv[++k]);
  }
  SuiteOptions opt;
  opt.seed = seed;
  SuiteOptions cart = opt;
  cart.trials = 200;

  struct Criterion {
    int id;
    double budget_s;  // 0 = no stated limit
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, 120, [] { return c1_structure(); }},
      {2, 10, [&] { return c2_hamiltonian(seed); }},
      {3, 60, [&] { return c3_appendix_roots(opt); }},
      {4, 0, [&] { return suites_outcome({"lemma32", "lemma34"}, opt, "p(Delta), lattice chain, root compatibility"); }},
      {5, 0, [&] { return suites_outcome({"lemma35"}, opt, "hard-coded bases B, all seven cases"); }},
      {6, 0, [&] { return suites_outcome({"lemma36"}, opt, "sl(2|3), osp(4|2)"); }},
      {7, 0, [&] { return suites_outcome({"prop-semi"}, opt, "delta, rho, delta x beta, Ad(+-I)"); }},
      {8, 0, [&] { return suites_outcome({"lemma-cart"}, cart, "200 trials per Cartan family"); }},
      {9, 0, [&] { return suites_outcome({"loop-main", "remark53"}, opt, "generators over K[t,1/t], semidirect relation, factorization"); }},
      {10, 0, [&] { return suites_outcome({"appendix-BIJ"}, opt, "H(6), H(5), I={1}, J={2}"); }},
      {11, 0, [&] { return c11_fault_injection(opt); }},
  };

  Json all = Json::object();
  bool ok = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = c.budget_s == 0 || secs < c.budget_s;
    bool pass = o.pass && in_budget;
    ok = ok && pass;
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " - " << o.summary;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " (" << secs << " s";
    if (c.budget_s > 0) line << ", limit " << c.budget_s << " s";
    line << ")";
    if (!pass) {
      std::string f = failing_names(o.detail);
      if (!f.empty()) line << " - " << f;
      if (!in_budget) line << " - over time budget";
    }
    std::cout << line.str() << std::endl;
    all[std::to_string(c.id)] = {{"pass", pass}, {"seconds", std::to_string(secs)}, {"detail", o.detail}};
  }
  if (!report_path.empty()) std::ofstream(report_path) << all.dump(2) << "\n";
  std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: some criteria fail") << std::endl;
  return ok ? 0 : 1;
}
