// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lsa {

namespace {

using FS = FieldScalar;

// Coordinates of v in the span of independent vectors; nullopt if outside.
std::optional<Vec> solve_in_basis(const std::vector<Vec>& basis, const Vec& v) {
  std::size_t n = v.size(), r = basis.size();
  Matrix m(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) m(i, k) = basis[k][i];
    m(i, r) = v[i];
  }
  auto [rr, piv] = rref(m);
  Vec x(r);
  for (std::size_t row = 0; row < piv.size(); ++row) {
    if (piv[row] == r) return std::nullopt;
    x[piv[row]] = rr(row, r);
  }
  return x;
}

std::vector<Vec> take(const std::vector<Vec>& v, std::size_t k) { return {v.begin(), v.begin() + static_cast<long>(k)}; }

Weight neg(const Weight& w) { return vec_scale(FS(-1), w); }

Json weights_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(weight_str(w));
  return a;
}

bool contains_weight(const std::vector<Weight>& ws, const Weight& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

std::vector<Weight> sorted_unique(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end(), tuple_less);
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

std::vector<std::vector<int>> subsets(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i + 1);
    if (static_cast<int>(s.size()) >= lo && static_cast<int>(s.size()) <= hi) out.push_back(s);
  }
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// ---------------------------------------------------------------- decomposition

std::vector<Weight> RootDatum::weights() const {
  std::vector<Weight> out;
  for (const auto& r : roots) out.push_back(r.weight);
  return out;
}

const Root* RootDatum::find(const Weight& w) const {
  for (const auto& r : roots)
    if (r.weight == w) return &r;
  return nullptr;
}

std::optional<std::size_t> RootDatum::index(const Weight& w) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k].weight == w) return k;
  return std::nullopt;
}

Json RootDatum::to_json() const {
  Json j;
  j["rank"] = rank;
  j["zero_dim"] = zero_space.dim();
  Json rs = Json::array();
  std::size_t ne = 0, no = 0;
  for (const auto& r : roots) {
    Json w = Json::array();
    for (const auto& c : r.weight) w.push_back(c.str());
    rs.push_back({{"weight", w}, {"dim", r.space.dim()}, {"even", r.dim_even}, {"odd", r.dim_odd}});
    ne += r.dim_even > 0;
    no += r.dim_odd > 0;
  }
  j["num_roots"] = roots.size();
  j["num_even_roots"] = ne;
  j["num_odd_roots"] = no;
  j["roots"] = rs;
  return j;
}

RootDatum root_decomposition(const LieSuperalgebra& g, const std::vector<Vec>& cartan,
                             const std::optional<Subspace>& space, const std::vector<FieldScalar>& candidates) {
  std::size_t n = g.dim();
  Subspace v = space ? *space : Subspace::full(n);
  std::vector<Matrix> ops;
  for (const auto& h : cartan) ops.push_back(restrict_to(g.ad(h), v));
  RootDatum rd;
  rd.rank = cartan.size();
  rd.zero_space = Subspace(n);
  if (v.dim() == 0) return rd;
  auto pieces = weight_decomposition(ops, v.dim(), candidates);
  Subspace even = g.even_part(), odd = g.odd_part();
  for (auto& pc : pieces) {
    std::vector<Vec> lifted;
    for (std::size_t k = 0; k < pc.space.dim(); ++k) lifted.push_back(v.from_coords(pc.space.vector(k)));
    Subspace s = Subspace::span(n, lifted);
    Weight w = cartan.empty() ? Weight{} : pc.weight;
    if (is_zero(w)) {
      rd.zero_space = s;
      continue;
    }
    Root r{w, s, subspace_intersection(s, even).dim(), subspace_intersection(s, odd).dim()};
    rd.roots.push_back(std::move(r));
  }
  return rd;
}

RootDatum root_decomposition(const LieSuperalgebra& g) { return root_decomposition(g, g.cartan_basis()); }

RootDatum ss_root_decomposition(const LieSuperalgebra& g) {
  return root_decomposition(g, take(g.cartan_basis(), g.cartan_ss_dim()), g.subspace("g0ss"));
}

Weight restrict_p(const Weight& w, std::size_t ss_dim) {
  if (ss_dim > w.size()) throw DimensionMismatch();
  return {w.begin(), w.begin() + static_cast<long>(ss_dim)};
}

std::vector<Rational> rational_weight(const Weight& w) {
  std::vector<Rational> out;
  for (const auto& c : w) {
    if (!c.is_rational()) throw NotRational();
    out.push_back(c.a());
  }
  return out;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += w[k].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- lattices

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (sgn(rows[i][c]) != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows.size() || sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][c], rows[r][c]);
      if (sgn(q) != 0)
        for (std::size_t k = c; k < cols; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Lattice Lattice::span(std::size_t ambient, const std::vector<std::vector<Rational>>& gens) {
  Lattice l;
  l.ambient_ = ambient;
  Integer den = 1;
  for (const auto& g : gens) {
    if (g.size() != ambient) throw AmbientMismatch();
    for (const auto& c : g) {
      Integer d = c.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : gens) {
    std::vector<Integer> row;
    for (const auto& c : g) {
      Rational s = c * Rational(den);
      row.push_back(s.get_num());
    }
    rows.push_back(row);
  }
  for (const auto& row : hermite_normal_form(rows)) {
    std::vector<Rational> q;
    for (const auto& e : row) {
      Rational x(e, den);
      x.canonicalize();
      q.push_back(x);
    }
    l.rows_.push_back(q);
  }
  return l;
}

Lattice Lattice::span(std::size_t ambient, const std::vector<Weight>& gens) {
  std::vector<std::vector<Rational>> q;
  for (const auto& w : gens) q.push_back(rational_weight(w));
  return span(ambient, q);
}

bool Lattice::contains(const Lattice& o) const {
  std::vector<std::vector<Rational>> all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return span(ambient_, all) == *this;
}

bool Lattice::contains(const std::vector<Rational>& v) const { return contains(span(ambient_, {v})); }

Json Lattice::to_json() const {
  Json a = Json::array();
  for (const auto& r : rows_) {
    Json row = Json::array();
    for (const auto& c : r) row.push_back(rational_to_string(c));
    a.push_back(row);
  }
  return {{"rank", rank()}, {"hnf", a}};
}

// ---------------------------------------------------------------- bases and types

bool lex_positive(const Weight& w) {
  for (const auto& c : w) {
    if (c.is_zero()) continue;
    if (!c.is_rational()) throw NotRational();
    return c.a() > 0;
  }
  return false;
}

std::vector<Weight> simple_system(const std::vector<Weight>& roots) {
  std::vector<Weight> pos;
  for (const auto& r : roots)
    if (lex_positive(r)) pos.push_back(r);
  std::vector<Weight> out;
  for (const auto& a : pos) {
    bool dec = false;
    for (const auto& b : pos)
      if (contains_weight(pos, vec_sub(a, b))) {
        dec = true;
        break;
      }
    if (!dec) out.push_back(a);
  }
  return sorted_unique(out);
}

Vec coroot(const LieSuperalgebra& g, const RootDatum& ss, const Weight& beta) {
  const Root* p = ss.find(beta);
  const Root* m = ss.find(neg(beta));
  if (!p || !m) throw std::invalid_argument("coroot: not a root of g0ss");
  Vec h = g.bracket(p->space.vector(0), m->space.vector(0));
  auto c = solve_in_basis(take(g.cartan_basis(), g.cartan_ss_dim()), h);
  if (!c) throw std::logic_error("coroot: bracket outside h_g0ss");
  FS val;
  for (std::size_t k = 0; k < c->size(); ++k) val += (*c)[k] * beta[k];
  if (val.is_zero()) throw std::logic_error("coroot: beta(h) = 0");
  return vec_scale(FS(2) / val, *c);
}

std::vector<std::vector<long>> cartan_matrix(const LieSuperalgebra& g, const RootDatum& ss,
                                             const std::vector<Weight>& base) {
  std::size_t r = base.size();
  std::vector<std::vector<long>> a(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    Vec hc = coroot(g, ss, base[i]);
    for (std::size_t j = 0; j < r; ++j) {
      FS v;
      for (std::size_t k = 0; k < hc.size(); ++k) v += hc[k] * base[j][k];
      if (!v.is_rational() || v.a().get_den() != 1) throw std::logic_error("non-integral Cartan integer");
      a[i][j] = v.a().get_num().get_si();
    }
  }
  return a;
}

std::string root_system_type(const std::vector<std::vector<long>>& a) {
  std::size_t n = a.size();
  if (n == 0) return "0";
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      auto u = st.back();
      st.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && a[u][v] != 0 && comp[v] < 0) {
          comp[v] = nc;
          st.push_back(v);
        }
    }
    ++nc;
  }
  std::vector<std::string> names;
  for (int c = 0; c < nc; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    std::size_t m = nodes.size();
    std::string sm = std::to_string(m);
    long maxmult = 0;
    std::map<std::size_t, int> deg;
    for (auto i : nodes)
      for (auto j : nodes)
        if (i < j && a[i][j] != 0) {
          maxmult = std::max(maxmult, a[i][j] * a[j][i]);
          ++deg[i];
          ++deg[j];
        }
    if (maxmult == 3) {
      names.push_back("G2");
      continue;
    }
    if (maxmult <= 1) {
      int maxdeg = 0;
      std::size_t branch = 0;
      for (auto [k, d] : deg)
        if (d > maxdeg) {
          maxdeg = d;
          branch = k;
        }
      if (maxdeg <= 2) {
        names.push_back("A" + sm);
        continue;
      }
      std::vector<int> arms;
      for (auto j : nodes) {
        if (j == branch || a[branch][j] == 0) continue;
        int len = 1;
        std::size_t prev = branch, cur = j;
        while (true) {
          std::size_t nxt = n;
          for (auto k : nodes)
            if (k != cur && k != prev && a[cur][k] != 0) nxt = k;
          if (nxt == n) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) names.push_back("D" + sm);
      else names.push_back("E" + sm);
      continue;
    }
    // One double edge.
    if (m == 2) {
      names.push_back("B2");
      continue;
    }
    std::set<std::size_t> shortn;
    for (auto i : nodes)
      for (auto j : nodes)
        if (i != j && a[i][j] == -2) shortn.insert(i);
    std::vector<std::size_t> st(shortn.begin(), shortn.end());
    while (!st.empty()) {
      auto u = st.back();
      st.pop_back();
      for (auto v : nodes)
        if (v != u && a[u][v] == -1 && a[v][u] == -1 && !shortn.count(v)) {
          shortn.insert(v);
          st.push_back(v);
        }
    }
    if (m == 4 && shortn.size() == 2) names.push_back("F4");
    else if (shortn.size() == 1) names.push_back("B" + sm);
    else names.push_back("C" + sm);
  }
  std::sort(names.begin(), names.end());
  std::string s;
  for (const auto& x : names) s += (s.empty() ? "" : "+") + x;
  return s;
}

bool same_type(const std::string& a, const std::string& b) {
  auto norm = [](const std::string& t) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= t.size()) {
      auto e = t.find('+', start);
      std::string p = t.substr(start, e == std::string::npos ? std::string::npos : e - start);
      if (p == "B1" || p == "C1") p = "A1";
      if (p == "C2") p = "B2";
      if (p == "D3") p = "A3";
      if (p == "D2") {
        parts.push_back("A1");
        p = "A1";
      }
      if (!p.empty() && p != "0") parts.push_back(p);
      if (e == std::string::npos) break;
      start = e + 1;
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  return norm(a) == norm(b);
}

std::optional<std::vector<Rational>> base_coords(const std::vector<Weight>& base, const Weight& x) {
  auto c = solve_in_basis(base, x);
  if (!c) return std::nullopt;
  std::vector<Rational> q;
  bool pos = false, negv = false;
  for (const auto& e : *c) {
    if (!e.is_rational() || e.a().get_den() != 1) return std::nullopt;
    pos |= e.a() > 0;
    negv |= e.a() < 0;
    q.push_back(e.a());
  }
  if (pos && negv) return std::nullopt;
  return q;
}

RootPackage root_package(const Family& f) {
  RootPackage rp;
  rp.full = root_decomposition(f.g);
  rp.ss = ss_root_decomposition(f.g);
  rp.pi0 = simple_system(rp.ss.weights());
  return rp;
}

// ---------------------------------------------------------------- checks

Report roots_bracket_check(const LieSuperalgebra& g, const RootDatum& rd) {
  Report rep("root-brackets:" + g.name());
  std::vector<std::pair<Weight, Subspace>> pcs;
  pcs.push_back({Weight(rd.rank), rd.zero_space});
  for (const auto& r : rd.roots) pcs.push_back({r.weight, r.space});
  std::size_t bad = 0;
  Json witness = Json::array();
  for (const auto& [wa, sa] : pcs)
    for (const auto& [wb, sb] : pcs) {
      Subspace br = bracket_spaces(g, sa, sb);
      if (br.dim() == 0) continue;
      Weight sum = vec_add(wa, wb);
      Subspace target = is_zero(sum) ? rd.zero_space : Subspace(g.dim());
      if (const Root* r = rd.find(sum)) target = r->space;
      if (!target.contains(br)) {
        ++bad;
        if (witness.size() < 5) witness.push_back({{"alpha", weight_str(wa)}, {"beta", weight_str(wb)}});
      }
    }
  rep.add("bracket-respects-roots", bad == 0, {{"violations", bad}, {"examples", witness}},
          "[g^a, g^b] in g^(a+b)");
  return rep;
}

Report p_delta_check(const Family& f, const RootPackage& rp) {
  const auto& g = f.g;
  Report rep("p-delta:" + g.name());
  std::size_t ss = g.cartan_ss_dim();
  RootDatum gw = root_decomposition(g, take(g.cartan_basis(), ss));
  std::vector<Weight> pd;
  bool zero_in_p = false;
  for (const auto& r : rp.full.roots) {
    Weight w = restrict_p(r.weight, ss);
    if (is_zero(w)) zero_in_p = true;
    else pd.push_back(w);
  }
  pd = sorted_unique(pd);
  std::vector<Weight> gws = sorted_unique(gw.weights());
  rep.add("weights-equal-p(Delta)", gws == pd,
          {{"module_weights", weights_json(gws)}, {"p_delta", weights_json(pd)}, {"zero_in_p_delta", zero_in_p}},
          "weights of the g0ss-module g coincide with p(Delta)");
  // True eigenspaces for the semisimple part.
  bool semis = true;
  for (const auto& r : gw.roots)
    for (std::size_t k = 0; k < ss; ++k) {
      Matrix a = g.ad(g.cartan_basis()[k]);
      for (const auto& v : r.space.vectors())
        if (a * v != vec_scale(r.weight[k], v)) semis = false;
    }
  for (std::size_t k = 0; k < ss; ++k) {
    Matrix a = g.ad(g.cartan_basis()[k]);
    for (const auto& v : gw.zero_space.vectors())
      if (!is_zero(a * v)) semis = false;
  }
  rep.add("h_g0ss-acts-semisimply", semis, {{"rank", ss}}, "g^{p(alpha)} is an honest eigenspace");
  return rep;
}

Report lattice_chain_check(const Family& f, const RootPackage& rp) {
  const auto& g = f.g;
  Report rep("lattices:" + g.name());
  std::size_t ss = g.cartan_ss_dim();
  Lattice qss = Lattice::span(ss, rp.ss.weights());
  std::vector<Weight> pd;
  for (const auto& w : rp.full.weights()) pd.push_back(restrict_p(w, ss));
  Lattice pg = Lattice::span(ss, pd);
  Lattice qg = Lattice::span(rp.full.rank, rp.full.weights());
  std::vector<std::vector<Rational>> pq;
  for (const auto& row : qg.basis()) pq.push_back({row.begin(), row.begin() + static_cast<long>(ss)});
  Lattice pqg = Lattice::span(ss, pq);
  // Weight lattice of g0ss: dual of the coroot lattice of Pi0.
  std::vector<Vec> cor;
  for (const auto& b : rp.pi0) cor.push_back(coroot(g, rp.ss, b));
  Lattice p;
  if (!cor.empty()) {
    Matrix c = Matrix::from_rows(cor, ss);
    Matrix ci = inverse_matrix(c);
    std::vector<Weight> gens;
    for (std::size_t k = 0; k < ss; ++k) gens.push_back(ci.col(k));
    p = Lattice::span(ss, gens);
  } else {
    p = Lattice::span(ss, std::vector<std::vector<Rational>>{});
  }
  rep.add("Q_ss<=p(Q_g)", pqg.contains(qss), {{"Q_ss", qss.to_json()}, {"p(Q_g)", pqg.to_json()}},
          "root lattice of g0ss inside p(Q_g)");
  rep.add("Q_ss<=P(g)", pg.contains(qss), {{"P(g)", pg.to_json()}}, "lattice chain, first step");
  rep.add("P(g)<=P", p.contains(pg), {{"P", p.to_json()}}, "lattice chain, second step");
  rep.add("p(Q_g)=P(g)", pqg == pg, {}, "Z p(Delta) = p(Z Delta)");
  rep.note("P(g)=Q_ss: " + std::string(pg == qss ? "yes" : "no") + "; P(g)=P: " + (pg == p ? "yes" : "no"));
  if (f.spec.tag == FamilyTag::PSQ)
    rep.add("psq:P(g)=Q_ss", pg == qss, {{"P(g)", pg.to_json()}, {"Q_ss", qss.to_json()}},
            "for psq(n), P(g) = Q_{g0ss}");
  return rep;
}

Report compatible_root_check(const Family& f, const RootPackage& rp) {
  const auto& g = f.g;
  Report rep("compatible-roots:" + g.name());
  std::size_t ss = g.cartan_ss_dim();
  std::vector<Vec> hss = take(g.cartan_basis(), ss);
  std::vector<int> degs = g.zmod() == 2 ? std::vector<int>{0, 1} : g.grading_degrees();
  std::vector<Weight> pdelta;
  for (const auto& w : rp.full.weights()) pdelta.push_back(restrict_p(w, ss));
  for (int d : degs) {
    Subspace gi = g.zmod() == 2 ? (d == 0 ? g.even_part() : g.odd_part()) : g.graded_piece(d);
    RootDatum pieces = root_decomposition(g, hss, gi);
    std::vector<std::pair<Weight, Subspace>> all;
    if (pieces.zero_space.dim()) all.push_back({Weight(ss), pieces.zero_space});
    for (const auto& r : pieces.roots) all.push_back({r.weight, r.space});
    for (const auto& [a0, sp] : all) {
      if (!contains_weight(pdelta, a0)) continue;
      std::vector<std::pair<Weight, Subspace>> lifts;
      auto consider = [&](const Weight& w, const Subspace& s) {
        if (restrict_p(w, ss) != a0) return;
        Subspace m = subspace_intersection(s, gi);
        if (m.dim()) lifts.push_back({w, m});
      };
      consider(Weight(rp.full.rank), rp.full.zero_space);
      for (const auto& r : rp.full.roots) consider(r.weight, r.space);
      bool ok = lifts.size() == 1 && lifts[0].second == sp && !is_zero(lifts[0].first);
      Json lw = Json::array();
      for (const auto& l : lifts) lw.push_back(weight_str(l.first));
      rep.add("degree " + std::to_string(d) + " weight " + weight_str(a0), ok,
              {{"lifts", lw}, {"dim_piece", sp.dim()}}, "unique lift alpha with g_i^{a0} = g^alpha meet g_i");
    }
  }
  return rep;
}

Report ss_type_check(const Family& f, const RootPackage& rp, const std::string& claimed) {
  Report rep("g0ss-type:" + f.g.name());
  auto a = cartan_matrix(f.g, rp.ss, rp.pi0);
  std::string t = root_system_type(a);
  Json am = a;
  rep.add("type " + claimed, same_type(t, claimed), {{"computed", t}, {"claimed", claimed}, {"cartan_matrix", am}},
          "tabulated type of g0ss");
  return rep;
}

// ---------------------------------------------------------------- bases B of Q_g

namespace {

std::string g0ss_type(const Family& f, const RootPackage& rp) {
  return root_system_type(cartan_matrix(f.g, rp.ss, rp.pi0));
}

bool g0ss_simple(const Family& f, const RootPackage& rp) {
  std::string t = g0ss_type(f, rp);
  return t != "0" && t.find('+') == std::string::npos;
}

// g^alpha meet g_0 for a full weight.
Subspace root_meet_g0(const Family& f, const RootPackage& rp, const Weight& a) {
  const Root* r = rp.full.find(a);
  if (!r) return Subspace(f.g.dim());
  return subspace_intersection(r->space, f.g.subspace("g0"));
}

void generator_check(Report& rep, const Family& f, const RootPackage& rp, const Weight& a, const Vec& gen,
                     const std::string& what, const std::string& anchor) {
  Subspace target = root_meet_g0(f, rp, a);
  Subspace s = Subspace::span(f.g.dim(), {gen});
  bool ok = !is_zero(gen) && s == target;
  // Weights of the components of the generator.
  Json carries = Json::array();
  std::vector<Vec> all = rp.full.zero_space.vectors();
  std::vector<std::size_t> start;
  for (const auto& rt : rp.full.roots) {
    start.push_back(all.size());
    for (const auto& v : rt.space.vectors()) all.push_back(v);
  }
  if (auto c = solve_in_basis(all, gen)) {
    for (std::size_t k = 0; k < rp.full.roots.size(); ++k) {
      std::size_t end = k + 1 < start.size() ? start[k + 1] : all.size();
      for (std::size_t j = start[k]; j < end; ++j)
        if (!(*c)[j].is_zero()) {
          carries.push_back(weight_str(rp.full.roots[k].weight));
          break;
        }
    }
  }
  rep.add(what + " spans g^" + weight_str(a) + " meet g0", ok,
          {{"carries", carries}, {"target_dim", target.dim()}}, anchor);
}

}  // namespace

T2Result lemma_t2_bases(const Family& f, const RootPackage& rp) {
  const auto& g = f.g;
  const auto& sp = f.spec;
  bool psl22 = sp.tag == FamilyTag::PSL && sp.params[0] == 2;
  bool h_even = sp.tag == FamilyTag::H && sp.params[0] % 2 == 0;
  if (!psl22 && (h_even || !g0ss_simple(f, rp)))
    throw HypothesisNotSatisfied(g.name() + ": needs psl(2|2), or g0ss simple and g not H(2k)");
  T2Result out{{}, Report("lemma-t2:" + g.name())};
  Report& rep = out.report;
  std::size_t ss = g.cartan_ss_dim();
  std::vector<Weight>& B = out.basis;
  std::string kase;
  std::vector<Weight> delta = rp.full.weights(), dss = rp.ss.weights();
  auto claim_equal = [&]() {
    // "Delta = Delta_g0ss" (Cases 3 with m = 1, and 5); h_0bar = h_g0ss here.
    std::vector<Weight> a = sorted_unique(delta), b = sorted_unique(dss);
    rep.add("Delta=Delta_g0ss", a == b,
            {{"num_roots", a.size()}, {"num_ss_roots", b.size()}}, "Delta coincides with Delta_g0ss");
  };
  switch (sp.tag) {
    case FamilyTag::PSL:
      kase = "1";
      B = {f.weight({1, -1}), f.weight({0, 1}, {-1}), f.weight({}, {1, -1})};
      break;
    case FamilyTag::SL:
      if (sp.params[1] != 1) throw HypothesisNotSatisfied(g.name() + ": no hard-coded case");
      kase = "2";
      for (int i = 0; i + 1 < sp.params[0]; ++i) {
        std::vector<long> a(static_cast<std::size_t>(sp.params[0]));
        a[static_cast<std::size_t>(i)] = 1;
        a[static_cast<std::size_t>(i + 1)] = -1;
        B.push_back(f.weight(a));
      }
      {
        std::vector<long> a(static_cast<std::size_t>(sp.params[0]));
        a.back() = 1;
        B.push_back(f.weight(a, {-1}));
      }
      break;
    case FamilyTag::OSP: {
      int m = sp.params[0], n = sp.params[1] / 2;
      if (m == 1) {
        kase = "3 (m=1)";
        claim_equal();
        B = rp.pi0;
      } else if (m == 2) {
        kase = "3 (m=2)";
        std::vector<long> b(static_cast<std::size_t>(n));
        b[0] = -1;
        B.push_back(f.weight({1}, b));
        for (int i = 0; i + 1 < n; ++i) {
          std::vector<long> d(static_cast<std::size_t>(n));
          d[static_cast<std::size_t>(i)] = 1;
          d[static_cast<std::size_t>(i + 1)] = -1;
          B.push_back(f.weight({0}, d));
        }
        std::vector<long> d(static_cast<std::size_t>(n));
        d.back() = 2;
        B.push_back(f.weight({0}, d));
      } else {
        throw HypothesisNotSatisfied(g.name() + ": no hard-coded case");
      }
      break;
    }
    case FamilyTag::P: {
      kase = "4";
      int n = sp.params[0];
      std::vector<long> a(static_cast<std::size_t>(n));
      a[0] = -2;
      B.push_back(f.weight(a));
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(i + 1)] = -1;
        B.push_back(f.weight(e));
      }
      rep.note("-2 eps_1 is a root: " + std::string(contains_weight(delta, B[0]) ? "yes" : "no") +
               "; 2 eps_1 is a root: " + (contains_weight(delta, neg(B[0])) ? "yes" : "no"));
      break;
    }
    case FamilyTag::PSQ:
      kase = "5";
      claim_equal();
      B = rp.pi0;
      break;
    case FamilyTag::W:
    case FamilyTag::S:
    case FamilyTag::SPRIME: {
      kase = "6";
      int n = sp.params[0];
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(i + 1)] = -1;
        B.push_back(f.weight(e));
      }
      std::vector<long> e(static_cast<std::size_t>(n));
      e.back() = 1;
      B.push_back(f.weight(e));
      break;
    }
    case FamilyTag::H: {
      kase = "7";
      int l = sp.params[0] / 2;
      for (int i = 0; i + 1 < l; ++i) {
        std::vector<long> e(static_cast<std::size_t>(l));
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(i + 1)] = -1;
        B.push_back(f.weight(e));
      }
      std::vector<long> e(static_cast<std::size_t>(l));
      e.back() = 1;
      B.push_back(f.weight(e));
      break;
    }
    default:
      throw HypothesisNotSatisfied(g.name() + ": no hard-coded case");
  }
  rep.note("case " + kase);
  // (i) Z-basis of Q_g.
  Lattice qg = Lattice::span(rp.full.rank, delta);
  Lattice lb = Lattice::span(rp.full.rank, B);
  bool indep = Subspace::span(rp.full.rank, B).dim() == B.size();
  rep.add("B-is-Z-basis-of-Q_g", indep && lb == qg,
          {{"B", weights_json(B)}, {"independent", indep}, {"rank_Q_g", qg.rank()}, {"size_B", B.size()},
           {"Q_g", qg.to_json()}, {"Z_B", lb.to_json()}},
          "B is a basis of Q_g");
  // (ii) p(B) meet Delta_g0ss is a base.
  std::vector<Weight> pb;
  for (const auto& b : B) {
    Weight w = restrict_p(b, ss);
    if (contains_weight(dss, w)) pb.push_back(w);
  }
  pb = sorted_unique(pb);
  bool base = Subspace::span(ss, pb).dim() == pb.size() && pb.size() == Subspace::span(ss, dss).dim();
  std::size_t mixed = 0;
  if (base)
    for (const auto& r : dss)
      if (!base_coords(pb, r)) ++mixed;
  rep.add("p(B)-meet-Delta_ss-is-base", base && mixed == 0,
          {{"p(B) meet Delta_ss", weights_json(pb)}, {"roots_not_same_sign", mixed}},
          "p(B) meet Delta_g0ss is a base of Delta_g0ss");
  // (iii) g^alpha meet g0 = (g0ss)^{p(alpha)}.
  for (const auto& b : B) {
    Weight w = restrict_p(b, ss);
    const Root* r = rp.ss.find(w);
    if (!r) continue;
    Subspace lhs = root_meet_g0(f, rp, b);
    rep.add("g^" + weight_str(b) + " meet g0 = (g0ss)^p", lhs == r->space,
            {{"dim_lhs", lhs.dim()}, {"dim_rhs", r->space.dim()}}, "g^alpha meet g_0 = (g0ss)^{p(alpha)}");
  }
  // Named generators.
  if (sp.tag == FamilyTag::SL) {
    int n = sp.params[0];
    std::size_t N = static_cast<std::size_t>(n + 1);
    for (int i = 0; i + 1 < n; ++i)
      generator_check(rep, f, rp, B[static_cast<std::size_t>(i)],
                      f.mat->coords(elementary(N, static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1))),
                      "E_{" + std::to_string(i + 1) + "," + std::to_string(i + 2) + "}",
                      "generated by the matrix (E_ij 0; 0 0)");
  } else if (sp.tag == FamilyTag::W) {
    int n = sp.params[0];
    for (int i = 1; i < n; ++i) {
      Vec lit = f.der->coords(d_f(GElem::product(n, {i, i + 1})));
      generator_check(rep, f, rp, B[static_cast<std::size_t>(i - 1)], lit,
                      "literal D_{xi" + std::to_string(i) + " xi" + std::to_string(i + 1) + "}",
                      "generated by the derivations D_{xi_i xi_j}");
      Vec cor = f.der->coords(SuperDerivation::term(n, GElem::var(n, i), i + 1));
      generator_check(rep, f, rp, B[static_cast<std::size_t>(i - 1)], cor,
                      "xi" + std::to_string(i) + " d" + std::to_string(i + 1), "corrected generator");
    }
  } else if (sp.tag == FamilyTag::H) {
    int n = sp.params[0], l = n / 2;
    for (int i = 1; i < l; ++i) {
      const Weight& a = B[static_cast<std::size_t>(i - 1)];
      generator_check(rep, f, rp, a, eta_hamiltonian(f, {i, i + 1}),
                      "literal D_{eta" + std::to_string(i) + " eta" + std::to_string(i + 1) + "}",
                      "generated by D_{eta_i eta_j}");
      // The element of the form D_{eta_a eta_b} carrying the weight.
      std::string found = "none";
      Subspace target = root_meet_g0(f, rp, a);
      for (int p = 1; p <= n && found == "none"; ++p)
        for (int q = p + 1; q <= n; ++q) {
          Vec v = eta_hamiltonian(f, {p, q});
          if (Subspace::span(g.dim(), {v}) == target) {
            found = "D_{eta" + std::to_string(p) + " eta" + std::to_string(q) + "}";
            break;
          }
        }
      rep.add("some D_{eta_a eta_b} spans g^" + weight_str(a) + " meet g0", found != "none", {{"generator", found}},
              "corrected generator");
    }
    generator_check(rep, f, rp, B.back(), eta_hamiltonian(f, {l, n}),
                    "D_{eta" + std::to_string(l) + " eta" + std::to_string(n) + "}",
                    "g^{eps_i} meet g_0 generated by D_{eta_i eta_{2l+1}}");
  }
  return out;
}

Report lemma_t3_check(const Family& f, const RootPackage& rp) {
  const auto& g = f.g;
  bool psl22 = f.spec.tag == FamilyTag::PSL && f.spec.params[0] == 2;
  if (psl22 || g0ss_simple(f, rp))
    throw HypothesisNotSatisfied(g.name() + ": needs g0ss not simple and g != psl(2|2)");
  Report rep("lemma-t3:" + g.name());
  std::size_t bad = 0;
  Json w = Json::array();
  for (const auto& r : rp.full.roots)
    if (r.space.dim() != 1) {
      ++bad;
      w.push_back({{"root", weight_str(r.weight)}, {"dim", r.space.dim()}});
    }
  rep.add("multiplicity-one", bad == 0, {{"violations", w}}, "dim g^alpha = 1");
  std::vector<Weight> pi = simple_system(rp.full.weights());
  std::vector<Vec> gens;
  for (const auto& a : pi) {
    for (const auto& s : {a, neg(a)}) {
      const Root* r = rp.full.find(s);
      if (r)
        for (const auto& v : r->space.vectors()) gens.push_back(v);
    }
  }
  Subspace gen = subalgebra_generated(g, Subspace::span(g.dim(), gens));
  rep.add("simple-root-spaces-generate", gen.dim() == g.dim(),
          {{"Pi", weights_json(pi)}, {"generated_dim", gen.dim()}, {"dim", g.dim()}},
          "root spaces g^{+-alpha}, alpha in Pi, generate g");
  return rep;
}

SigmaStar sigma_star(const Family& f, const RootPackage& rp, const Matrix& sigma) {
  const auto& g = f.g;
  std::size_t ss = g.cartan_ss_dim();
  std::vector<Vec> hb = take(g.cartan_basis(), ss);
  Matrix inv = inverse_matrix(sigma);
  // Columns: coordinates of sigma^{-1} h_k on the h_g0ss basis.
  Matrix t(ss, ss);
  for (std::size_t k = 0; k < ss; ++k) {
    auto c = solve_in_basis(hb, inv * hb[k]);
    if (!c) throw CartanNotStabilized();
    for (std::size_t j = 0; j < ss; ++j) t(j, k) = (*c)[j];
  }
  Subspace g0ss = g.subspace("g0ss");
  if (!map_subspace(sigma, g0ss).contains(g0ss) || map_subspace(sigma, g0ss).dim() != g0ss.dim())
    throw CartanNotStabilized();
  SigmaStar out{{}, Report("sigma-star:" + g.name())};
  bool stab = true, transport = true;
  for (const auto& r : rp.ss.roots) {
    Weight s(ss);
    for (std::size_t k = 0; k < ss; ++k)
      for (std::size_t j = 0; j < ss; ++j) s[k] += t(j, k) * r.weight[j];
    auto idx = rp.ss.index(s);
    if (!idx) {
      stab = false;
      out.perm.push_back(rp.ss.roots.size());
      continue;
    }
    out.perm.push_back(*idx);
    if (!(map_subspace(sigma, r.space) == rp.ss.roots[*idx].space)) transport = false;
  }
  Json perm = Json::array();
  for (std::size_t k = 0; k < out.perm.size(); ++k)
    perm.push_back({{"beta", weight_str(rp.ss.roots[k].weight)},
                    {"sigma*beta", out.perm[k] < rp.ss.roots.size() ? weight_str(rp.ss.roots[out.perm[k]].weight)
                                                                     : std::string("not a root")}});
  out.report.add("sigma*-stabilizes-Delta_ss", stab, {{"permutation", perm}}, "sigma* stabilizes Delta_g0ss");
  out.report.add("root-space-transport", transport, {}, "sigma((g0ss)^beta) = (g0ss)^{sigma* beta}");
  return out;
}

std::vector<Weight> appendix_roots(const Family& f) {
  std::vector<Weight> out;
  const auto& sp = f.spec;
  int n = sp.params.at(0);
  auto eps = [&](const std::vector<int>& plus, const std::vector<int>& minus) {
    std::vector<long> a(f.eps.size());
    for (int i : plus) a[static_cast<std::size_t>(i - 1)] += 1;
    for (int j : minus) a[static_cast<std::size_t>(j - 1)] -= 1;
    return f.weight(a);
  };
  auto not_in = [](const std::vector<int>& s, int j) { return std::find(s.begin(), s.end(), j) == s.end(); };
  switch (sp.tag) {
    case FamilyTag::W:
      for (const auto& I : subsets(n, 0, n - 1)) {
        out.push_back(eps(I, {}));
        for (int j = 1; j <= n; ++j)
          if (not_in(I, j)) out.push_back(eps(I, {j}));
      }
      break;
    case FamilyTag::S:
    case FamilyTag::SPRIME:
      for (const auto& I : subsets(n, 1, n - 2)) out.push_back(eps(I, {}));
      for (const auto& I : subsets(n, 0, n - 1))
        for (int j = 1; j <= n; ++j)
          if (not_in(I, j)) out.push_back(eps(I, {j}));
      break;
    case FamilyTag::H:
    case FamilyTag::HTILDE: {
      int l = n / 2;
      for (const auto& I : subsets(l, 0, l))
        for (const auto& J : subsets(l, 0, l)) {
          bool disjoint = true;
          for (int j : J) disjoint &= not_in(I, j);
          if (disjoint) out.push_back(eps(I, J));
        }
      break;
    }
    default:
      throw std::invalid_argument("appendix root formulas cover Cartan type only");
  }
  std::vector<Weight> nz;
  for (auto& w : out)
    if (!is_zero(w)) nz.push_back(w);
  return sorted_unique(nz);
}

Vec eta_hamiltonian(const Family& f, const std::vector<int>& idx) {
  int n = f.spec.params.at(0);
  if (!f.der) throw std::invalid_argument("eta coordinates need a derivation model");
  GrassmannAutomorphism phi = eta_change(n);
  GElem prod = phi.apply(GElem::product(n, idx));
  return f.der->coords(d_f(prod));
}

Report bij_check(const Family& f, const std::vector<int>& I, const std::vector<int>& J) {
  if (f.spec.tag != FamilyTag::H) throw std::invalid_argument("B_{I,J} bases are defined on H(n)");
  const auto& g = f.g;
  int n = f.spec.params[0], l = n / 2;
  bool odd = n % 2 == 1;
  std::set<int> si(I.begin(), I.end()), sj(J.begin(), J.end());
  for (int i : I)
    if (i < 1 || i > l || sj.count(i)) throw std::invalid_argument("I and J must be disjoint subsets of 1..l");
  for (int j : J)
    if (j < 1 || j > l) throw std::invalid_argument("I and J must be disjoint subsets of 1..l");
  auto label = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "}";
  };
  Report rep("appendix-BIJ:" + g.name() + ":I=" + label(I) + ",J=" + label(J));

  std::vector<long> a(static_cast<std::size_t>(l), 0);
  for (int i : I) a[static_cast<std::size_t>(i - 1)] += 1;
  for (int j : J) a[static_cast<std::size_t>(j - 1)] -= 1;
  Weight alpha = f.weight(a);
  RootDatum rd = root_decomposition(g);
  const Root* root = rd.find(alpha);
  rep.add("eps_I - eps_J is a root", root != nullptr, {{"weight", weight_str(alpha)}});
  if (!root) return rep;

  // Elements D_{eta_I eta_K eta_J^ eta_K^ [eta_n]} with K disjoint from I and J.
  struct Elem {
    std::vector<int> k;
    bool prime;
    int fdeg;
    Vec v;
  };
  std::vector<int> free;
  for (int k = 1; k <= l; ++k)
    if (!si.count(k) && !sj.count(k)) free.push_back(k);
  std::vector<Elem> elems;
  std::size_t skipped = 0;
  for (unsigned m = 0; m < (1u << free.size()); ++m) {
    std::vector<int> k;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (m & (1u << b)) k.push_back(free[b]);
    for (bool prime : {false, true}) {
      if (prime && !odd) continue;
      std::vector<int> idx(I.begin(), I.end());
      idx.insert(idx.end(), k.begin(), k.end());
      for (int j : J) idx.push_back(j + l);
      for (int x : k) idx.push_back(x + l);
      if (prime) idx.push_back(n);
      int fdeg = static_cast<int>(idx.size());
      if (fdeg < 1 || fdeg > n - 1) {
        ++skipped;
        continue;
      }
      elems.push_back({k, prime, fdeg, eta_hamiltonian(f, idx)});
    }
  }
  if (skipped) rep.note(std::to_string(skipped) + " eta-monomials of degree 0 or n lie outside H(n) and are omitted");

  std::vector<Vec> all;
  for (const auto& e : elems) all.push_back(e.v);
  Subspace span = Subspace::span(g.dim(), all);
  rep.add("elements are linearly independent", span.dim() == elems.size(), {{"count", elems.size()}});
  rep.add(std::string(odd ? "B_{I,J} u B'_{I,J}" : "B_{I,J}") + " spans g^{eps_I - eps_J}", span == root->space,
          {{"root_space_dim", root->space.dim()}, {"span_dim", span.dim()}});

  // Printed degree rule uses |I| = sum of indices; computed W-degree is deg f - 2.
  long sum_i = 0, sum_j = 0;
  for (int i : I) sum_i += i;
  for (int j : J) sum_j += j;
  auto printed_degree = [&](const Elem& e) -> long {
    long k2 = 2 * static_cast<long>(e.k.size());
    return e.prime ? sum_i + sum_j + k2 : 1 + sum_i + sum_j + k2;
  };
  std::size_t bad_printed = 0, bad_computed = 0;
  Json wit_printed = Json::array(), wit_computed = nullptr;
  for (int d : g.grading_degrees()) {
    Subspace piece = subspace_intersection(root->space, g.graded_piece(d));
    std::vector<Vec> pr, co;
    for (const auto& e : elems) {
      if (printed_degree(e) == d) pr.push_back(e.v);
      if (e.fdeg - 2 == d) co.push_back(e.v);
    }
    Subspace sp = Subspace::span(g.dim(), pr), sc = Subspace::span(g.dim(), co);
    if (!(sp == piece)) {
      ++bad_printed;
      wit_printed.push_back({{"degree", d}, {"root_space_piece_dim", piece.dim()}, {"printed_set_size", pr.size()}});
    }
    if (!(sc == piece) && ++bad_computed == 1)
      wit_computed = {{"degree", d}, {"root_space_piece_dim", piece.dim()}, {"set_size", co.size()}};
  }
  rep.add("graded pieces match the printed |K| rule", bad_printed == 0,
          bad_printed ? Json{{"mismatches", wit_printed}, {"|I|", sum_i}, {"|J|", sum_j}} : Json(nullptr));
  rep.add("graded pieces match deg = #I + #J + 2#K - 2 (+1 with eta_n)", bad_computed == 0, wit_computed);
  return rep;
}

}  // namespace lsa
