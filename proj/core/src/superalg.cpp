// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/superalg.hpp"

#include <algorithm>
#include <set>

namespace lsa {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.push_back({k, v[k]});
  return s;
}

Vec to_dense(const SparseVec& s, std::size_t n) {
  Vec v(n);
  for (const auto& e : s) v[e.k] = e.c;
  return v;
}

namespace {

SparseVec negate_sparse(const SparseVec& s, bool negate) {
  SparseVec r = s;
  if (negate)
    for (auto& e : r) e.c = -e.c;
  return r;
}

Json sparse_witness(const LieSuperalgebra& g, const Vec& v) {
  Json j = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) {
      std::string key = k < g.labels().size() ? g.labels()[k] : "e" + std::to_string(k);
      j[key] = v[k].str();
    }
  return j;
}

std::string label(const LieSuperalgebra& g, std::size_t k) {
  return k < g.labels().size() ? g.labels()[k] : "e" + std::to_string(k);
}

}  // namespace

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<int> parity, const BracketFn& fn)
    : name_(std::move(name)), parity_(std::move(parity)) {
  std::size_t n = dim();
  sc_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec v = fn(i, j);
      if (v.size() != n) throw DimensionMismatch();
      SparseVec s = to_sparse(v);
      for (const auto& e : s)
        if (parity_[e.k] != (parity_[i] ^ parity_[j]))
          throw std::logic_error("bracket violates parity additivity in " + name_);
      bool sym = (parity_[i] & parity_[j]) == 1;
      sc_[j * n + i] = negate_sparse(s, !sym);
      sc_[i * n + j] = std::move(s);
    }
  for (std::size_t i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
}

const std::vector<int>& LieSuperalgebra::zdeg() const {
  if (!zdeg_) throw std::logic_error("algebra has no grading");
  return *zdeg_;
}

void LieSuperalgebra::set_grading(std::vector<int> deg, int zmod) {
  if (deg.size() != dim()) throw DimensionMismatch();
  zdeg_ = std::move(deg);
  zmod_ = zmod;
}

std::vector<int> LieSuperalgebra::grading_degrees() const {
  std::set<int> s(zdeg().begin(), zdeg().end());
  return {s.begin(), s.end()};
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const SparseVec& s = sc_[i * n + j];
      if (s.empty()) continue;
      FieldScalar f = x[i] * y[j];
      for (const auto& e : s) r[e.k] += f * e.c;
    }
  }
  return r;
}

Matrix LieSuperalgebra::ad(const Vec& x) const {
  std::size_t n = dim();
  if (x.size() != n) throw DimensionMismatch();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : sc_[i * n + j]) m(e.k, j) += x[i] * e.c;
  }
  return m;
}

Matrix LieSuperalgebra::ad_basis(std::size_t i) const { return ad(unit_vec(dim(), i)); }

Matrix LieSuperalgebra::right_mult(const Vec& y) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : sc_[i * n + j]) m(e.k, i) += y[j] * e.c;
  }
  return m;
}

std::optional<int> LieSuperalgebra::element_parity(const Vec& x) const {
  bool ev = false, od = false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) (parity_[k] ? od : ev) = true;
  if (ev && od) return std::nullopt;
  return od ? 1 : 0;
}

bool LieSuperalgebra::parity_homogeneous(const Subspace& s) const {
  std::size_t d = subspace_intersection(s, even_part()).dim() + subspace_intersection(s, odd_part()).dim();
  return d == s.dim();
}

void LieSuperalgebra::register_subspace(const std::string& name, Subspace s) {
  if (s.ambient_dim() != dim()) throw DimensionMismatch();
  registry_[name] = std::move(s);
}

const Subspace& LieSuperalgebra::subspace(const std::string& name) const {
  auto it = registry_.find(name);
  if (it == registry_.end()) throw UnknownSubspace(name);
  return it->second;
}

void LieSuperalgebra::set_cartan_basis(std::vector<Vec> basis, std::size_t ss_dim) {
  for (const auto& v : basis)
    if (v.size() != dim()) throw DimensionMismatch();
  cartan_basis_ = std::move(basis);
  cartan_ss_dim_ = ss_dim;
}

Subspace LieSuperalgebra::even_part() const {
  std::vector<Vec> vs;
  for (std::size_t k = 0; k < dim(); ++k)
    if (parity_[k] == 0) vs.push_back(unit_vec(dim(), k));
  return Subspace::span(dim(), vs);
}

Subspace LieSuperalgebra::odd_part() const {
  std::vector<Vec> vs;
  for (std::size_t k = 0; k < dim(); ++k)
    if (parity_[k] == 1) vs.push_back(unit_vec(dim(), k));
  return Subspace::span(dim(), vs);
}

Subspace LieSuperalgebra::graded_piece(int degree) const {
  std::vector<Vec> vs;
  for (std::size_t k = 0; k < dim(); ++k)
    if (zdeg()[k] == degree) vs.push_back(unit_vec(dim(), k));
  return Subspace::span(dim(), vs);
}

LieSuperalgebra LieSuperalgebra::perturbed(std::size_t i, std::size_t j, std::size_t k,
                                           const FieldScalar& delta) const {
  LieSuperalgebra g(*this);
  std::size_t n = dim();
  auto bump = [&](std::size_t a, std::size_t b, const FieldScalar& d) {
    SparseVec& s = g.sc_[a * n + b];
    auto it = std::find_if(s.begin(), s.end(), [&](const ScEntry& e) { return e.k == k; });
    if (it == s.end()) {
      s.push_back({k, d});
      std::sort(s.begin(), s.end(), [](const ScEntry& x, const ScEntry& y) { return x.k < y.k; });
    } else {
      it->c += d;
      if (it->c.is_zero()) s.erase(it);
    }
  };
  bump(i, j, delta);
  if (i != j) {
    bool sym = (parity_[i] & parity_[j]) == 1;
    bump(j, i, sym ? delta : -delta);
  }
  g.name_ = name_ + "~perturbed";
  return g;
}

Json LieSuperalgebra::to_json() const {
  Json j;
  j["name"] = name_;
  j["dim"] = dim();
  j["labels"] = labels_;
  j["parity"] = parity_;
  if (zdeg_) {
    j["degree"] = *zdeg_;
    if (zmod_) j["degree_modulus"] = zmod_;
  }
  Json sc = Json::array();
  std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& e : sc_[a * n + b]) sc.push_back(Json::array({a, b, e.k, e.c.str()}));
  j["structure_constants"] = std::move(sc);
  Json reg = Json::object();
  for (const auto& [name, s] : registry_) reg[name] = s.to_json();
  j["registry"] = std::move(reg);
  Json cb = Json::array();
  for (const auto& v : cartan_basis_) cb.push_back(vec_to_json(v));
  j["cartan_basis"] = std::move(cb);
  j["cartan_ss_dim"] = cartan_ss_dim_;
  return j;
}

std::optional<Vec> SpanBuilder::insert(const Vec& v) {
  Vec r(v);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    FieldScalar f = r[piv_[k]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[k];
    for (std::size_t j = 0; j < n_; ++j)
      if (!row[j].is_zero()) r[j] -= f * row[j];
  }
  std::size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return std::nullopt;
  FieldScalar inv = r[p].inv();
  for (auto& x : r)
    if (!x.is_zero()) x = x * inv;
  for (auto& row : rows_) {
    FieldScalar f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  rows_.push_back(r);
  piv_.push_back(p);
  return r;
}

Subspace SpanBuilder::subspace() const { return Subspace::span(n_, rows_); }

Report antisymmetry_check(const LieSuperalgebra& g) {
  Report rep("antisymmetry");
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec a = to_dense(g.bracket_basis(i, j), n);
      Vec b = to_dense(g.bracket_basis(j, i), n);
      bool sym = (g.parity(i) & g.parity(j)) == 1;
      Vec s = sym ? vec_sub(a, b) : vec_add(a, b);
      if (!is_zero(s)) {
        rep.add("super-antisymmetry", false,
                Json{{"i", label(g, i)}, {"j", label(g, j)}, {"defect", sparse_witness(g, s)}},
                "bracket is super-antisymmetric");
        return rep;
      }
    }
  rep.add("super-antisymmetry", true, nullptr, "bracket is super-antisymmetric");
  return rep;
}

Report parity_grading_check(const LieSuperalgebra& g) {
  Report rep("parity-grading");
  std::size_t n = g.dim();
  Json bad_par = nullptr, bad_deg = nullptr;
  for (std::size_t i = 0; i < n && (bad_par.is_null() || bad_deg.is_null()); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : g.bracket_basis(i, j)) {
        if (bad_par.is_null() && g.parity(e.k) != (g.parity(i) ^ g.parity(j)))
          bad_par = Json{{"i", label(g, i)}, {"j", label(g, j)}, {"k", label(g, e.k)}, {"c", e.c.str()}};
        if (g.has_grading() && bad_deg.is_null()) {
          int want = g.zdeg()[i] + g.zdeg()[j];
          int got = g.zdeg()[e.k];
          bool ok = g.zmod() ? ((want - got) % g.zmod() == 0) : want == got;
          if (!ok)
            bad_deg = Json{{"i", label(g, i)}, {"j", label(g, j)}, {"k", label(g, e.k)}, {"c", e.c.str()}};
        }
      }
  rep.add("parity-additivity", bad_par.is_null(), bad_par, "brackets add parities");
  if (g.has_grading())
    rep.add("grading-additivity", bad_deg.is_null(), bad_deg, "brackets add degrees of the standard grading");
  return rep;
}

Report jacobi_check(const LieSuperalgebra& g) {
  Report rep("jacobi");
  std::size_t n = g.dim();
  auto br_sparse = [&](std::size_t i, const SparseVec& v) {
    Vec r(n);
    for (const auto& e : v)
      for (const auto& f : g.bracket_basis(i, e.k)) r[f.k] += e.c * f.c;
    return r;
  };
  auto br_left = [&](const SparseVec& v, std::size_t k) {
    Vec r(n);
    for (const auto& e : v)
      for (const auto& f : g.bracket_basis(e.k, k)) r[f.k] += e.c * f.c;
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Vec lhs = br_sparse(i, g.bracket_basis(j, k));
        Vec t1 = br_left(g.bracket_basis(i, j), k);
        Vec t2 = br_sparse(j, g.bracket_basis(i, k));
        bool neg = (g.parity(i) & g.parity(j)) == 1;
        Vec rhs = neg ? vec_sub(t1, t2) : vec_add(t1, t2);
        Vec d = vec_sub(lhs, rhs);
        if (!is_zero(d)) {
          rep.add("super-jacobi", false,
                  Json{{"triple", {label(g, i), label(g, j), label(g, k)}}, {"defect", sparse_witness(g, d)}},
                  "super Jacobi identity");
          return rep;
        }
      }
  rep.add("super-jacobi", true, nullptr, "super Jacobi identity");
  return rep;
}

Report structure_check(const LieSuperalgebra& g) {
  Report rep("structure:" + g.name());
  rep.merge(antisymmetry_check(g));
  rep.merge(parity_grading_check(g));
  rep.merge(jacobi_check(g));
  return rep;
}

Subspace bracket_spaces(const LieSuperalgebra& g, const Subspace& a, const Subspace& b) {
  SpanBuilder sb(g.dim());
  auto av = a.vectors(), bv = b.vectors();
  for (const auto& x : av)
    for (const auto& y : bv) sb.insert(g.bracket(x, y));
  return sb.subspace();
}

Subspace derived_of(const LieSuperalgebra& g, const Subspace& s) { return bracket_spaces(g, s, s); }

Subspace derived(const LieSuperalgebra& g) {
  SpanBuilder sb(g.dim());
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const SparseVec& s = g.bracket_basis(i, j);
      if (!s.empty()) sb.insert(to_dense(s, n));
      if (sb.dim() == n) return sb.subspace();
    }
  return sb.subspace();
}

namespace {

Subspace joint_kernel(const std::vector<Matrix>& ms, std::size_t n) {
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix big(rows, n);
  std::size_t r0 = 0;
  for (const auto& m : ms) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) big(r0 + r, c) = m(r, c);
    r0 += m.rows();
  }
  return kernel(big);
}

}  // namespace

Subspace centralizer(const LieSuperalgebra& g, const Subspace& s) {
  std::vector<Matrix> ms;
  for (const auto& v : s.vectors()) ms.push_back(g.ad(v));
  if (ms.empty()) return Subspace::full(g.dim());
  return joint_kernel(ms, g.dim());
}

Subspace center(const LieSuperalgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(s.basis());
}

Subspace normalizer(const LieSuperalgebra& g, const Subspace& s) {
  Subspace ann = annihilator(s);
  if (ann.dim() == 0) return Subspace::full(g.dim());
  std::vector<Matrix> ms;
  for (const auto& v : s.vectors()) ms.push_back(ann.basis() * g.right_mult(v));
  if (ms.empty()) return Subspace::full(g.dim());
  return joint_kernel(ms, g.dim());
}

Subspace ideal_generated(const LieSuperalgebra& g, const Subspace& s) {
  std::size_t n = g.dim();
  SpanBuilder sb(n);
  std::vector<Vec> work;
  for (const auto& v : s.vectors())
    if (auto r = sb.insert(v)) work.push_back(*r);
  while (!work.empty() && sb.dim() < n) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < n && sb.dim() < n; ++i) {
      Vec w(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& e : g.bracket_basis(i, j)) w[e.k] += v[j] * e.c;
      }
      if (is_zero(w)) continue;
      if (auto r = sb.insert(w)) work.push_back(*r);
    }
  }
  return sb.subspace();
}

Subspace subalgebra_generated(const LieSuperalgebra& g, const Subspace& s) {
  std::size_t n = g.dim();
  SpanBuilder sb(n);
  std::vector<Vec> all, work;
  for (const auto& v : s.vectors())
    if (auto r = sb.insert(v)) {
      all.push_back(*r);
      work.push_back(*r);
    }
  while (!work.empty() && sb.dim() < n) {
    Vec v = std::move(work.back());
    work.pop_back();
    std::size_t m = all.size();
    for (std::size_t k = 0; k < m && sb.dim() < n; ++k) {
      Vec w = g.bracket(all[k], v);
      if (is_zero(w)) continue;
      if (auto r = sb.insert(w)) {
        all.push_back(*r);
        work.push_back(*r);
      }
    }
  }
  return sb.subspace();
}

bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s) {
  auto vs = s.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a; b < vs.size(); ++b)
      if (!s.contains(g.bracket(vs[a], vs[b]))) return false;
  return true;
}

bool is_ideal(const LieSuperalgebra& g, const Subspace& s) {
  std::size_t n = g.dim();
  for (const auto& v : s.vectors())
    for (std::size_t i = 0; i < n; ++i)
      if (!s.contains(g.bracket(unit_vec(n, i), v))) return false;
  return true;
}

Vec Quotient::project(const Vec& v) const {
  Vec r = ideal.reduce(v);
  Vec out(complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) out[k] = r[complement[k]];
  return out;
}

Vec Quotient::lift(const Vec& v) const {
  Vec out(ideal.ambient_dim());
  for (std::size_t k = 0; k < complement.size(); ++k) out[complement[k]] = v[k];
  return out;
}

Subspace Quotient::project(const Subspace& s) const {
  std::vector<Vec> vs;
  for (const auto& v : s.vectors()) vs.push_back(project(v));
  return Subspace::span(complement.size(), vs);
}

Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw DimensionMismatch();
  if (!is_ideal(g, ideal)) throw NotAnIdeal();
  if (!g.parity_homogeneous(ideal)) throw NotParityHomogeneous();
  Quotient q;
  q.ideal = ideal;
  std::vector<bool> piv(g.dim(), false);
  for (auto p : ideal.pivots()) piv[p] = true;
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (!piv[k]) q.complement.push_back(k);
  std::vector<int> par;
  std::vector<std::string> labels;
  for (auto c : q.complement) {
    par.push_back(g.parity(c));
    labels.push_back(g.labels()[c]);
  }
  const auto& comp = q.complement;
  q.algebra = LieSuperalgebra(g.name() + "/I", par, [&](std::size_t i, std::size_t j) {
    return q.project(to_dense(g.bracket_basis(comp[i], comp[j]), g.dim()));
  });
  q.algebra.set_labels(labels);
  if (g.has_grading()) {
    std::vector<int> deg;
    for (auto c : comp) deg.push_back(g.zdeg()[c]);
    q.algebra.set_grading(deg, g.zmod());
  }
  return q;
}

Report simplicity_probe(const LieSuperalgebra& g, std::size_t trials, std::uint64_t seed) {
  Report rep("simplicity-probe:" + g.name());
  rep.set_seed(seed);
  std::size_t n = g.dim();
  auto test = [&](const Vec& v, const std::string& what) {
    Subspace id = ideal_generated(g, Subspace::span(n, {v}));
    if (id.dim() != n) {
      rep.add("proper-ideal", false,
              Json{{"generator", what}, {"ideal_dim", id.dim()}, {"dim", n}, {"ideal", id.to_json()}},
              "simple finite dimensional Lie superalgebra");
      return false;
    }
    return true;
  };
  if (derived(g).dim() != n) {
    rep.add("perfect", false, Json{{"derived_dim", derived(g).dim()}, {"dim", n}},
            "simple finite dimensional Lie superalgebra");
    return rep;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!test(unit_vec(n, k), label(g, k))) return rep;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec v(n);
    for (auto& x : v) x = rng.scalar(true, 2);
    if (is_zero(v)) continue;
    if (!test(v, "random#" + std::to_string(t))) return rep;
  }
  rep.add("no-proper-ideal-found", true, Json{{"trials", trials}, {"basis_vectors", n}},
          "simple finite dimensional Lie superalgebra");
  return rep;
}

LieSuperalgebra subalgebra(const LieSuperalgebra& g, const Subspace& s, const std::string& name) {
  if (!is_subalgebra(g, s)) throw NotASubalgebra();
  auto vs = s.vectors();
  std::vector<int> par;
  for (const auto& v : vs) {
    auto p = g.element_parity(v);
    if (!p) throw NotParityHomogeneous();
    par.push_back(*p);
  }
  return LieSuperalgebra(name, par, [&](std::size_t i, std::size_t j) { return s.coords(g.bracket(vs[i], vs[j])); });
}

}  // namespace lsa
