// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/grassmann.hpp"

#include <bit>

#include "lsa/linalg.hpp"

namespace lsa {

int popcount(Mono m) { return std::popcount(m); }

int mono_mul_sign(Mono m1, Mono m2) {
  if (m1 & m2) return 0;
  int inv = 0;
  for (Mono r = m2; r; r &= r - 1) {
    int b = std::countr_zero(r);
    Mono above = b >= 31 ? 0u : (m1 >> (b + 1));
    inv += std::popcount(above);
  }
  return (inv & 1) ? -1 : 1;
}

GElem::GElem(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) throw IndexOutOfRange();
}

GElem GElem::constant(int n, const FieldScalar& c) { return monomial(n, 0, c); }

GElem GElem::var(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange();
  return monomial(n, Mono(1) << (i - 1));
}

GElem GElem::monomial(int n, Mono m, const FieldScalar& c) {
  GElem g(n);
  g.add_term(m, c);
  return g;
}

GElem GElem::product(int n, const std::vector<int>& idx) {
  GElem g = constant(n, 1);
  for (int i : idx) g = g * var(n, i);
  return g;
}

FieldScalar GElem::coeff(Mono m) const {
  auto it = t_.find(m);
  return it == t_.end() ? FieldScalar() : it->second;
}

void GElem::add_term(Mono m, const FieldScalar& c) {
  if (c.is_zero()) return;
  if (n_ < 32 && (m >> n_) != 0) throw IndexOutOfRange();
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

std::optional<int> GElem::parity() const {
  if (t_.empty()) return 0;
  int p = popcount(t_.begin()->first) & 1;
  for (const auto& [m, c] : t_)
    if ((popcount(m) & 1) != p) return std::nullopt;
  return p;
}

std::optional<int> GElem::degree() const {
  if (t_.empty()) return std::nullopt;
  int d = popcount(t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (popcount(m) != d) return std::nullopt;
  return d;
}

int GElem::min_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) {
    int k = popcount(m);
    if (d < 0 || k < d) d = k;
  }
  return d;
}

GElem GElem::degree_part(int d) const {
  GElem g(n_);
  for (const auto& [m, c] : t_)
    if (popcount(m) == d) g.t_.emplace(m, c);
  return g;
}

GElem& GElem::operator+=(const GElem& o) {
  if (o.n_ != n_) throw VariableCountMismatch();
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

GElem& GElem::operator-=(const GElem& o) {
  if (o.n_ != n_) throw VariableCountMismatch();
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

GElem GElem::operator-() const {
  GElem g(n_);
  for (const auto& [m, c] : t_) g.t_.emplace(m, -c);
  return g;
}

GElem operator*(const GElem& a, const GElem& b) {
  if (a.n_ != b.n_) throw VariableCountMismatch();
  GElem g(a.n_);
  for (const auto& [m1, c1] : a.t_)
    for (const auto& [m2, c2] : b.t_) {
      int s = mono_mul_sign(m1, m2);
      if (s == 0) continue;
      FieldScalar c = c1 * c2;
      g.add_term(m1 | m2, s > 0 ? c : -c);
    }
  return g;
}

GElem operator*(const FieldScalar& s, const GElem& a) {
  GElem g(a.n_);
  if (s.is_zero()) return g;
  for (const auto& [m, c] : a.t_) g.t_.emplace(m, s * c);
  return g;
}

Json GElem::to_json() const {
  Json out = Json::array();
  for (const auto& [m, c] : t_) {
    Json idx = Json::array();
    for (int j = 0; j < n_; ++j)
      if (m & (Mono(1) << j)) idx.push_back(j + 1);
    out.push_back(Json{{"monomial", idx}, {"coeff", c.to_json()}});
  }
  return out;
}

GElem g_mul(const GElem& f, const GElem& g) { return f * g; }

GElem g_partial(int i, const GElem& f) {
  if (i < 1 || i > f.nvars()) throw IndexOutOfRange();
  Mono bit = Mono(1) << (i - 1);
  GElem g(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (!(m & bit)) continue;
    bool neg = popcount(m & (bit - 1)) & 1;
    g.add_term(m & ~bit, neg ? -c : c);
  }
  return g;
}

SuperDerivation::SuperDerivation(int n) : n_(n), p_(static_cast<std::size_t>(n), GElem(n)) {}

SuperDerivation::SuperDerivation(int n, std::vector<GElem> coeffs) : n_(n), p_(std::move(coeffs)) {
  if (p_.size() != static_cast<std::size_t>(n)) throw VariableCountMismatch();
  for (const auto& p : p_)
    if (p.nvars() != n) throw VariableCountMismatch();
}

SuperDerivation SuperDerivation::partial(int n, int i) { return term(n, GElem::constant(n, 1), i); }

SuperDerivation SuperDerivation::term(int n, const GElem& p, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange();
  SuperDerivation d(n);
  d.coeff(i) = p;
  return d;
}

bool SuperDerivation::is_zero() const {
  for (const auto& p : p_)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<int> SuperDerivation::parity() const {
  std::optional<int> par;
  for (const auto& p : p_) {
    if (p.is_zero()) continue;
    auto q = p.parity();
    if (!q) return std::nullopt;
    if (par && *par != *q) return std::nullopt;
    par = q;
  }
  return par ? (*par + 1) % 2 : 0;
}

std::optional<int> SuperDerivation::degree() const {
  std::optional<int> deg;
  for (const auto& p : p_) {
    if (p.is_zero()) continue;
    auto q = p.degree();
    if (!q) return std::nullopt;
    if (deg && *deg != *q) return std::nullopt;
    deg = q;
  }
  if (!deg) return std::nullopt;
  return *deg - 1;
}

SuperDerivation SuperDerivation::degree_part(int j) const {
  SuperDerivation d(n_);
  for (std::size_t k = 0; k < p_.size(); ++k) d.p_[k] = p_[k].degree_part(j + 1);
  return d;
}

int SuperDerivation::min_degree() const {
  int best = n_;
  for (const auto& p : p_) {
    int m = p.min_degree();
    if (m >= 0 && m - 1 < best) best = m - 1;
  }
  return best;
}

SuperDerivation& SuperDerivation::operator+=(const SuperDerivation& o) {
  if (o.n_ != n_) throw VariableCountMismatch();
  for (std::size_t k = 0; k < p_.size(); ++k) p_[k] += o.p_[k];
  return *this;
}

SuperDerivation& SuperDerivation::operator-=(const SuperDerivation& o) {
  if (o.n_ != n_) throw VariableCountMismatch();
  for (std::size_t k = 0; k < p_.size(); ++k) p_[k] -= o.p_[k];
  return *this;
}

SuperDerivation operator*(const FieldScalar& s, const SuperDerivation& d) {
  SuperDerivation r(d.n_);
  for (std::size_t k = 0; k < d.p_.size(); ++k) r.p_[k] = s * d.p_[k];
  return r;
}

SuperDerivation operator*(const GElem& g, const SuperDerivation& d) {
  SuperDerivation r(d.n_);
  for (std::size_t k = 0; k < d.p_.size(); ++k) r.p_[k] = g * d.p_[k];
  return r;
}

Json SuperDerivation::to_json() const {
  Json out = Json::array();
  for (const auto& p : p_) out.push_back(p.to_json());
  return out;
}

GElem d_apply(const SuperDerivation& d, const GElem& f) {
  if (d.nvars() != f.nvars()) throw VariableCountMismatch();
  GElem r(f.nvars());
  for (int i = 1; i <= d.nvars(); ++i) {
    const GElem& p = d.coeff(i);
    if (p.is_zero()) continue;
    GElem df = g_partial(i, f);
    if (!df.is_zero()) r += p * df;
  }
  return r;
}

SuperDerivation d_bracket(const SuperDerivation& a, const SuperDerivation& b) {
  if (a.nvars() != b.nvars()) throw VariableCountMismatch();
  auto pa = a.parity(), pb = b.parity();
  if (!pa || !pb) throw InhomogeneousParity();
  bool anti = (*pa & *pb) == 1;
  int n = a.nvars();
  SuperDerivation r(n);
  for (int k = 1; k <= n; ++k) {
    GElem q = d_apply(a, b.coeff(k));
    GElem s = d_apply(b, a.coeff(k));
    r.coeff(k) = anti ? q + s : q - s;
  }
  return r;
}

SuperDerivation d_f(const GElem& f) {
  int n = f.nvars();
  SuperDerivation d(n);
  for (int i = 1; i <= n; ++i) d.coeff(i) = g_partial(i, f);
  return d;
}

GElem poisson(const GElem& f, const GElem& g) {
  if (f.nvars() != g.nvars()) throw VariableCountMismatch();
  auto pf = f.parity();
  if (!pf) throw InhomogeneousParity();
  GElem r(f.nvars());
  for (int i = 1; i <= f.nvars(); ++i) {
    GElem a = g_partial(i, f);
    if (a.is_zero()) continue;
    r += a * g_partial(i, g);
  }
  return *pf ? -r : r;
}

GrassmannAutomorphism::GrassmannAutomorphism(std::vector<GElem> images)
    : n_(static_cast<int>(images.size())), img_(std::move(images)) {
  Matrix lin(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    const GElem& g = img_[static_cast<std::size_t>(j)];
    if (g.nvars() != n_) throw VariableCountMismatch();
    auto p = g.parity();
    if (!p || (*p != 1 && !g.is_zero())) throw InhomogeneousParity();
    for (int k = 0; k < n_; ++k)
      lin(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = g.coeff(Mono(1) << k);
  }
  if (n_ > 0 && determinant(lin).is_zero()) throw NonInvertibleLinearPart();
}

GrassmannAutomorphism GrassmannAutomorphism::identity(int n) { return scaling(n, 1); }

GrassmannAutomorphism GrassmannAutomorphism::scaling(int n, const FieldScalar& lambda) {
  std::vector<GElem> im;
  for (int i = 1; i <= n; ++i) im.push_back(lambda * GElem::var(n, i));
  return GrassmannAutomorphism(std::move(im));
}

GElem GrassmannAutomorphism::apply(const GElem& f) const {
  if (f.nvars() != n_) throw VariableCountMismatch();
  GElem r(n_);
  for (const auto& [m, c] : f.terms()) {
    GElem t = GElem::constant(n_, c);
    for (int j = 0; j < n_; ++j)
      if (m & (Mono(1) << j)) t = t * img_[static_cast<std::size_t>(j)];
    r += t;
  }
  return r;
}

GrassmannAutomorphism GrassmannAutomorphism::compose(const GrassmannAutomorphism& inner) const {
  if (inner.n_ != n_) throw VariableCountMismatch();
  std::vector<GElem> im;
  for (const auto& g : inner.img_) im.push_back(apply(g));
  return GrassmannAutomorphism(std::move(im));
}

GrassmannAutomorphism GrassmannAutomorphism::inverse() const {
  auto un = static_cast<std::size_t>(n_);
  Matrix lin(un, un);
  for (std::size_t j = 0; j < un; ++j)
    for (std::size_t k = 0; k < un; ++k) lin(k, j) = img_[j].coeff(Mono(1) << k);
  Matrix li = inverse_matrix(lin);
  std::vector<GElem> lim;
  for (std::size_t j = 0; j < un; ++j) {
    GElem g(n_);
    for (std::size_t k = 0; k < un; ++k) g.add_term(Mono(1) << k, li(k, j));
    lim.push_back(std::move(g));
  }
  GrassmannAutomorphism linv(lim);
  std::vector<GElem> psi = lim;
  for (int iter = 0; iter <= n_; ++iter) {
    bool done = true;
    for (std::size_t i = 0; i < un; ++i) {
      GElem err = apply(psi[i]) - GElem::var(n_, static_cast<int>(i) + 1);
      if (err.is_zero()) continue;
      done = false;
      psi[i] -= linv.apply(err);
    }
    if (done) return GrassmannAutomorphism(std::move(psi));
  }
  throw std::logic_error("automorphism inversion did not converge");
}

SuperDerivation phi_conjugate(const GrassmannAutomorphism& phi, const SuperDerivation& d) {
  int n = d.nvars();
  if (phi.nvars() != n) throw VariableCountMismatch();
  GrassmannAutomorphism inv = phi.inverse();
  SuperDerivation r(n);
  for (int k = 1; k <= n; ++k) r.coeff(k) = phi.apply(d_apply(d, inv.image(k)));
  return r;
}

GrassmannAutomorphism eta_change(int n) {
  int l = n / 2;
  FieldScalar s = FieldScalar(Rational(1, 2), 0, 0, 0) * FieldScalar::sqrt2();  // 1/sqrt2
  FieldScalar si = s * FieldScalar::i();
  std::vector<GElem> im(static_cast<std::size_t>(n), GElem(n));
  for (int i = 1; i <= l; ++i) {
    im[static_cast<std::size_t>(i - 1)] = s * GElem::var(n, i) + si * GElem::var(n, i + l);
    im[static_cast<std::size_t>(i + l - 1)] = s * GElem::var(n, i) - si * GElem::var(n, i + l);
  }
  if (n % 2 == 1) im[static_cast<std::size_t>(n - 1)] = GElem::var(n, n);
  return GrassmannAutomorphism(std::move(im));
}

GrassmannAutomorphism b_a(int n, const FieldScalar& a) {
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  GElem top = GElem::product(n, all);
  std::vector<GElem> im;
  for (int i = 1; i <= n; ++i) im.push_back(GElem::var(n, i) + a * g_partial(i, top));
  return GrassmannAutomorphism(std::move(im));
}

}  // namespace lsa
