// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/linalg.hpp"

#include <algorithm>

namespace lsa {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch();
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + static_cast<long>(r * cols_), e_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw AmbientMismatch();
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldScalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw AmbientMismatch();
  Vec out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const FieldScalar& x = a(i, k);
      if (!x.is_zero()) out[i] += x * v[k];
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch();
  Matrix m(a);
  for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw AmbientMismatch();
  Matrix m(a);
  for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= b.e_[k];
  return m;
}

Matrix operator*(const FieldScalar& s, const Matrix& a) {
  Matrix m(a);
  for (auto& x : m.e_)
    if (!x.is_zero()) x = x * s;
  return m;
}

Json Matrix::to_json() const {
  Json rows = Json::array();
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(vec_to_json(row(r)));
  return rows;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch();
  Vec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw AmbientMismatch();
  Vec r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

Vec vec_scale(const FieldScalar& s, const Vec& a) {
  Vec r(a.size());
  if (s.is_zero()) return r;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) r[k] = a[k] * s;
  return r;
}

void vec_axpy(Vec& y, const FieldScalar& s, const Vec& x) {
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!x[k].is_zero()) y[k] += s * x[k];
}

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    // Prefer a rational pivot; inversion is then cheap.
    std::size_t best = rows;
    for (; p < rows; ++p) {
      if (m(p, c).is_zero()) continue;
      if (best == rows) best = p;
      if (m(p, c).is_rational()) {
        best = p;
        break;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(best, j), m(r, j));
    FieldScalar inv = m(r, c).inv();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      FieldScalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(m(i, j));
  return {std::move(out), std::move(piv)};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Matrix inverse_matrix(const Matrix& m) {
  if (!m.is_square()) throw AmbientMismatch();
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, piv] = rref(std::move(aug));
  if (piv.size() < n || piv[n - 1] != n - 1) throw DivisionByZero();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

FieldScalar determinant(Matrix m) {
  if (!m.is_square()) throw AmbientMismatch();
  std::size_t n = m.rows();
  FieldScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return FieldScalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    FieldScalar inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      FieldScalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  auto [r, piv] = rref(Matrix::from_rows(vectors, ambient));
  s.basis_ = std::move(r);
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.pivots_[k] = k;
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.row(k));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw AmbientMismatch();
  Vec r(v);
  for (std::size_t k = 0; k < dim(); ++k) {
    FieldScalar f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) r[j] -= f * basis_(k, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw AmbientMismatch();
  for (std::size_t k = 0; k < o.dim(); ++k)
    if (!contains(o.basis_.row(k))) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  Vec v(ambient_);
  for (std::size_t k = 0; k < dim(); ++k) vec_axpy(v, c[k], basis_.row(k));
  return v;
}

Json Subspace::to_json() const { return basis_.to_json(); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
  auto vs = a.vectors();
  auto wb = b.vectors();
  vs.insert(vs.end(), wb.begin(), wb.end());
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch();
  std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace(n);
  Matrix m(n, da + db);
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, k) = a.basis()(k, i);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t i = 0; i < n; ++i) m(i, da + k) = -b.basis()(k, i);
  Subspace ker = kernel(m);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec x = ker.vector(k);
    Vec v(n);
    for (std::size_t j = 0; j < da; ++j) vec_axpy(v, x[j], a.vector(j));
    out.push_back(std::move(v));
  }
  return Subspace::span(n, out);
}

Subspace kernel(const Matrix& m) {
  std::size_t n = m.cols();
  auto [r, piv] = rref(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k)
      if (!r(k, f).is_zero()) v[piv[k]] = -r(k, f);
    out.push_back(std::move(v));
  }
  return Subspace::span(n, out);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(m.rows(), cols);
}

Matrix restrict_to(const Matrix& a, const Subspace& s) {
  std::size_t d = s.dim();
  Matrix r(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec img = a * s.vector(j);
    if (!s.contains(img)) throw NotInvariant("operator does not preserve subspace");
    Vec c = s.coords(img);
    for (std::size_t i = 0; i < d; ++i) r(i, j) = std::move(c[i]);
  }
  return r;
}

Subspace map_subspace(const Matrix& a, const Subspace& s) {
  std::vector<Vec> imgs;
  for (std::size_t j = 0; j < s.dim(); ++j) imgs.push_back(a * s.vector(j));
  return Subspace::span(a.rows(), imgs);
}

Subspace generalized_eigenspace(const Matrix& a, const FieldScalar& lambda) {
  if (!a.is_square()) throw AmbientMismatch();
  std::size_t n = a.rows();
  Matrix m(a);
  if (!lambda.is_zero())
    for (std::size_t k = 0; k < n; ++k) m(k, k) -= lambda;
  Subspace k = kernel(m);
  if (k.dim() == 0) return k;
  Matrix p = m;
  for (std::size_t j = 1; j < n; ++j) {
    p = p * m;
    Subspace k2 = kernel(p);
    if (k2.dim() == k.dim()) break;
    k = std::move(k2);
  }
  return k;
}

std::vector<FieldScalar> default_candidates(long bound) {
  struct Cand {
    Rational h;
    FieldScalar v;
  };
  std::vector<Cand> cs;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      cs.push_back({Rational(std::abs(a) + std::abs(b)), FieldScalar(Rational(a), 0, Rational(b), 0)});
  for (long a = -2 * bound; a <= 2 * bound; ++a) {
    if (a % 2 == 0) continue;
    Rational q(a, 2);
    cs.push_back({abs(q), FieldScalar(q)});
  }
  std::stable_sort(cs.begin(), cs.end(), [](const Cand& x, const Cand& y) {
    if (x.h != y.h) return x.h < y.h;
    return x.v < y.v;
  });
  std::vector<FieldScalar> out;
  for (auto& c : cs) out.push_back(std::move(c.v));
  return out;
}

bool tuple_less(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<WeightPiece> weight_decomposition(const std::vector<Matrix>& ops, std::size_t n,
                                              const std::vector<FieldScalar>& candidates) {
  std::vector<WeightPiece> pieces{{{}, Subspace::full(n)}};
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    const Matrix& a = ops[oi];
    if (a.rows() != n || a.cols() != n) throw AmbientMismatch();
    std::vector<WeightPiece> next;
    for (auto& pc : pieces) {
      Matrix r = restrict_to(a, pc.space);
      std::size_t found = 0, d = pc.space.dim();
      for (const auto& lam : candidates) {
        Subspace e = generalized_eigenspace(r, lam);
        if (e.dim() == 0) continue;
        std::vector<Vec> lifted;
        for (std::size_t k = 0; k < e.dim(); ++k) lifted.push_back(pc.space.from_coords(e.vector(k)));
        auto w = pc.weight;
        w.push_back(lam);
        next.push_back({std::move(w), Subspace::span(n, lifted)});
        found += e.dim();
        if (found == d) break;
      }
      if (found != d)
        throw EigenvaluesOutsideCandidateSet("operator " + std::to_string(oi) + ": eigenspaces cover " +
                                             std::to_string(found) + " of " + std::to_string(d) +
                                             " dimensions");
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const WeightPiece& x, const WeightPiece& y) { return tuple_less(x.weight, y.weight); });
  std::vector<Vec> all;
  std::size_t total = 0;
  for (const auto& pc : pieces) {
    total += pc.space.dim();
    auto vs = pc.space.vectors();
    all.insert(all.end(), vs.begin(), vs.end());
  }
  if (total != n || Subspace::span(n, all).dim() != n)
    throw std::logic_error("weight pieces are not a direct sum decomposition");
  return pieces;
}

}  // namespace lsa
