// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lsa {

namespace {

using FS = FieldScalar;

std::string join_params(const std::vector<int>& p, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(p[k]);
  }
  return s;
}

// Pivot-based coordinate solver shared by the matrix and derivation models.
// Rows of `flat` are the basis vectors in a flattened ambient space.
void prepare_solver(const std::vector<SparseVec>& flat, std::size_t ambient,
                    std::vector<std::size_t>& piv, Matrix& solve) {
  std::size_t d = flat.size();
  Matrix ft(d, ambient);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& e : flat[k]) ft(k, e.k) = e.c;
  auto [r, p] = rref(ft);
  if (p.size() != d) throw std::logic_error("model basis is linearly dependent");
  piv = p;
  Matrix s(d, d);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t k = 0; k < d; ++k) s(row, k) = ft(k, piv[row]);
  solve = inverse_matrix(s);
}

std::optional<Vec> solve_coords(const std::vector<SparseVec>& flat, const std::vector<std::size_t>& piv,
                                const Matrix& solve, const std::map<std::size_t, FS>& target) {
  std::size_t d = flat.size();
  Vec rhs(d);
  for (std::size_t row = 0; row < d; ++row) {
    auto it = target.find(piv[row]);
    if (it != target.end()) rhs[row] = it->second;
  }
  Vec c = solve * rhs;
  std::map<std::size_t, FS> rec;
  for (std::size_t k = 0; k < d; ++k) {
    if (c[k].is_zero()) continue;
    for (const auto& e : flat[k]) rec[e.k] = rec[e.k] + c[k] * e.c;
  }
  for (auto it = rec.begin(); it != rec.end();) {
    if (it->second.is_zero()) it = rec.erase(it);
    else ++it;
  }
  if (rec != target) return std::nullopt;
  return c;
}

std::map<std::size_t, FS> flatten(const Matrix& x) {
  std::map<std::size_t, FS> out;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!x(r, c).is_zero()) out[r * x.cols() + c] = x(r, c);
  return out;
}

std::map<std::size_t, FS> flatten(const SuperDerivation& d) {
  std::map<std::size_t, FS> out;
  std::size_t stride = std::size_t{1} << d.nvars();
  for (int i = 1; i <= d.nvars(); ++i)
    for (const auto& [m, c] : d.coeff(i).terms()) out[(i - 1) * stride + m] = c;
  return out;
}

SparseVec to_sparse_map(const std::map<std::size_t, FS>& m) {
  SparseVec s;
  for (const auto& [k, c] : m) s.push_back({k, c});
  return s;
}

std::vector<int> mono_indices(Mono m) {
  std::vector<int> out;
  for (int j = 0; j < kMaxVars; ++j)
    if (m & (Mono{1} << j)) out.push_back(j + 1);
  return out;
}

std::string mono_label(Mono m) {
  std::string s;
  for (int i : mono_indices(m)) s += "x" + std::to_string(i);
  return s;
}

std::string entry_label(std::size_t i, std::size_t j) {
  return "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

// Monomials of n variables with degree in [lo, hi], ordered by (parity key, degree, lex).
std::vector<Mono> monomials(int n, int lo, int hi) {
  std::vector<Mono> out;
  for (Mono m = 0; m < (Mono{1} << n); ++m) {
    int d = popcount(m);
    if (d >= lo && d <= hi) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mono a, Mono b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return mono_indices(a) < mono_indices(b);
  });
  return out;
}

// Builds the algebra spanned by a list of matrices closed under the supercommutator.
LieSuperalgebra algebra_from_matrices(const std::string& name, MatrixModel& mm,
                                      const std::vector<std::string>& labels) {
  mm.prepare();
  std::vector<int> par;
  for (const auto& b : mm.basis) {
    int p = -1;
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(r, c).is_zero()) {
          int q = mm.entry_parity(r, c);
          if (p >= 0 && p != q) throw NotParityHomogeneous();
          p = q;
        }
    par.push_back(p < 0 ? 0 : p);
  }
  const auto& basis = mm.basis;
  LieSuperalgebra g(name, par, [&](std::size_t i, std::size_t j) {
    auto c = mm.cover_coords(supercommutator(basis[i], basis[j], mm.m));
    if (!c) throw NotASubalgebra();
    return *c;
  });
  g.set_labels(labels);
  return g;
}

LieSuperalgebra algebra_from_derivations(const std::string& name, DerivModel& dm,
                                         const std::vector<std::string>& labels) {
  dm.prepare();
  std::vector<int> par;
  for (const auto& d : dm.basis) {
    auto p = d.parity();
    if (!p) throw NotParityHomogeneous();
    par.push_back(*p);
  }
  LieSuperalgebra g(name, par, [&](std::size_t i, std::size_t j) {
    return dm.coords(d_bracket(dm.basis[i], dm.basis[j]));
  });
  g.set_labels(labels);
  return g;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer a = q.get_num(), b = q.get_den();
  if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
  Integer ra, rb;
  mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
  mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
  return Rational(ra, rb);
}

// Square root in K of a rational, when it exists.
std::optional<FS> field_sqrt(const Rational& q) {
  if (auto s = rational_sqrt(q)) return FS(*s);
  if (auto s = rational_sqrt(-q)) return FS(*s) * FS::i();
  if (auto s = rational_sqrt(q / 2)) return FS(*s) * FS::sqrt2();
  if (auto s = rational_sqrt(-q / 2)) return FS(*s) * FS::i() * FS::sqrt2();
  return std::nullopt;
}

void register_standard(Family& f, const std::vector<Vec>& odd_cartan) {
  LieSuperalgebra& g = f.g;
  std::size_t n = g.dim();
  g.register_subspace("even", g.even_part());
  g.register_subspace("odd", g.odd_part());
  Subspace h0 = Subspace::span(n, g.cartan_basis());
  g.register_subspace("h_0bar", h0);
  g.register_subspace("h_1bar", Subspace::span(n, odd_cartan));
  g.register_subspace("h", subspace_sum(h0, g.subspace("h_1bar")));
  Subspace g0 = g.zmod() == 2 ? g.even_part() : g.graded_piece(0);
  g.register_subspace("g0", g0);
  Subspace g0ss = derived_of(g, g0);
  g.register_subspace("g0ss", g0ss);
  std::vector<Vec> ss(g.cartan_basis().begin(), g.cartan_basis().begin() + static_cast<long>(g.cartan_ss_dim()));
  Subspace hss = Subspace::span(n, ss);
  if (!(hss == subspace_intersection(h0, g0ss)))
    throw std::logic_error("Cartan basis prefix does not span h_0bar meet g0ss in " + g.name());
  g.register_subspace("h_g0ss", hss);
  if (g.zmod() != 2) {
    Subspace g2(n);
    for (int d : g.grading_degrees()) {
      g.register_subspace("g_" + std::to_string(d), g.graded_piece(d));
      if (d >= 2 && d % 2 == 0) g2 = subspace_sum(g2, g.graded_piece(d));
    }
    if (f.kind == Kind::Cartan) {
      g.register_subspace("g2", g2);
      g.register_subspace("h2", subspace_intersection(h0, g2));
    }
  } else {
    g.register_subspace("g_0", g.even_part());
    g.register_subspace("g_1", g.odd_part());
  }
  g.register_subspace("center", center(g));
}

// ---------------------------------------------------------------- matrix families

struct MatBasis {
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  void add(Matrix m, std::string l) {
    mats.push_back(std::move(m));
    labels.push_back(std::move(l));
  }
};

// sl(m|n); the first basis vector is E_mm + E_{m+1,m+1} so that a quotient by the identity
// drops it.
Family build_sl(int m, int n, bool projective) {
  std::size_t N = static_cast<std::size_t>(m + n), M = static_cast<std::size_t>(m);
  MatBasis b;
  b.add(elementary(N, M - 1, M - 1) + elementary(N, M, M), "Z");
  std::vector<Matrix> hs;
  for (std::size_t k = 0; k + 1 < M; ++k) {
    hs.push_back(elementary(N, k, k) - elementary(N, k + 1, k + 1));
    b.add(hs.back(), "h" + std::to_string(k + 1));
  }
  for (std::size_t k = M; k + 1 < N; ++k) {
    hs.push_back(elementary(N, k, k) - elementary(N, k + 1, k + 1));
    b.add(hs.back(), "h" + std::to_string(k + 1));
  }
  std::vector<int> deg(b.mats.size(), 0);
  for (int blk = 0; blk < 2; ++blk) {
    std::size_t lo = blk == 0 ? 0 : M, hi = blk == 0 ? M : N;
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j)
        if (i != j) {
          b.add(elementary(N, i, j), entry_label(i, j));
          deg.push_back(0);
        }
  }
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = M; j < N; ++j) {
      b.add(elementary(N, i, j), entry_label(i, j));
      deg.push_back(1);
    }
  for (std::size_t i = M; i < N; ++i)
    for (std::size_t j = 0; j < M; ++j) {
      b.add(elementary(N, i, j), entry_label(i, j));
      deg.push_back(-1);
    }
  Family f;
  f.kind = Kind::TypeI;
  MatrixModel mm;
  mm.m = m;
  mm.n = n;
  mm.basis = b.mats;
  std::string name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  LieSuperalgebra cover = algebra_from_matrices(name, mm, b.labels);
  cover.set_grading(deg);
  Matrix z = elementary(N, M - 1, M - 1) + elementary(N, M, M);
  std::vector<Matrix> cart = hs;
  if (!projective) cart.push_back(z);
  if (projective) {
    Subspace ident = Subspace::span(cover.dim(), {*mm.cover_coords(Matrix::identity(N))});
    Quotient q = quotient(cover, ident);
    q.algebra.set_name("psl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
    mm.quot = q;
    f.g = q.algebra;
  } else {
    f.g = cover;
  }
  std::vector<Vec> cb;
  for (const auto& h : cart) cb.push_back(mm.coords(h));
  f.g.set_cartan_basis(cb, hs.size());
  for (std::size_t i = 0; i < N; ++i) {
    Vec w;
    for (const auto& h : cart) w.push_back(h(i, i));
    (i < M ? f.eps : f.delta).push_back(w);
  }
  f.mat = mm;
  register_standard(f, {});
  return f;
}

// osp(m|2n) preserving diag(I_m, J_2n), J = (0 I; -I 0).
Family build_osp(int m, int n2) {
  int n = n2 / 2;
  std::size_t M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(m + n2);
  std::size_t nn = static_cast<std::size_t>(n);
  Matrix J(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
  for (std::size_t k = 0; k < nn; ++k) {
    J(k, nn + k) = FS(1);
    J(nn + k, k) = FS(-1);
  }
  MatBasis b;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i + 1; j < M; ++j)
      b.add(elementary(N, i, j) - elementary(N, j, i), "A" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  // sp(2n): (a s; t -a^t), s and t symmetric, in the D block.
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      b.add(elementary(N, M + i, M + j) - elementary(N, M + nn + j, M + nn + i),
            "a" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i; j < nn; ++j) {
      Matrix s = elementary(N, M + i, M + nn + j);
      if (i != j) s = s + elementary(N, M + j, M + nn + i);
      b.add(s, "s" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i; j < nn; ++j) {
      Matrix t = elementary(N, M + nn + i, M + j);
      if (i != j) t = t + elementary(N, M + nn + j, M + i);
      b.add(t, "t" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  std::size_t neven = b.mats.size();
  // Odd: C = E_pq (2n x m), B = -C^t J.
  for (std::size_t p = 0; p < static_cast<std::size_t>(n2); ++p)
    for (std::size_t q = 0; q < M; ++q) {
      Matrix x(N, N);
      x(M + p, q) = FS(1);
      for (std::size_t c = 0; c < static_cast<std::size_t>(n2); ++c)
        if (!J(p, c).is_zero()) x(q, M + c) = FS(0) - J(p, c);
      b.add(x, "C" + std::to_string(p + 1) + "," + std::to_string(q + 1));
    }
  std::string name = "osp(" + std::to_string(m) + "|" + std::to_string(n2) + ")";
  Family f;
  MatrixModel mm;
  mm.m = m;
  mm.n = n2;
  mm.basis = b.mats;
  f.g = algebra_from_matrices(name, mm, b.labels);

  std::vector<Matrix> so_h, sp_h;
  for (std::size_t k = 0; 2 * k + 1 < M; ++k)
    so_h.push_back(FS::i() * (elementary(N, 2 * k, 2 * k + 1) - elementary(N, 2 * k + 1, 2 * k)));
  for (std::size_t k = 0; k < nn; ++k)
    sp_h.push_back(elementary(N, M + k, M + k) - elementary(N, M + nn + k, M + nn + k));

  if (m == 2) {
    f.kind = Kind::TypeI;
    // Re-basis the odd part by eigenvectors of the grading element.
    Vec z = grading_element(f.g);
    Matrix adz = f.g.ad(z);
    std::vector<int> deg(neven, 0);
    std::vector<Matrix> mats(b.mats.begin(), b.mats.begin() + static_cast<long>(neven));
    std::vector<std::string> labels(b.labels.begin(), b.labels.begin() + static_cast<long>(neven));
    for (int s : {1, -1}) {
      Matrix shifted = adz - FS(s) * Matrix::identity(f.g.dim());
      Subspace eig = kernel(shifted);
      for (std::size_t k = 0; k < eig.dim(); ++k) {
        mats.push_back(mm.matrix(eig.vector(k)));
        labels.push_back((s > 0 ? "u" : "v") + std::to_string(k + 1));
        deg.push_back(s);
      }
    }
    mm.basis = mats;
    f.g = algebra_from_matrices(name, mm, labels);
    f.g.set_grading(deg);
  } else {
    f.kind = Kind::TypeII;
    f.g.set_grading(f.g.parities(), 2);
  }
  std::vector<Vec> cb;
  std::size_t ss;
  if (m == 2) {
    for (const auto& h : sp_h) cb.push_back(mm.coords(h));
    for (const auto& h : so_h) cb.push_back(mm.coords(h));
    ss = sp_h.size();
  } else {
    for (const auto& h : so_h) cb.push_back(mm.coords(h));
    for (const auto& h : sp_h) cb.push_back(mm.coords(h));
    ss = cb.size();
  }
  f.g.set_cartan_basis(cb, ss);
  std::size_t r = cb.size();
  std::size_t so_off = m == 2 ? sp_h.size() : 0, sp_off = m == 2 ? 0 : so_h.size();
  for (std::size_t k = 0; k < so_h.size(); ++k) {
    Vec w(r);
    w[so_off + k] = FS(1);
    f.eps.push_back(w);
  }
  for (std::size_t k = 0; k < sp_h.size(); ++k) {
    Vec w(r);
    w[sp_off + k] = FS(1);
    f.delta.push_back(w);
  }
  f.mat = mm;
  register_standard(f, {});
  return f;
}

// Periplectic: (A B; C -A^t), B symmetric, C antisymmetric, tr A = 0.
Family build_p(int l) {
  std::size_t L = static_cast<std::size_t>(l), N = 2 * L;
  MatBasis b;
  std::vector<Matrix> hs;
  std::vector<int> deg;
  for (std::size_t k = 0; k + 1 < L; ++k) {
    Matrix h = elementary(N, k, k) - elementary(N, k + 1, k + 1) - elementary(N, L + k, L + k) +
               elementary(N, L + k + 1, L + k + 1);
    hs.push_back(h);
    b.add(h, "h" + std::to_string(k + 1));
    deg.push_back(0);
  }
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      if (i != j) {
        b.add(elementary(N, i, j) - elementary(N, L + j, L + i), entry_label(i, j));
        deg.push_back(0);
      }
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i; j < L; ++j) {
      Matrix x = elementary(N, i, L + j);
      if (i != j) x = x + elementary(N, j, L + i);
      b.add(x, "B" + std::to_string(i + 1) + "," + std::to_string(j + 1));
      deg.push_back(1);
    }
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j) {
      b.add(elementary(N, L + i, j) - elementary(N, L + j, i),
            "C" + std::to_string(i + 1) + "," + std::to_string(j + 1));
      deg.push_back(-1);
    }
  Family f;
  f.kind = Kind::TypeI;
  MatrixModel mm;
  mm.m = l;
  mm.n = l;
  mm.basis = b.mats;
  f.g = algebra_from_matrices("p(" + std::to_string(l) + ")", mm, b.labels);
  f.g.set_grading(deg);
  std::vector<Vec> cb;
  for (const auto& h : hs) cb.push_back(mm.coords(h));
  f.g.set_cartan_basis(cb, cb.size());
  for (std::size_t i = 0; i < L; ++i) {
    Vec w;
    for (const auto& h : hs) w.push_back(h(i, i));
    f.eps.push_back(w);
  }
  f.mat = mm;
  register_standard(f, {});
  return f;
}

// q(n) = (A B; B A); psq(n) = {tr B = 0} modulo the identity.
Family build_q(int n, bool projective) {
  std::size_t L = static_cast<std::size_t>(n), N = 2 * L;
  auto ev = [&](std::size_t i, std::size_t j) { return elementary(N, i, j) + elementary(N, L + i, L + j); };
  auto od = [&](std::size_t i, std::size_t j) { return elementary(N, i, L + j) + elementary(N, L + i, j); };
  MatBasis b;
  b.add(Matrix::identity(N), "I");
  std::vector<Matrix> hs, hodd;
  for (std::size_t k = 0; k + 1 < L; ++k) {
    hs.push_back(ev(k, k) - ev(k + 1, k + 1));
    b.add(hs.back(), "h" + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      if (i != j) b.add(ev(i, j), entry_label(i, j));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      if (i != j) b.add(od(i, j), "O" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  for (std::size_t k = 0; k + 1 < L; ++k) {
    hodd.push_back(od(k, k) - od(k + 1, k + 1));
    b.add(hodd.back(), "k" + std::to_string(k + 1));
  }
  Matrix iodd(N, N);
  for (std::size_t k = 0; k < L; ++k) iodd = iodd + od(k, k);
  if (!projective) {
    hodd.push_back(iodd);
    b.add(iodd, "K");
  }
  Family f;
  MatrixModel mm;
  mm.m = n;
  mm.n = n;
  mm.basis = b.mats;
  std::string nm = std::to_string(n);
  LieSuperalgebra cover = algebra_from_matrices((projective ? "sq(" : "q(") + nm + ")", mm, b.labels);
  cover.set_grading(cover.parities(), 2);
  std::vector<Matrix> cart = hs;
  if (projective) {
    f.kind = Kind::TypeII;
    Subspace ident = Subspace::span(cover.dim(), {*mm.cover_coords(Matrix::identity(N))});
    Quotient q = quotient(cover, ident);
    q.algebra.set_name("psq(" + nm + ")");
    mm.quot = q;
    f.g = q.algebra;
  } else {
    f.kind = Kind::Other;
    cart.push_back(Matrix::identity(N));
    f.g = cover;
  }
  std::vector<Vec> cb, ob;
  for (const auto& h : cart) cb.push_back(mm.coords(h));
  for (const auto& h : hodd) ob.push_back(mm.coords(h));
  f.g.set_cartan_basis(cb, hs.size());
  for (std::size_t i = 0; i < L; ++i) {
    Vec w;
    for (const auto& h : cart) w.push_back(h(i, i));
    f.eps.push_back(w);
  }
  f.mat = mm;
  register_standard(f, ob);
  return f;
}

// ---------------------------------------------------------------- Cartan type

struct WBasis {
  std::vector<SuperDerivation> ders;
  std::vector<std::string> labels;
  std::vector<int> deg;
};

WBasis w_basis(int n) {
  struct T {
    Mono m;
    int i;
  };
  std::vector<T> ts;
  for (Mono m : monomials(n, 0, n))
    for (int i = 1; i <= n; ++i) ts.push_back({m, i});
  std::stable_sort(ts.begin(), ts.end(), [](const T& a, const T& b) {
    int pa = (popcount(a.m) + 1) % 2, pb = (popcount(b.m) + 1) % 2;
    if (pa != pb) return pa < pb;
    return false;
  });
  WBasis wb;
  for (const auto& t : ts) {
    wb.ders.push_back(SuperDerivation::term(n, GElem::monomial(n, t.m), t.i));
    std::string ml = mono_label(t.m);
    wb.labels.push_back((ml.empty() ? "" : ml + ".") + "d" + std::to_string(t.i));
    wb.deg.push_back(popcount(t.m) - 1);
  }
  return wb;
}

// h_k = xi_k d_k in W coordinates.
std::vector<Vec> w_cartan(const DerivModel& dm, int n, bool with_last) {
  std::vector<Vec> out;
  auto h = [&](int k) { return SuperDerivation::term(n, GElem::var(n, k), k); };
  for (int k = 1; k < n; ++k) out.push_back(dm.coords(h(k) - h(k + 1)));
  if (with_last) out.push_back(dm.coords(h(n)));
  return out;
}

void sl_functionals(Family& f, int n, bool with_last) {
  std::size_t r = static_cast<std::size_t>(with_last ? n : n - 1);
  for (int i = 1; i <= n; ++i) {
    Vec w(r);
    for (int k = 1; k < n; ++k) w[static_cast<std::size_t>(k - 1)] = FS((i == k) - (i == k + 1));
    if (with_last) w[r - 1] = FS(i == n);
    f.eps.push_back(w);
  }
}

Family build_w(int n) {
  WBasis wb = w_basis(n);
  Family f;
  f.kind = Kind::Cartan;
  DerivModel dm;
  dm.nvars = n;
  dm.basis = wb.ders;
  f.g = algebra_from_derivations("W(" + std::to_string(n) + ")", dm, wb.labels);
  f.g.set_grading(wb.deg);
  f.g.set_cartan_basis(w_cartan(dm, n, true), static_cast<std::size_t>(n - 1));
  sl_functionals(f, n, true);
  f.der = dm;
  register_standard(f, {});
  return f;
}

// S(n), and S'(n) when `prime`.
Family build_s(int n, bool prime) {
  WBasis wb = w_basis(n);
  DerivModel wdm;
  wdm.nvars = n;
  wdm.basis = wb.ders;
  wdm.prepare();
  // Generators D_ij(f) = d_i f d_j + d_j f d_i, grouped by (parity, degree).
  std::map<std::pair<int, int>, std::vector<Vec>> blocks;
  for (Mono m : monomials(n, 1, n)) {
    GElem f = GElem::monomial(n, m);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        SuperDerivation d = SuperDerivation::term(n, g_partial(i, f), j) +
                            SuperDerivation::term(n, g_partial(j, f), i);
        if (d.is_zero()) continue;
        int deg = popcount(m) - 2;
        blocks[{popcount(m) % 2, deg}].push_back(wdm.coords(d));
      }
  }
  DerivModel dm;
  dm.nvars = n;
  std::vector<std::string> labels;
  std::vector<int> deg;
  GElem top = GElem::monomial(n, (Mono{1} << n) - 1);
  for (const auto& [key, vs] : blocks) {
    Subspace sp = Subspace::span(wdm.basis.size(), vs);
    for (std::size_t k = 0; k < sp.dim(); ++k) {
      Vec v = sp.vector(k);
      SuperDerivation d = wdm.deriv(v);
      std::size_t lead = sp.pivots()[k];
      std::size_t nz = 0;
      for (const auto& c : v) nz += !c.is_zero();
      std::string lab = wb.labels[lead] + (nz > 1 ? "+" : "");
      if (prime && key.second == -1) {
        d = d - top * d;
        lab = "(1-top)" + lab;
      }
      dm.basis.push_back(d);
      labels.push_back(lab);
      deg.push_back(key.second);
    }
  }
  // Order: even first, then by degree.
  std::vector<std::size_t> order(dm.basis.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(*dm.basis[a].parity(), deg[a]) < std::make_pair(*dm.basis[b].parity(), deg[b]);
  });
  DerivModel sorted;
  sorted.nvars = n;
  std::vector<std::string> sl;
  std::vector<int> sd;
  for (auto k : order) {
    sorted.basis.push_back(dm.basis[k]);
    sl.push_back(labels[k]);
    sd.push_back(deg[k]);
  }
  Family f;
  f.kind = Kind::Cartan;
  std::string nm = (prime ? "S'(" : "S(") + std::to_string(n) + ")";
  f.g = algebra_from_derivations(nm, sorted, sl);
  f.g.set_grading(sd, prime ? n : 0);
  f.g.set_cartan_basis(w_cartan(sorted, n, false), static_cast<std::size_t>(n - 1));
  sl_functionals(f, n, false);
  f.der = sorted;
  register_standard(f, {});
  return f;
}

Family build_h(int n, bool tilde) {
  Family f;
  f.kind = Kind::Cartan;
  DerivModel dm;
  dm.nvars = n;
  std::vector<std::string> labels;
  std::vector<int> deg;
  std::vector<Mono> ms = monomials(n, 1, tilde ? n : n - 1);
  std::stable_sort(ms.begin(), ms.end(), [](Mono a, Mono b) { return popcount(a) % 2 < popcount(b) % 2; });
  for (Mono m : ms) {
    dm.basis.push_back(d_f(GElem::monomial(n, m)));
    labels.push_back("D(" + mono_label(m) + ")");
    deg.push_back(popcount(m) - 2);
  }
  std::string nm = (tilde ? "H~(" : "H(") + std::to_string(n) + ")";
  f.g = algebra_from_derivations(nm, dm, labels);
  f.g.set_grading(deg);
  int l = n / 2;
  bool odd = n % 2 == 1;
  auto dprod = [&](const std::vector<int>& idx) { return dm.coords(d_f(GElem::product(n, idx))); };
  std::vector<Vec> cb, ob;
  for (int i = 1; i <= l; ++i) cb.push_back(vec_scale(FS::i(), dprod({i, i + l})));
  std::vector<std::vector<int>> subsets;
  for (Mono s = 1; s < (Mono{1} << l); ++s) subsets.push_back(mono_indices(s));
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  auto written = [&](const std::vector<int>& I, bool last) {
    std::vector<int> idx = I;
    for (int i : I) idx.push_back(i + l);
    if (last) idx.push_back(n);
    return idx;
  };
  int rmax = odd ? l : l - 1;
  for (const auto& I : subsets)
    if (static_cast<int>(I.size()) >= 2 && static_cast<int>(I.size()) <= rmax) cb.push_back(dprod(written(I, false)));
  if (odd) {
    ob.push_back(dprod({n}));
    for (const auto& I : subsets)
      if (static_cast<int>(I.size()) <= l - 1) ob.push_back(dprod(written(I, true)));
  }
  f.g.set_cartan_basis(cb, static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    Vec w(cb.size());
    w[static_cast<std::size_t>(i - 1)] = FS(1);
    f.eps.push_back(w);
  }
  f.der = dm;
  register_standard(f, ob);
  return f;
}

}  // namespace

// ---------------------------------------------------------------- FamilySpec

std::string tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::SL: return "SL";
    case FamilyTag::PSL: return "PSL";
    case FamilyTag::OSP: return "OSP";
    case FamilyTag::P: return "P";
    case FamilyTag::Q: return "Q";
    case FamilyTag::PSQ: return "PSQ";
    case FamilyTag::W: return "W";
    case FamilyTag::S: return "S";
    case FamilyTag::SPRIME: return "SPRIME";
    case FamilyTag::H: return "H";
    case FamilyTag::HTILDE: return "HTILDE";
  }
  return "?";
}

std::string FamilySpec::str() const {
  switch (tag) {
    case FamilyTag::SL: return "sl(" + join_params(params, "|") + ")";
    case FamilyTag::PSL: return "psl(" + std::to_string(params.at(0)) + "|" + std::to_string(params.at(0)) + ")";
    case FamilyTag::OSP: return "osp(" + join_params(params, "|") + ")";
    case FamilyTag::P: return "p(" + join_params(params, ",") + ")";
    case FamilyTag::Q: return "q(" + join_params(params, ",") + ")";
    case FamilyTag::PSQ: return "psq(" + join_params(params, ",") + ")";
    case FamilyTag::W: return "W(" + join_params(params, ",") + ")";
    case FamilyTag::S: return "S(" + join_params(params, ",") + ")";
    case FamilyTag::SPRIME: return "S'(" + join_params(params, ",") + ")";
    case FamilyTag::H: return "H(" + join_params(params, ",") + ")";
    case FamilyTag::HTILDE: return "H~(" + join_params(params, ",") + ")";
  }
  return "?";
}

FamilySpec FamilySpec::parse(const std::string& tag, const std::vector<int>& params) {
  static const std::map<std::string, FamilyTag> tags = {
      {"SL", FamilyTag::SL}, {"PSL", FamilyTag::PSL}, {"OSP", FamilyTag::OSP},       {"P", FamilyTag::P},
      {"Q", FamilyTag::Q},   {"PSQ", FamilyTag::PSQ}, {"W", FamilyTag::W},           {"S", FamilyTag::S},
      {"SPRIME", FamilyTag::SPRIME}, {"H", FamilyTag::H}, {"HTILDE", FamilyTag::HTILDE}};
  std::string up = tag;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  auto it = tags.find(up);
  if (it == tags.end()) throw ParameterOutOfRange("unknown family tag " + tag);
  FamilySpec s{it->second, params};
  s.validate();
  return s;
}

void FamilySpec::validate() const {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw ParameterOutOfRange(tag_name(tag) + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto fail = [&](const std::string& why) { throw ParameterOutOfRange(str() + ": " + why); };
  switch (tag) {
    case FamilyTag::SL:
      need(2);
      if (params[0] < 1 || params[1] < 1) fail("m, n >= 1");
      if (params[0] == params[1]) fail("m != n (use PSL)");
      break;
    case FamilyTag::PSL:
      need(1);
      if (params[0] < 2) fail("r >= 2");
      break;
    case FamilyTag::OSP:
      need(2);
      if (params[0] < 1 || params[1] < 2 || params[1] % 2) fail("m >= 1 and an even second parameter >= 2");
      break;
    case FamilyTag::P:
    case FamilyTag::PSQ:
      need(1);
      if (params[0] < 3) fail("l >= 3");
      break;
    case FamilyTag::Q:
      need(1);
      if (params[0] < 2) fail("n >= 2");
      break;
    case FamilyTag::W:
      need(1);
      if (params[0] < 2) fail("n >= 2");
      break;
    case FamilyTag::S:
      need(1);
      if (params[0] < 3) fail("n >= 3");
      break;
    case FamilyTag::SPRIME:
      need(1);
      if (params[0] < 4 || params[0] % 2) fail("n = 2l with l >= 2");
      break;
    case FamilyTag::H:
      need(1);
      if (params[0] < 5) fail("r >= 5");
      break;
    case FamilyTag::HTILDE:
      need(1);
      if (params[0] < 4) fail("n >= 4");
      break;
  }
  if (tag >= FamilyTag::W && params[0] > 8) fail("desk scale caps the variable count at 8");
}

// ---------------------------------------------------------------- models

int MatrixModel::entry_parity(std::size_t i, std::size_t j) const {
  std::size_t M = static_cast<std::size_t>(m);
  return (i < M) == (j < M) ? 0 : 1;
}

void MatrixModel::prepare() {
  flat_.clear();
  for (const auto& b : basis) flat_.push_back(to_sparse_map(flatten(b)));
  prepare_solver(flat_, size() * size(), piv_, solve_);
}

std::optional<Vec> MatrixModel::cover_coords(const Matrix& x) const {
  return solve_coords(flat_, piv_, solve_, flatten(x));
}

Vec MatrixModel::coords(const Matrix& x) const {
  auto c = cover_coords(x);
  if (!c) throw NotASubalgebra();
  return quot ? quot->project(*c) : *c;
}

Matrix MatrixModel::matrix(const Vec& v) const {
  Vec c = quot ? quot->lift(v) : v;
  Matrix out(size(), size());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) out = out + c[k] * basis[k];
  return out;
}

Matrix supercommutator(const Matrix& x, const Matrix& y, int m) {
  std::size_t N = x.rows(), M = static_cast<std::size_t>(m);
  auto part = [&](const Matrix& a, int p) {
    Matrix out(N, N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (((i < M) != (j < M)) == (p == 1)) out(i, j) = a(i, j);
    return out;
  };
  Matrix out(N, N);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix xa = part(x, a), yb = part(y, b);
      if (xa.is_zero() || yb.is_zero()) continue;
      Matrix t = xa * yb;
      Matrix u = yb * xa;
      out = (a == 1 && b == 1) ? out + t + u : out + t - u;
    }
  return out;
}

Matrix elementary(std::size_t size, std::size_t i, std::size_t j) {
  Matrix x(size, size);
  x(i, j) = FS(1);
  return x;
}

void DerivModel::prepare() {
  flat_.clear();
  for (const auto& b : basis) flat_.push_back(to_sparse_map(flatten(b)));
  prepare_solver(flat_, static_cast<std::size_t>(nvars) << nvars, piv_, solve_);
}

std::optional<Vec> DerivModel::try_coords(const SuperDerivation& d) const {
  if (d.nvars() != nvars) throw VariableCountMismatch();
  return solve_coords(flat_, piv_, solve_, flatten(d));
}

Vec DerivModel::coords(const SuperDerivation& d) const {
  auto c = try_coords(d);
  if (!c) throw NotASubalgebra();
  return *c;
}

SuperDerivation DerivModel::deriv(const Vec& v) const {
  SuperDerivation out(nvars);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out += v[k] * basis[k];
  return out;
}

// ---------------------------------------------------------------- Family

Vec Family::weight(const std::vector<long>& a, const std::vector<long>& b) const {
  std::vector<Rational> qa(a.begin(), a.end()), qb(b.begin(), b.end());
  return weight_q(qa, qb);
}

Vec Family::weight_q(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  Vec w(g.cartan_basis().size());
  if (a.size() > eps.size() || b.size() > delta.size()) throw DimensionMismatch();
  for (std::size_t k = 0; k < a.size(); ++k) vec_axpy(w, FS(a[k]), eps[k]);
  for (std::size_t k = 0; k < b.size(); ++k) vec_axpy(w, FS(b[k]), delta[k]);
  return w;
}

Family build(const FamilySpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  Family f;
  switch (spec.tag) {
    case FamilyTag::SL: f = build_sl(p[0], p[1], false); break;
    case FamilyTag::PSL: f = build_sl(p[0], p[0], true); break;
    case FamilyTag::OSP: f = build_osp(p[0], p[1]); break;
    case FamilyTag::P: f = build_p(p[0]); break;
    case FamilyTag::Q: f = build_q(p[0], false); break;
    case FamilyTag::PSQ: f = build_q(p[0], true); break;
    case FamilyTag::W: f = build_w(p[0]); break;
    case FamilyTag::S: f = build_s(p[0], false); break;
    case FamilyTag::SPRIME: f = build_s(p[0], true); break;
    case FamilyTag::H: f = build_h(p[0], false); break;
    case FamilyTag::HTILDE: f = build_h(p[0], true); break;
  }
  f.spec = spec;
  f.g.set_name(spec.str());
  return f;
}

Family build(FamilyTag tag, std::vector<int> params) { return build(FamilySpec{tag, std::move(params)}); }

Vec grading_element(const LieSuperalgebra& g) {
  Subspace even = g.even_part(), odd = g.odd_part();
  Subspace zs = subspace_intersection(centralizer(g, even), even);
  if (zs.dim() != 1)
    throw NoGradingElement("center of the even part has dimension " + std::to_string(zs.dim()));
  if (odd.dim() == 0) throw NoGradingElement("no odd part");
  Vec z = zs.vector(0);
  Matrix a = restrict_to(g.ad(z), odd);
  Matrix a2 = a * a;
  FS mu = a2(0, 0);
  if (mu.is_zero() || !mu.is_rational() || !(a2 == mu * Matrix::identity(a.rows())))
    throw NoGradingElement("ad z does not act semisimply with eigenvalues +-c on the odd part");
  auto c = field_sqrt(mu.a());
  if (!c) throw NoGradingElement("eigenvalue outside the scalar field");
  z = vec_scale(c->inv(), z);
  std::size_t first = odd.pivots()[0];
  Vec img = g.bracket(z, unit_vec(g.dim(), first));
  if (img == vec_scale(FS(-1), unit_vec(g.dim(), first))) z = vec_scale(FS(-1), z);
  // Both signs must occur.
  Matrix az = g.ad(z);
  Matrix r = restrict_to(az, odd);
  if (kernel(r - Matrix::identity(r.rows())).dim() == 0 || kernel(r + Matrix::identity(r.rows())).dim() == 0)
    throw NoGradingElement("ad z has a single eigenvalue on the odd part");
  return z;
}

std::vector<int> type_one_grading(const LieSuperalgebra& g) {
  Vec z = grading_element(g);
  std::vector<int> deg(g.dim(), 0);
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (g.parity(k) == 0) continue;
    Vec e = unit_vec(g.dim(), k);
    Vec img = g.bracket(z, e);
    if (img == e) deg[k] = 1;
    else if (img == vec_scale(FS(-1), e)) deg[k] = -1;
    else throw NoGradingElement("basis vector " + g.labels()[k] + " is not an eigenvector of ad z");
  }
  return deg;
}

Report self_normalizing_nilpotent_check(const LieSuperalgebra& g, const Subspace& h) {
  if (!is_subalgebra(g, h)) throw NotASubalgebra();
  Report rep("self-normalizing-nilpotent:" + g.name());
  Subspace c = h;
  std::vector<std::size_t> series{c.dim()};
  bool nil = false;
  for (std::size_t step = 0; step <= h.dim() + 1; ++step) {
    if (c.dim() == 0) {
      nil = true;
      break;
    }
    Subspace nx = bracket_spaces(g, h, c);
    if (nx.dim() == c.dim()) break;
    c = nx;
    series.push_back(c.dim());
  }
  rep.add("nilpotent", nil, Json{{"lower_central_series_dims", series}});
  Subspace nz = normalizer(g, h);
  rep.add("self-normalizing", nz == h, Json{{"dim_h", h.dim()}, {"dim_normalizer", nz.dim()}});
  return rep;
}

std::vector<FamilySpec> default_specs() {
  return {{FamilyTag::SL, {2, 3}}, {FamilyTag::SL, {3, 1}}, {FamilyTag::PSL, {2}},  {FamilyTag::PSL, {3}},
          {FamilyTag::OSP, {3, 2}}, {FamilyTag::OSP, {4, 2}}, {FamilyTag::OSP, {2, 4}}, {FamilyTag::P, {3}},
          {FamilyTag::PSQ, {3}},   {FamilyTag::W, {2}},     {FamilyTag::W, {3}},     {FamilyTag::W, {4}},
          {FamilyTag::S, {3}},     {FamilyTag::S, {4}},     {FamilyTag::SPRIME, {4}}, {FamilyTag::H, {5}},
          {FamilyTag::H, {6}}};
}

Mono mono_of(const std::vector<int>& idx) {
  Mono m = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxVars) throw IndexOutOfRange();
    m |= Mono{1} << (i - 1);
  }
  return m;
}

}  // namespace lsa
