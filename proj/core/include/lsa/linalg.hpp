// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsa/exact.hpp"

namespace lsa {

using Vec = std::vector<FieldScalar>;

struct AmbientMismatch : std::invalid_argument {
  AmbientMismatch() : std::invalid_argument("ambient dimension mismatch") {}
};

struct EigenvaluesOutsideCandidateSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldScalar& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const FieldScalar& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldScalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  Json to_json() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldScalar> e_;
};

bool is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const FieldScalar& s, const Vec& a);
void vec_axpy(Vec& y, const FieldScalar& s, const Vec& x);  // y += s*x
Vec unit_vec(std::size_t n, std::size_t k);
Json vec_to_json(const Vec& v);

// Reduced row echelon form together with its pivot columns.
std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m);
std::size_t rank(const Matrix& m);
// Throws DivisionByZero if singular.
Matrix inverse_matrix(const Matrix& m);
FieldScalar determinant(Matrix m);

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t k) const { return basis_.row(k); }
  std::vector<Vec> vectors() const;

  // Remainder of v after elimination against the basis.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of a member in the RREF basis (pivot entries); no membership check.
  Vec coords(const Vec& v) const;
  Vec from_coords(const Vec& c) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  Json to_json() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);  // column space

// Matrix of the restriction of A to an A-invariant subspace S, in S's basis.
// Throws NotInvariant when A does not preserve S.
Matrix restrict_to(const Matrix& a, const Subspace& s);
// Image of S under A.
Subspace map_subspace(const Matrix& a, const Subspace& s);

Subspace generalized_eigenspace(const Matrix& a, const FieldScalar& lambda);

struct WeightPiece {
  std::vector<FieldScalar> weight;
  Subspace space;
};

// Candidates {a+bi : |a|,|b| <= bound} and {a/2 : |a| <= 2 bound}, smallest first.
std::vector<FieldScalar> default_candidates(long bound = 4);

std::vector<WeightPiece> weight_decomposition(const std::vector<Matrix>& ops, std::size_t n,
                                              const std::vector<FieldScalar>& candidates);

// Lexicographic comparison of scalar tuples.
bool tuple_less(const std::vector<FieldScalar>& a, const std::vector<FieldScalar>& b);

}  // namespace lsa
