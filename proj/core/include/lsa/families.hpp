// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/grassmann.hpp"
#include "lsa/superalg.hpp"

namespace lsa {

enum class FamilyTag { SL, PSL, OSP, P, Q, PSQ, W, S, SPRIME, H, HTILDE };
enum class Kind { TypeI, TypeII, Cartan, Other };

struct ParameterOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoGradingElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilySpec {
  FamilyTag tag = FamilyTag::SL;
  std::vector<int> params;

  std::string str() const;  // e.g. "sl(2|3)", "H(6)"
  // Tag names as used by the CLI: SL, PSL, OSP, P, Q, PSQ, W, S, SPRIME, H, HTILDE.
  static FamilySpec parse(const std::string& tag, const std::vector<int>& params);
  // Throws ParameterOutOfRange.
  void validate() const;
};

std::string tag_name(FamilyTag t);

// Matrices in block form (A B; C D), A of size m, D of size n.
struct MatrixModel {
  int m = 0, n = 0;
  std::vector<Matrix> basis;          // basis of the cover algebra
  std::optional<Quotient> quot;       // set for psl and psq

  std::size_t size() const { return static_cast<std::size_t>(m + n); }
  int entry_parity(std::size_t i, std::size_t j) const;
  // Coordinates in the cover basis; nullopt if X is not in the cover.
  std::optional<Vec> cover_coords(const Matrix& x) const;
  // Algebra coordinates (projected for quotients); throws if X is not in the cover.
  Vec coords(const Matrix& x) const;
  Matrix matrix(const Vec& v) const;  // representative of algebra coordinates

  void prepare();  // precomputes the coordinate solver

 private:
  std::vector<SparseVec> flat_;   // flattened basis
  std::vector<std::size_t> piv_;  // flattened entry positions
  Matrix solve_;                  // inverse of the pivot submatrix
};

Matrix supercommutator(const Matrix& x, const Matrix& y, int m);
Matrix elementary(std::size_t size, std::size_t i, std::size_t j);  // 0-based

// Algebras realized inside W(n).
struct DerivModel {
  int nvars = 0;
  std::vector<SuperDerivation> basis;

  std::optional<Vec> try_coords(const SuperDerivation& d) const;
  Vec coords(const SuperDerivation& d) const;  // throws if outside the span
  SuperDerivation deriv(const Vec& v) const;

  void prepare();

 private:
  std::vector<SparseVec> flat_;
  std::vector<std::size_t> piv_;
  Matrix solve_;
};

struct Family {
  FamilySpec spec;
  Kind kind = Kind::Other;
  LieSuperalgebra g;
  std::optional<MatrixModel> mat;
  std::optional<DerivModel> der;
  // Values of eps_i and delta_j on the ordered Cartan basis.
  std::vector<Vec> eps, delta;

  // Weight sum_i a_i eps_i + sum_j b_j delta_j as a value tuple on the Cartan basis.
  Vec weight(const std::vector<long>& a, const std::vector<long>& b = {}) const;
  Vec weight_q(const std::vector<Rational>& a, const std::vector<Rational>& b = {}) const;
};

Family build(const FamilySpec& spec);
Family build(FamilyTag tag, std::vector<int> params);

// z spanning the center of g_0bar, scaled so that ad z acts on g_1bar with eigenvalues +-1.
// Throws NoGradingElement.
Vec grading_element(const LieSuperalgebra& g);

// Degree labels of the short grading read off from the center of g_0bar.
// The sign is fixed so that the first odd basis vector gets +1; every basis vector must be
// an eigenvector of ad z.
std::vector<int> type_one_grading(const LieSuperalgebra& g);

// Self-normalizing and nilpotent; throws NotASubalgebra.
Report self_normalizing_nilpotent_check(const LieSuperalgebra& g, const Subspace& h);

// Default desk-scale instances.
std::vector<FamilySpec> default_specs();

// Monomial helpers for Cartan types: indices are 1-based.
Mono mono_of(const std::vector<int>& idx);

}  // namespace lsa
