// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/families.hpp"
#include "lsa/grassmann.hpp"
#include "lsa/roots.hpp"

namespace lsa {

struct NotAdNilpotent : std::invalid_argument {
  NotAdNilpotent() : std::invalid_argument("ad(x) is not nilpotent") {}
};
struct NotInvertible : std::invalid_argument {
  NotInvertible() : std::invalid_argument("matrix is not invertible") {}
};
struct DoesNotDescend : std::invalid_argument {
  DoesNotDescend() : std::invalid_argument("conjugation does not preserve the quotiented ideal") {}
};
struct GradingMissing : std::invalid_argument {
  GradingMissing() : std::invalid_argument("algebra carries no grading") {}
};
struct LambdaNotUnit : std::invalid_argument {
  LambdaNotUnit() : std::invalid_argument("lambda must be nonzero") {}
};
struct LambdaNotRootOfUnity : std::invalid_argument {
  LambdaNotRootOfUnity() : std::invalid_argument("lambda^m != 1 for a Z/m-grading") {}
};
struct WrongFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DeterminantNotOne : std::invalid_argument {
  DeterminantNotOne() : std::invalid_argument("det X != 1") {}
};
struct RootNotInLattice : std::invalid_argument {
  RootNotInLattice() : std::invalid_argument("root has non-integral coordinates in the lattice basis") {}
};

struct RootSpaceNotOneDimInG0ss : std::invalid_argument {
  RootSpaceNotOneDimInG0ss() : std::invalid_argument("root space of g0ss is not one-dimensional") {}
};

// Linear map on algebra coordinates; column j is the image of e_j.
struct AlgebraMap {
  Matrix matrix;

  static AlgebraMap identity(std::size_t n) { return {Matrix::identity(n)}; }
  std::size_t dim() const { return matrix.rows(); }
  Vec apply(const Vec& v) const { return matrix * v; }
  AlgebraMap compose(const AlgebraMap& inner) const { return {matrix * inner.matrix}; }  // this o inner
  AlgebraMap inverse() const;
  bool is_identity() const { return matrix == Matrix::identity(dim()); }
  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.matrix == b.matrix; }
};

// Values of a character of Q_g on the HNF basis of the root lattice.
struct TorusCharacter {
  std::vector<FieldScalar> values;
};

// Invertibility, parity preservation and phi([x,y]) = [phi x, phi y] on basis pairs.
Report is_automorphism(const LieSuperalgebra& g, const AlgebraMap& phi);

// exp of a nilpotent matrix as a finite sum; throws NotAdNilpotent.
Matrix exp_nilpotent(const Matrix& n);
AlgebraMap exp_ad(const LieSuperalgebra& g, const Vec& x);

// Y -> X Y X^{-1} on a matrix family; X even and invertible.
AlgebraMap ad_conjugation(const Family& f, const Matrix& x);
// D -> Phi D Phi^{-1} on a Cartan-type family.
AlgebraMap grassmann_conjugation(const Family& f, const GrassmannAutomorphism& phi);

AlgebraMap torus_action(const LieSuperalgebra& g, const RootDatum& rd, const TorusCharacter& chi);
// HNF basis of Q_g used to index characters.
std::vector<Weight> torus_basis(const RootDatum& rd);

AlgebraMap delta_lambda(const LieSuperalgebra& g, const FieldScalar& lambda);
AlgebraMap delta_minus_one(const LieSuperalgebra& g);
AlgebraMap beta_a(const Family& f, const FieldScalar& a);  // H(2l) only

Matrix psi(const Matrix& e);                            // -J E^t J^{-1}
AlgebraMap rho(const Family& f, const Matrix& x);       // psl(2|2), det x = 1
AlgebraMap rho_unchecked(const Family& f, const Matrix& x);  // same formula, any 2x2 x
AlgebraMap supertranspose(const Family& f);             // sl(m|n), psl(n|n)

bool n_membership(const LieSuperalgebra& g, const AlgebraMap& phi);
bool fixes_pointwise(const AlgebraMap& phi, const Subspace& s);
bool aut_pi0(const Family& f, const RootPackage& rp, const AlgebraMap& phi);

// n_alpha = exp ad(e) exp ad(-f) exp ad(e) for a root alpha of g0ss, with alpha([e, f]) = 2.
AlgebraMap weyl_representative(const Family& f, const RootPackage& rp, const Weight& alpha);
// Composes phi (which must stabilize g0ss and h_g0ss) with Weyl representatives until
// sigma* fixes Pi0.
AlgebraMap align_to_pi0(const Family& f, const RootPackage& rp, const AlgebraMap& phi);

// g^2 (plus D_{xi_1...xi_2l} for H(2l)) as derivations of g: each entry is the matrix of ad.
std::vector<Matrix> n_lie_algebra(const Family& f);

Report lemma_cart_probe(const Family& f, std::size_t trials, std::uint64_t seed);
Report prop_semi_suite(const Family& f, std::uint64_t seed);
Report prop_f_membership(const Family& f, std::uint64_t seed);
// dim g^2 (resp. of H~(2l)^2) next to the tabulated parametrization dimension.
Report unipotent_dim_crosscheck(const Family& f);

}  // namespace lsa
