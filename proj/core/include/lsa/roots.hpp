// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/families.hpp"

namespace lsa {

using Weight = Vec;

struct HypothesisNotSatisfied : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CartanNotStabilized : std::invalid_argument {
  CartanNotStabilized() : std::invalid_argument("map does not stabilize the Cartan subalgebra") {}
};
struct NotRational : std::invalid_argument {
  NotRational() : std::invalid_argument("weight coordinate is not rational") {}
};

struct Root {
  Weight weight;
  Subspace space;
  std::size_t dim_even = 0, dim_odd = 0;
};

struct RootDatum {
  std::vector<Root> roots;  // nonzero weights, sorted
  Subspace zero_space;
  std::size_t rank = 0;     // length of weight tuples

  std::vector<Weight> weights() const;
  const Root* find(const Weight& w) const;
  std::optional<std::size_t> index(const Weight& w) const;
  Json to_json() const;
};

// Generalized weight spaces of `space` (default: all of g) under ad of the given even elements.
RootDatum root_decomposition(const LieSuperalgebra& g, const std::vector<Vec>& cartan,
                             const std::optional<Subspace>& space = std::nullopt,
                             const std::vector<FieldScalar>& candidates = default_candidates());
// Decomposition of g with respect to its ordered Cartan basis.
RootDatum root_decomposition(const LieSuperalgebra& g);
// Roots of g0ss with respect to h_g0ss (weights on the first cartan_ss_dim basis vectors).
RootDatum ss_root_decomposition(const LieSuperalgebra& g);

Weight restrict_p(const Weight& w, std::size_t ss_dim);
std::vector<Rational> rational_weight(const Weight& w);  // throws NotRational
std::string weight_str(const Weight& w);

// Lattices in Q^r, stored by their canonical Hermite normal form.
class Lattice {
 public:
  Lattice() = default;
  static Lattice span(std::size_t ambient, const std::vector<std::vector<Rational>>& gens);
  static Lattice span(std::size_t ambient, const std::vector<Weight>& gens);
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }
  bool contains(const Lattice& o) const;
  bool contains(const std::vector<Rational>& v) const;
  friend bool operator==(const Lattice& a, const Lattice& b) { return a.rows_ == b.rows_; }
  Json to_json() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

// Integer Hermite normal form (row style, zero rows removed).
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

// Positive roots by lexicographic sign of the first nonzero coordinate.
bool lex_positive(const Weight& w);
// Indecomposable positive roots of a lexicographic positive system, sorted.
std::vector<Weight> simple_system(const std::vector<Weight>& roots);

// Coroot of a root of g0ss as coordinates on the h_g0ss basis.
Vec coroot(const LieSuperalgebra& g, const RootDatum& ss, const Weight& beta);
// Cartan matrix a_ij = beta_j(h_{beta_i}).
std::vector<std::vector<long>> cartan_matrix(const LieSuperalgebra& g, const RootDatum& ss,
                                             const std::vector<Weight>& base);
// Type string such as "A2+B1", components sorted.
std::string root_system_type(const std::vector<std::vector<long>>& a);
// Equality of types modulo the small-rank coincidences A1=B1=C1, B2=C2, A3=D3, D2=A1+A1.
bool same_type(const std::string& a, const std::string& b);

// True when x is a nonnegative or nonpositive integer combination of base.
std::optional<std::vector<Rational>> base_coords(const std::vector<Weight>& base, const Weight& x);

struct RootPackage {
  RootDatum full;  // (g, h_0bar)
  RootDatum ss;    // (g0ss, h_g0ss)
  std::vector<Weight> pi0;
};
RootPackage root_package(const Family& f);

// Root-level checks.
Report roots_bracket_check(const LieSuperalgebra& g, const RootDatum& rd);
Report p_delta_check(const Family& f, const RootPackage& rp);        // weights of g under h_g0ss
Report lattice_chain_check(const Family& f, const RootPackage& rp);
Report compatible_root_check(const Family& f, const RootPackage& rp);
Report ss_type_check(const Family& f, const RootPackage& rp, const std::string& claimed);

struct T2Result {
  std::vector<Weight> basis;
  Report report;
};
// Hard-coded bases of the root lattice; throws HypothesisNotSatisfied.
T2Result lemma_t2_bases(const Family& f, const RootPackage& rp);
// Multiplicity one and generation by simple root spaces; throws HypothesisNotSatisfied.
Report lemma_t3_check(const Family& f, const RootPackage& rp);

struct SigmaStar {
  std::vector<std::size_t> perm;  // index in rp.ss.roots
  Report report;
};
// sigma is an automorphism matrix of g.
SigmaStar sigma_star(const Family& f, const RootPackage& rp, const Matrix& sigma);

// Closed-form root formulas for Cartan types as weight sets on the Cartan basis; the k = 0 term of the W formula
// (the zero weight) is dropped.
std::vector<Weight> appendix_roots(const Family& f);

// eta-coordinate Hamiltonians for H(n): D_{eta_{i1} ... eta_{ik}} in algebra coordinates.
Vec eta_hamiltonian(const Family& f, const std::vector<int>& idx);

// Eta-monomial bases B_{I,J} (and B'_{I,J} for odd n) of g^{eps_I - eps_J} on H(n), I and J
// disjoint subsets of {1..l}; graded pieces compared with both the printed and computed degrees.
Report bij_check(const Family& f, const std::vector<int>& I, const std::vector<int>& J);

}  // namespace lsa
