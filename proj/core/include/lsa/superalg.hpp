// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/linalg.hpp"
#include "lsa/report.hpp"

namespace lsa {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};
struct NotAnIdeal : std::invalid_argument {
  NotAnIdeal() : std::invalid_argument("subspace is not an ideal") {}
};
struct NotParityHomogeneous : std::invalid_argument {
  NotParityHomogeneous() : std::invalid_argument("subspace is not parity-homogeneous") {}
};
struct NotASubalgebra : std::invalid_argument {
  NotASubalgebra() : std::invalid_argument("subspace is not closed under the bracket") {}
};
struct UnknownSubspace : std::out_of_range {
  explicit UnknownSubspace(const std::string& n) : std::out_of_range("no registered subspace " + n) {}
};

struct ScEntry {
  std::size_t k;
  FieldScalar c;
};
using SparseVec = std::vector<ScEntry>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t n);

class LieSuperalgebra {
 public:
  // Computes [e_i, e_j] for i <= j; the rest follows by super-antisymmetry.
  using BracketFn = std::function<Vec(std::size_t, std::size_t)>;

  LieSuperalgebra() = default;
  LieSuperalgebra(std::string name, std::vector<int> parity, const BracketFn& fn);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }

  // Standard grading labels. zmod = 0 means a Z-grading, otherwise Z/zmod.
  bool has_grading() const { return zdeg_.has_value(); }
  const std::vector<int>& zdeg() const;
  int zmod() const { return zmod_; }
  void set_grading(std::vector<int> deg, int zmod = 0);
  std::vector<int> grading_degrees() const;  // sorted distinct labels

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return sc_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;  // column j = [x, e_j]
  Matrix ad_basis(std::size_t i) const;
  // Matrix of x -> [x, y]; column j = [e_j, y].
  Matrix right_mult(const Vec& y) const;

  // Parity of a homogeneous element, nullopt if mixed; zero counts as even.
  std::optional<int> element_parity(const Vec& x) const;
  bool parity_homogeneous(const Subspace& s) const;

  // Named subspaces.
  void register_subspace(const std::string& name, Subspace s);
  bool has_subspace(const std::string& name) const { return registry_.count(name) != 0; }
  const Subspace& subspace(const std::string& name) const;
  const std::map<std::string, Subspace>& registry() const { return registry_; }

  // Ordered basis of h_0bar; the first cartan_ss_dim vectors span h_g0ss.
  const std::vector<Vec>& cartan_basis() const { return cartan_basis_; }
  std::size_t cartan_ss_dim() const { return cartan_ss_dim_; }
  void set_cartan_basis(std::vector<Vec> basis, std::size_t ss_dim);

  Subspace even_part() const;
  Subspace odd_part() const;
  Subspace graded_piece(int degree) const;

  // Copy with c_{ij}^k += delta (and the antisymmetric partner adjusted to match).
  LieSuperalgebra perturbed(std::size_t i, std::size_t j, std::size_t k, const FieldScalar& delta) const;

  Json to_json() const;

 private:
  std::string name_;
  std::vector<int> parity_;
  std::vector<SparseVec> sc_;
  std::optional<std::vector<int>> zdeg_;
  int zmod_ = 0;
  std::vector<std::string> labels_;
  std::map<std::string, Subspace> registry_;
  std::vector<Vec> cartan_basis_;
  std::size_t cartan_ss_dim_ = 0;
};

// Incrementally maintained RREF span; cheap insertion for closure computations.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}
  // Returns the reduced new vector if it enlarged the span.
  std::optional<Vec> insert(const Vec& v);
  std::size_t dim() const { return rows_.size(); }
  Subspace subspace() const;

 private:
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

Report jacobi_check(const LieSuperalgebra& g);
Report antisymmetry_check(const LieSuperalgebra& g);
Report parity_grading_check(const LieSuperalgebra& g);
// The three checks above, merged.
Report structure_check(const LieSuperalgebra& g);

Subspace derived(const LieSuperalgebra& g);
Subspace derived_of(const LieSuperalgebra& g, const Subspace& s);  // [s, s]
Subspace center(const LieSuperalgebra& g);
Subspace centralizer(const LieSuperalgebra& g, const Subspace& s);
Subspace normalizer(const LieSuperalgebra& g, const Subspace& s);
Subspace annihilator(const Subspace& s);  // rows w with w.v = 0 on s
Subspace ideal_generated(const LieSuperalgebra& g, const Subspace& s);
Subspace subalgebra_generated(const LieSuperalgebra& g, const Subspace& s);
bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s);
bool is_ideal(const LieSuperalgebra& g, const Subspace& s);
// [a, b] as a subspace.
Subspace bracket_spaces(const LieSuperalgebra& g, const Subspace& a, const Subspace& b);

struct Quotient {
  LieSuperalgebra algebra;
  std::vector<std::size_t> complement;  // cover basis indices kept
  Subspace ideal;
  Vec project(const Vec& v) const;      // cover coords -> quotient coords
  Vec lift(const Vec& v) const;         // quotient coords -> complement representative
  Subspace project(const Subspace& s) const;
};

Quotient quotient(const LieSuperalgebra& g, const Subspace& ideal);

Report simplicity_probe(const LieSuperalgebra& g, std::size_t trials, std::uint64_t seed);

// Restriction of an algebra to a subalgebra, using the subspace's RREF basis.
LieSuperalgebra subalgebra(const LieSuperalgebra& g, const Subspace& s, const std::string& name);

}  // namespace lsa
