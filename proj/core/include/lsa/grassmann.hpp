// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lsa/exact.hpp"

namespace lsa {

// Bit j set <=> xi_{j+1} occurs.
using Mono = std::uint32_t;

constexpr int kMaxVars = 16;

struct VariableCountMismatch : std::invalid_argument {
  VariableCountMismatch() : std::invalid_argument("variable count mismatch") {}
};
struct IndexOutOfRange : std::out_of_range {
  IndexOutOfRange() : std::out_of_range("variable index out of range") {}
};
struct InhomogeneousParity : std::invalid_argument {
  InhomogeneousParity() : std::invalid_argument("element is not parity-homogeneous") {}
};
struct NonInvertibleLinearPart : std::invalid_argument {
  NonInvertibleLinearPart() : std::invalid_argument("linear part is not invertible") {}
};

int popcount(Mono m);
// Sign of xi_{m1} * xi_{m2} relative to the sorted monomial; 0 when they overlap.
int mono_mul_sign(Mono m1, Mono m2);

class GElem {
 public:
  using Terms = std::map<Mono, FieldScalar>;

  GElem() = default;
  explicit GElem(int n);
  static GElem constant(int n, const FieldScalar& c);
  static GElem var(int n, int i);  // xi_i, 1-based
  static GElem monomial(int n, Mono m, const FieldScalar& c = FieldScalar(1));
  // Product xi_{i1} ... xi_{ik} in the given order, 1-based indices.
  static GElem product(int n, const std::vector<int>& idx);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  FieldScalar coeff(Mono m) const;
  void add_term(Mono m, const FieldScalar& c);

  // Parity if homogeneous, otherwise nullopt; zero reports 0.
  std::optional<int> parity() const;
  // Degree if degree-homogeneous; nullopt for zero or mixed.
  std::optional<int> degree() const;
  int min_degree() const;  // -1 for zero
  GElem degree_part(int d) const;
  FieldScalar constant_term() const { return coeff(0); }

  GElem& operator+=(const GElem& o);
  GElem& operator-=(const GElem& o);
  friend GElem operator+(GElem a, const GElem& b) { return a += b; }
  friend GElem operator-(GElem a, const GElem& b) { return a -= b; }
  friend GElem operator*(const GElem& a, const GElem& b);
  friend GElem operator*(const FieldScalar& s, const GElem& a);
  GElem operator-() const;
  friend bool operator==(const GElem& a, const GElem& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  Json to_json() const;

 private:
  int n_ = 0;
  Terms t_;
};

GElem g_mul(const GElem& f, const GElem& g);
GElem g_partial(int i, const GElem& f);  // 1-based i

// Sum_i P_i d/dxi_i.
class SuperDerivation {
 public:
  SuperDerivation() = default;
  explicit SuperDerivation(int n);
  SuperDerivation(int n, std::vector<GElem> coeffs);
  static SuperDerivation partial(int n, int i);  // d/dxi_i
  static SuperDerivation term(int n, const GElem& p, int i);  // p d/dxi_i

  int nvars() const { return n_; }
  const GElem& coeff(int i) const { return p_.at(static_cast<std::size_t>(i - 1)); }
  GElem& coeff(int i) { return p_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<GElem>& coeffs() const { return p_; }
  bool is_zero() const;

  std::optional<int> parity() const;
  // W-degree: deg P_i - 1, when homogeneous.
  std::optional<int> degree() const;
  SuperDerivation degree_part(int j) const;
  int min_degree() const;  // lowest W-degree present, n for zero

  SuperDerivation& operator+=(const SuperDerivation& o);
  SuperDerivation& operator-=(const SuperDerivation& o);
  friend SuperDerivation operator+(SuperDerivation a, const SuperDerivation& b) { return a += b; }
  friend SuperDerivation operator-(SuperDerivation a, const SuperDerivation& b) { return a -= b; }
  friend SuperDerivation operator*(const FieldScalar& s, const SuperDerivation& d);
  // Left multiplication by a Grassmann element: (g D)(f) = g D(f).
  friend SuperDerivation operator*(const GElem& g, const SuperDerivation& d);
  friend bool operator==(const SuperDerivation& a, const SuperDerivation& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }

  Json to_json() const;

 private:
  int n_ = 0;
  std::vector<GElem> p_;
};

GElem d_apply(const SuperDerivation& d, const GElem& f);
SuperDerivation d_bracket(const SuperDerivation& a, const SuperDerivation& b);
SuperDerivation d_f(const GElem& f);
GElem poisson(const GElem& f, const GElem& g);

class GrassmannAutomorphism {
 public:
  GrassmannAutomorphism() = default;
  // images[i-1] = Phi(xi_i); each must be odd with invertible linear part.
  explicit GrassmannAutomorphism(std::vector<GElem> images);
  static GrassmannAutomorphism identity(int n);
  static GrassmannAutomorphism scaling(int n, const FieldScalar& lambda);

  int nvars() const { return n_; }
  const GElem& image(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
  GElem apply(const GElem& f) const;
  GrassmannAutomorphism compose(const GrassmannAutomorphism& inner) const;  // this o inner
  GrassmannAutomorphism inverse() const;
  friend bool operator==(const GrassmannAutomorphism& a, const GrassmannAutomorphism& b) {
    return a.img_ == b.img_;
  }

 private:
  int n_ = 0;
  std::vector<GElem> img_;
};

// Phi o D o Phi^{-1}.
SuperDerivation phi_conjugate(const GrassmannAutomorphism& phi, const SuperDerivation& d);

// xi_i -> eta_i with eta_i = (xi_i + i xi_{i+l})/sqrt2, eta_{i+l} = (xi_i - i xi_{i+l})/sqrt2,
// and eta_{2l+1} = xi_{2l+1} when n is odd.
GrassmannAutomorphism eta_change(int n);

// xi_i -> xi_i + a d/dxi_i(xi_1 ... xi_{2l}).
GrassmannAutomorphism b_a(int n, const FieldScalar& a);

}  // namespace lsa
