// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/autos.hpp"

namespace lsa {

struct NotAUnit : std::invalid_argument {
  NotAUnit() : std::invalid_argument("element is not a unit") {}
};
struct NotExactlyDivisible : std::invalid_argument {
  NotExactlyDivisible() : std::invalid_argument("Laurent division is not exact") {}
};

// Finitely supported sum c_k t^k over K; zero coefficients are never stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(const FieldScalar& c) { if (!c.is_zero()) t_[0] = c; }  // NOLINT implicit
  LaurentScalar(long c) : LaurentScalar(FieldScalar(c)) {}              // NOLINT implicit
  static LaurentScalar monomial(const FieldScalar& c, long k);
  static LaurentScalar t(long k = 1) { return monomial(FieldScalar(1), k); }

  const std::map<long, FieldScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_unit() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  FieldScalar coeff(long k) const;
  long min_exp() const { return t_.begin()->first; }
  long max_exp() const { return t_.rbegin()->first; }

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }
  LaurentScalar operator-() const;
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  LaurentScalar inv() const;  // throws NotAUnit
  LaurentScalar pow(long e) const;
  // Exact quotient; throws NotExactlyDivisible.
  static LaurentScalar divexact(const LaurentScalar& a, const LaurentScalar& b);
  // Ring map t -> c t^e.
  LaurentScalar substitute(const FieldScalar& c, long e) const;
  FieldScalar evaluate(const FieldScalar& x) const;  // x != 0

  std::string str() const;
  Json to_json() const { return str(); }

 private:
  std::map<long, FieldScalar> t_;
};

// u + v s with s^2 = r for a fixed unit r of R.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(LaurentScalar u, LaurentScalar v, LaurentScalar r) : u_(std::move(u)), v_(std::move(v)), r_(std::move(r)) {}
  static QuadExt s_power(long k, const LaurentScalar& r);  // s^k, k in Z

  const LaurentScalar& u() const { return u_; }
  const LaurentScalar& v() const { return v_; }
  const LaurentScalar& r() const { return r_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool in_base() const { return v_.is_zero(); }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  std::string str() const;

 private:
  LaurentScalar u_, v_, r_;
};

// Dense matrices over LaurentScalar or QuadExt.
template <class T>
struct GMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> e;

  GMatrix() = default;
  GMatrix(std::size_t r, std::size_t c, const T& zero = T()) : rows(r), cols(c), e(r * c, zero) {}
  T& operator()(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
  friend bool operator==(const GMatrix& a, const GMatrix& b) { return a.rows == b.rows && a.cols == b.cols && a.e == b.e; }
  friend GMatrix operator*(const GMatrix& a, const GMatrix& b) {
    GMatrix m(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }
};

using LoopMap = GMatrix<LaurentScalar>;  // R-linear map of g(R); column j = image of e_j
using LoopVec = std::vector<LaurentScalar>;
using QuadMap = GMatrix<QuadExt>;

LoopMap loop_identity(std::size_t n);
LoopMap loop_from(const Matrix& m);                       // constant coefficients
LoopMap loop_add(const LoopMap& a, const LoopMap& b);
LoopMap loop_scale(const LaurentScalar& s, const Matrix& m);
LoopVec loop_apply(const LoopMap& m, const LoopVec& v);
Matrix loop_specialize(const LoopMap& m, const FieldScalar& t);  // t -> value
LoopMap loop_substitute(const LoopMap& m, const FieldScalar& c, long e);
LaurentScalar loop_determinant(LoopMap m);  // fraction-free elimination
Json loop_to_json(const LoopMap& m);

// exp(ad(x) p(t)) for even ad-nilpotent x.
LoopMap loop_exp_ad(const LieSuperalgebra& g, const Vec& x, const LaurentScalar& p);
// Character with values in R^x on the HNF basis of Q_g.
LoopMap loop_torus(const LieSuperalgebra& g, const RootDatum& rd, const std::vector<LaurentScalar>& values);
LoopMap loop_delta(const LieSuperalgebra& g, const LaurentScalar& lambda);  // Z-graded only
// Filtration predicate of N over R.
bool loop_n_membership(const LieSuperalgebra& g, const LoopMap& phi);

Report is_R_automorphism(const LieSuperalgebra& g, const LoopMap& phi);

// Lift of the ring automorphism t -> c t^e (e = +-1) to g(R), acting on coefficients.
struct RingAutoLift {
  FieldScalar c;
  long e = 1;
  LoopVec apply(const LoopVec& v) const;
  RingAutoLift inverse() const;
};
RingAutoLift ring_auto_lift(const FieldScalar& c, long e);

Report semidirect_check(const Family& f, std::uint64_t seed);
Report theorem_main_generators(const Family& f, std::uint64_t seed);
// Factorization of the r-twisted automorphism of H(2l)(R), r = c t^k.
Report remark_factorization_check(const Family& f, const LaurentScalar& r);
// Weyl representatives induce reflections on Delta_g0ss.
Report weyl_representative_check(const Family& f);

}  // namespace lsa
