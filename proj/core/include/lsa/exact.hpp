// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace lsa {

using Rational = mpq_class;
using Integer = mpz_class;
using Json = nlohmann::ordered_json;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// Element a + b*sqrt2 + c*i + d*i*sqrt2 of Q(i, sqrt2).
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT implicit
  FieldScalar(const Rational& v) : c_{v, 0, 0, 0} {}  // NOLINT implicit
  FieldScalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static FieldScalar i() { return {0, 0, 1, 0}; }
  static FieldScalar sqrt2() { return {0, 1, 0, 0}; }

  const Rational& a() const { return c_[0]; }
  const Rational& b() const { return c_[1]; }
  const Rational& c() const { return c_[2]; }
  const Rational& d() const { return c_[3]; }
  const Rational& coord(int k) const { return c_[k]; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);
  FieldScalar operator-() const;

  friend FieldScalar operator+(FieldScalar x, const FieldScalar& y) { return x += y; }
  friend FieldScalar operator-(FieldScalar x, const FieldScalar& y) { return x -= y; }
  friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
  friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) { return x * y.inv(); }
  friend bool operator==(const FieldScalar& x, const FieldScalar& y) { return x.c_ == y.c_; }
  friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }
  // Lexicographic on (a, b, c, d); used for canonical ordering of weights.
  friend bool operator<(const FieldScalar& x, const FieldScalar& y);

  FieldScalar inv() const;
  // Galois conjugates: k=1 flips sqrt2, k=2 flips i, k=3 both.
  FieldScalar conj(int k) const;
  // Multiply by an integer power; negative exponents invert.
  FieldScalar pow(long e) const;

  std::string str() const;
  Json to_json() const;
  static FieldScalar from_json(const Json& j);

 private:
  std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

inline FieldScalar field_add(const FieldScalar& x, const FieldScalar& y) { return x + y; }
inline FieldScalar field_mul(const FieldScalar& x, const FieldScalar& y) { return x * y; }
inline FieldScalar field_inv(const FieldScalar& x) { return x.inv(); }

// Deterministic generator for seeded tests and probes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long range(long lo, long hi);  // inclusive
  // Small random scalar with integer or half-integer coordinates.
  FieldScalar scalar(bool rational_only = false, long bound = 3);
  FieldScalar nonzero_scalar(bool rational_only = false, long bound = 3);

 private:
  std::mt19937_64 eng_;
};

}  // namespace lsa
