// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include "lsa/exact.hpp"

#include <ostream>
#include <sstream>

namespace lsa {

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  for (int k = 0; k < 4; ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) { return *this = *this * o; }
FieldScalar& FieldScalar::operator/=(const FieldScalar& o) { return *this = *this * o.inv(); }

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
  if (y.is_rational()) {
    FieldScalar r;
    const Rational& s = y.c_[0];
    if (sgn(s) == 0) return r;
    for (int k = 0; k < 4; ++k)
      if (sgn(x.c_[k]) != 0) r.c_[k] = x.c_[k] * s;
    return r;
  }
  if (x.is_rational()) return y * x;
  // Basis e0=1, e1=sqrt2, e2=i, e3=i*sqrt2. Products e_p*e_q = coef * e_{t}.
  static constexpr int tgt[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int cf[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, -1, -1}, {1, 2, -1, -2}};
  FieldScalar r;
  Rational t;
  for (int p = 0; p < 4; ++p) {
    if (sgn(x.c_[p]) == 0) continue;
    for (int q = 0; q < 4; ++q) {
      if (sgn(y.c_[q]) == 0) continue;
      t = x.c_[p] * y.c_[q];
      if (cf[p][q] != 1) t *= cf[p][q];
      r.c_[tgt[p][q]] += t;
    }
  }
  return r;
}

bool operator<(const FieldScalar& x, const FieldScalar& y) {
  for (int k = 0; k < 4; ++k) {
    int c = cmp(x.c_[k], y.c_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

FieldScalar FieldScalar::conj(int k) const {
  FieldScalar r(*this);
  if (k & 1) {
    r.c_[1] = -r.c_[1];
    r.c_[3] = -r.c_[3];
  }
  if (k & 2) {
    r.c_[2] = -r.c_[2];
    r.c_[3] = -r.c_[3];
  }
  return r;
}

FieldScalar FieldScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldScalar(1 / c_[0]);
  FieldScalar p = conj(1) * conj(2) * conj(3);
  FieldScalar n = *this * p;  // the field norm, rational
  const Rational& nr = n.c_[0];
  for (auto& q : p.c_) q /= nr;
  return p;
}

FieldScalar FieldScalar::pow(long e) const {
  FieldScalar base = e < 0 ? inv() : *this;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldScalar r(1);
  while (m) {
    if (m & 1) r = r * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return r;
}

std::string FieldScalar::str() const {
  static const char* unit[4] = {"", "*sqrt2", "*i", "*i*sqrt2"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::string v = rational_to_string(c_[k]);
    if (!first && v[0] != '-') os << '+';
    if (k > 0 && v == "1") {
      os << unit[k] + 1;
    } else if (k > 0 && v == "-1") {
      os << '-' << unit[k] + 1;
    } else {
      os << v << unit[k];
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

Json FieldScalar::to_json() const {
  return Json{{"a", rational_to_string(c_[0])},
              {"b", rational_to_string(c_[1])},
              {"c", rational_to_string(c_[2])},
              {"d", rational_to_string(c_[3])}};
}

FieldScalar FieldScalar::from_json(const Json& j) {
  return {rational_from_string(j.at("a").get<std::string>()),
          rational_from_string(j.at("b").get<std::string>()),
          rational_from_string(j.at("c").get<std::string>()),
          rational_from_string(j.at("d").get<std::string>())};
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.str(); }

long Rng::range(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(eng_);
}

FieldScalar Rng::scalar(bool rational_only, long bound) {
  auto coord = [&] { return Rational(range(-2 * bound, 2 * bound), 2); };
  Rational a = coord();
  a.canonicalize();
  if (rational_only) return FieldScalar(a);
  Rational b = coord(), c = coord(), d = coord();
  b.canonicalize();
  c.canonicalize();
  d.canonicalize();
  return {a, b, c, d};
}

FieldScalar Rng::nonzero_scalar(bool rational_only, long bound) {
  for (;;) {
    FieldScalar x = scalar(rational_only, bound);
    if (!x.is_zero()) return x;
  }
}

}  // namespace lsa
