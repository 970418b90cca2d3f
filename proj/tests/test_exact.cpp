// Copyright 2026 The lsa Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "lsa/exact.hpp"

using lsa::FieldScalar;
using lsa::Rational;

namespace {
FieldScalar fs(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }
}  // namespace

TEST_CASE("field_add examples") {
  CHECK(fs(1, 0, 0, 0) + fs(0, 0, 0, 0) == fs(1, 0, 0, 0));
  CHECK((fs(1, 1, 0, 0) + fs(-1, -1, 0, 0)).is_zero());
  FieldScalar x(Rational(1, 2), 0, Rational(1, 2), 0), y(Rational(1, 2), 0, Rational(-1, 2), 0);
  CHECK(x + y == FieldScalar(1));
}

TEST_CASE("field_mul examples") {
  CHECK(FieldScalar::i() * FieldScalar::i() == FieldScalar(-1));
  CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt2() == FieldScalar(2));
  CHECK(fs(1, 1, 0, 0) * fs(-1, 1, 0, 0) == FieldScalar(1));
  CHECK(FieldScalar::i() * FieldScalar::sqrt2() == fs(0, 0, 0, 1));
  CHECK(fs(0, 0, 0, 1) * fs(0, 0, 0, 1) == FieldScalar(-2));
}

TEST_CASE("field_inv examples") {
  CHECK(FieldScalar(1).inv() == FieldScalar(1));
  CHECK(FieldScalar::i().inv() == -FieldScalar::i());
  CHECK(fs(1, 1, 0, 0).inv() == fs(-1, 1, 0, 0));
  CHECK_THROWS_AS(FieldScalar().inv(), lsa::DivisionByZero);
}

TEST_CASE("field axioms on seeded random triples") {
  lsa::Rng rng(12345);
  for (int t = 0; t < 1000; ++t) {
    FieldScalar x = rng.scalar(), y = rng.scalar(), z = rng.scalar();
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inv() == FieldScalar(1));
  }
}

TEST_CASE("pow and conjugates") {
  FieldScalar x = fs(1, 2, 3, 4);
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) * x.pow(2) == FieldScalar(1));
  CHECK((x * x.conj(1) * x.conj(2) * x.conj(3)).is_rational());
}

TEST_CASE("json round trip") {
  FieldScalar x(Rational(-3, 7), Rational(2), Rational(0), Rational(5, 4));
  auto j = x.to_json();
  CHECK(j["a"] == "-3/7");
  CHECK(j["c"] == "0");
  CHECK(FieldScalar::from_json(j) == x);
  CHECK(x.str() == "-3/7+2*sqrt2+5/4*i*sqrt2");
}
