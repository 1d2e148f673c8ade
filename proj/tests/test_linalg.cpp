// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "maxplus/oracle.hpp"

using namespace fixtures;  // NOLINT
using maxplus::DimensionError;

TEST_CASE("construction") {
  CHECK_THROWS_AS(Vec(std::vector<ExtInt>{}), DimensionError);
  CHECK_THROWS_AS(Mat(2, 0), DimensionError);
  Mat empty(0, 3);
  CHECK(empty.rows() == 0);
  CHECK_THROWS_AS((Mat{{1, 2}, {3}}), DimensionError);
  CHECK(Vec(3).size() == 3);
  CHECK(Vec(3)[1] == NI);
}

TEST_CASE("oplus") {
  CHECK(maxplus::oplus(Vec{1, NI}, Vec{0, 3}) == Vec{1, 3});
  const Vec x{4, -2, NI};
  CHECK(maxplus::oplus(x, x) == x);
  CHECK(maxplus::oplus(Vec{NI, NI, NI}, x) == x);
  CHECK_THROWS_AS(maxplus::oplus(Vec{1}, Vec{1, 2}), DimensionError);
}

TEST_CASE("scale") {
  CHECK(maxplus::scale(Vec{2, 1, 0}, ExtInt(0)) == Vec{2, 1, 0});
  CHECK(maxplus::scale(Vec{2, 1, 0}, NI) == Vec{NI, NI, NI});
  CHECK(maxplus::scale(Vec{1, NI}, ExtInt(3)) == Vec{4, NI});
}

TEST_CASE("meet") {
  CHECK(maxplus::meet(Vec{2, 1, 0}, Vec{1, 1, 5}) == Vec{1, 1, 0});
  const Vec x{3, NI};
  CHECK(maxplus::meet(x, x) == x);
  CHECK(maxplus::meet(Vec{PI, 0}, Vec{0, PI}) == Vec{0, 0});
  CHECK_THROWS_AS(maxplus::meet(Vec{1}, Vec{1, 2}), DimensionError);
}

TEST_CASE("row_apply") {
  CHECK(maxplus::row_apply(Row{NI, 0, NI}, Vec{2, 1, 0}) == ExtInt(1));
  CHECK(maxplus::row_apply(Row{NI, NI, NI}, Vec{2, 1, 0}) == NI);
  CHECK(maxplus::row_apply(Row{0, 0, 0}, Vec{2, 1, 0}) == ExtInt(2));
  CHECK_THROWS_AS(maxplus::row_apply(Row{0}, Vec{1, 2}), DimensionError);
}

TEST_CASE("mat_apply") {
  const Mat I{{0, NI, NI}, {NI, 0, NI}, {NI, NI, 0}};
  const Vec x{5, NI, -2};
  CHECK(maxplus::mat_apply(I, x) == x);

  const System S = chain_system(6);
  CHECK(maxplus::mat_apply(S.A, Vec(6, ExtInt(0))) == Vec{-1, -1, -1, -1, -1});
  CHECK(maxplus::mat_apply(Mat(2, 3), x) == Vec{NI, NI});
  CHECK_THROWS_AS(maxplus::mat_apply(I, Vec{1, 2}), DimensionError);
}

TEST_CASE("vector residual") {
  CHECK(maxplus::residual(Vec{NI, NI}, Vec{3, NI}) == PI);
  CHECK(maxplus::residual(Vec{3, NI, 1}, Vec{3, NI, 1}) == ExtInt(0));
  CHECK(maxplus::residual(Vec{0, 1}, Vec{2, 2}) == ExtInt(1));
  CHECK(maxplus::residual(Vec{PI, NI}, Vec{PI, NI}) == PI);
}

TEST_CASE("row preimage") {
  CHECK(maxplus::row_preimage(Row{0, NI, NI}, ExtInt(1)) == Vec{1, PI, PI});
  CHECK(maxplus::row_preimage(Row{2, 3}, ExtInt(0)) == Vec{-2, -3});
  CHECK(maxplus::row_preimage(Row{2, NI}, PI) == Vec{PI, PI});
}

TEST_CASE("residuated apply") {
  const Mat I{{0, NI}, {NI, 0}};
  CHECK(maxplus::residuated_apply(I, Vec{4, NI}) == Vec{4, NI});

  const System S = chain_system(6);
  const Vec u(6, ExtInt(0));
  const Vec eta1 = maxplus::meet(maxplus::residuated_apply(S.B, maxplus::mat_apply(S.A, u)), u);
  CHECK(eta1 == Vec{-1, -1, -1, -1, -1, 0});
  // column 6 of B is empty, so B# leaves it at +inf
  CHECK(maxplus::residuated_apply(S.B, Vec(5, ExtInt(0)))[5] == PI);
}

TEST_CASE("residuated apply is the greatest subsolution (brute force)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // entries in [-3, 3] keep B#y inside the search box
    const Mat B = random_matrix(rng, 3, 3, -3, 3, 0.0);
    const Vec y = random_vector(rng, 3, -3, 3, 0.0);
    const Vec r = maxplus::residuated_apply(B, y);
    Vec best(3);
    for (Z a = -10; a <= 10; ++a) {
      for (Z b = -10; b <= 10; ++b) {
        for (Z c = -10; c <= 10; ++c) {
          const Vec x{a, b, c};
          if (maxplus::leq(maxplus::mat_apply(B, x), y)) best = maxplus::oplus(best, x);
        }
      }
    }
    INFO(maxplus::to_string(B.row(0)) << " y=" << maxplus::to_string(y));
    CHECK(r == best);
  }
}

TEST_CASE("Galois connection on random triples") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t p = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    const Mat A = random_matrix(rng, p, n, -4, 4, 0.3);
    const Vec x = random_vector(rng, n, -4, 4, 0.2);
    const Vec y = random_vector(rng, p, -4, 4, 0.2);
    CHECK(maxplus::leq(maxplus::mat_apply(A, x), y) == maxplus::leq(x, maxplus::residuated_apply(A, y)));
  }
}

TEST_CASE("residual properties") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Vec x = random_vector(rng, n, -6, 6, 0.0);
    const Vec y = random_vector(rng, n, -6, 6, 0.3);
    const ExtInt lam = std::uniform_int_distribution<Z>(-5, 5)(rng);
    CHECK(maxplus::residual(x, maxplus::scale(x, lam)) == lam);

    Vec bigger = x;
    bigger[trial % n] = maxplus::lower_add(bigger[trial % n], ExtInt(2));
    CHECK(maxplus::residual(bigger, y) <= maxplus::residual(x, y));
    CHECK(maxplus::residual(y, x) <= maxplus::residual(y, bigger));

    // residual is the largest scaling staying below
    const ExtInt r = maxplus::residual(x, y);
    if (r.is_finite()) {
      CHECK(maxplus::leq(maxplus::scale(x, r), y));
      CHECK_FALSE(maxplus::leq(maxplus::scale(x, ExtInt(r.value() + 1)), y));
    }
  }
}

TEST_CASE("linearity of mat_apply") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const Mat A = random_matrix(rng, 3, 4, -5, 5, 0.3);
    const Vec x = random_vector(rng, 4, -5, 5, 0.3);
    const Vec y = random_vector(rng, 4, -5, 5, 0.3);
    const ExtInt lam = random_entry(rng, -5, 5, 0.1);
    CHECK(maxplus::mat_apply(A, maxplus::oplus(x, y)) ==
          maxplus::oplus(maxplus::mat_apply(A, x), maxplus::mat_apply(A, y)));
    CHECK(maxplus::mat_apply(A, maxplus::scale(x, lam)) == maxplus::scale(maxplus::mat_apply(A, x), lam));
  }
}

TEST_CASE("matrix residual is columnwise") {
  const Mat A{{0, 1}, {2, NI}};
  const Mat C{{3, 0}, {4, NI}};
  const Mat R = maxplus::residual(A, C);
  for (std::size_t k = 0; k < 2; ++k) {
    const Vec col = maxplus::residuated_apply(A, C.column(k));
    CHECK(R(0, k) == col[0]);
    CHECK(R(1, k) == col[1]);
  }
  CHECK(maxplus::leq(maxplus::mat_mul(A, R).column(0), C.column(0)));
}

TEST_CASE("operation counter skips -inf entries") {
  const System S = chain_system(6);
  maxplus::OpCounter c;
  maxplus::mat_apply(S.A, Vec(6, ExtInt(0)), &c);
  CHECK(c.ops == 5);
  maxplus::residuated_apply(S.B, Vec(5, ExtInt(0)), &c);
  CHECK(c.ops == 10);
}
