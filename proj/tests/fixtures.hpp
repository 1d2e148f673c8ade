// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

// Shared instances and random generators for the test suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maxplus/maxplus.hpp"

namespace fixtures {

using maxplus::ExtInt;
using Z = std::int64_t;
using Vec = maxplus::Vector<Z>;
using Row = maxplus::RowVector<Z>;
using Mat = maxplus::Matrix<Z>;
using HS = maxplus::HalfSpace<Z>;
using System = maxplus::InequalitySystem<Z>;
using Module = maxplus::GeneratedSemimodule<Z>;

inline const ExtInt NI = ExtInt::neg_inf();
inline const ExtInt PI = ExtInt::pos_inf();

/// The chain system on n variables: x_1 <= x_n - 1 and x_i <= x_{i-1} - 1
/// for i = 2..n-1, written as A x >= B x with n-1 rows.
inline System chain_system(std::size_t n) {
  Mat A(n - 1, n), B(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) B(i, i) = 0;
  A(0, n - 1) = -1;
  for (std::size_t i = 1; i + 1 < n; ++i) A(i, i - 1) = -1;
  return System(A, B);
}

/// x_1 <= max(0, x_2 - 1), x_2 <= x_1, homogenized with a third coordinate
/// pinned at 0. Row 1 carries a redundant B_13 = 0 so that every column of B
/// has a finite entry.
inline System slow_system() {
  Mat A{{NI, -1, 0}, {0, NI, NI}};
  Mat B{{0, NI, 0}, {NI, 0, NI}};
  return System(A, B);
}

inline Vec slow_start(Z k) { return Vec{k, k, 0}; }

inline ExtInt random_entry(std::mt19937_64& rng, Z lo, Z hi, double p_neg_inf) {
  std::bernoulli_distribution coin(p_neg_inf);
  if (coin(rng)) return NI;
  return std::uniform_int_distribution<Z>(lo, hi)(rng);
}

inline Vec random_vector(std::mt19937_64& rng, std::size_t n, Z lo, Z hi, double p_neg_inf) {
  Vec v(n);
  for (auto& e : v) e = random_entry(rng, lo, hi, p_neg_inf);
  return v;
}

inline Row random_row(std::mt19937_64& rng, std::size_t n, Z lo, Z hi, double p_neg_inf) {
  return maxplus::as_row(random_vector(rng, n, lo, hi, p_neg_inf));
}

/// Entries drawn from {-inf, lo..hi, +inf}; used for metric properties.
inline Vec random_extended_vector(std::mt19937_64& rng, std::size_t n, Z lo, Z hi) {
  std::uniform_int_distribution<int> kind(0, 9);
  Vec v(n);
  for (auto& e : v) {
    const int k = kind(rng);
    if (k == 0) e = NI;
    else if (k == 1) e = PI;
    else e = std::uniform_int_distribution<Z>(lo, hi)(rng);
  }
  return v;
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t p, std::size_t n, Z lo, Z hi, double p_neg_inf) {
  Mat M(p, n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = random_entry(rng, lo, hi, p_neg_inf);
  }
  return M;
}

/// A system with a known finite solution v: entries of B that would break
/// A v >= B v are lowered, or set to -inf if lowering leaves the range.
/// Every column of B keeps a finite entry. Returns the system and v.
struct Planted {
  System S;
  Vec v;
};

inline Planted planted_instance(std::mt19937_64& rng, std::size_t p, std::size_t n, Z lo, Z hi) {
  for (;;) {
    Vec v = random_vector(rng, n, lo, hi, 0.0);
    Mat A = random_matrix(rng, p, n, lo, hi, 0.3);
    Mat B = random_matrix(rng, p, n, lo, hi, 0.3);
    for (std::size_t i = 0; i < p; ++i) {
      const ExtInt av = maxplus::row_apply(A.row(i), v);
      for (std::size_t j = 0; j < n; ++j) {
        if (B(i, j).is_neg_inf()) continue;
        const ExtInt bv = maxplus::lower_add(B(i, j), v[j]);
        if (bv <= av) continue;
        if (av.is_neg_inf()) {
          B(i, j) = NI;
          continue;
        }
        const Z lowered = av.value() - v[j].value();
        B(i, j) = lowered < lo ? NI : ExtInt(lowered);
      }
    }
    if (maxplus::inadmissible_column(B)) continue;
    System S(A, B);
    if (!maxplus::satisfies(S, v)) continue;
    return {S, v};
  }
}

}  // namespace fixtures
