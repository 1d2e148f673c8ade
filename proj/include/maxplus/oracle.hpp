// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations. Everything here enumerates a finite
// grid and recomputes quantities from first principles (plain max/min over
// coordinates) instead of going through residuation, so it can be used to
// check the closed-form code.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxplus/halfspace.hpp"
#include "maxplus/semimodule.hpp"
#include "maxplus/solvers.hpp"

namespace maxplus::oracle {

struct GridSpec {
  std::int64_t low = -3;
  std::int64_t high = 3;
  std::int64_t step = 1;
  bool include_neg_inf = true;
  bool include_pos_inf = false;

  template <ScalarField T>
  [[nodiscard]] std::vector<Extended<T>> values() const {
    if (step <= 0 || high < low) throw std::invalid_argument("bad grid");
    std::vector<Extended<T>> v;
    if (include_neg_inf) v.push_back(Extended<T>::neg_inf());
    for (std::int64_t t = low; t <= high; t += step) v.push_back(Extended<T>(static_cast<T>(t)));
    if (include_pos_inf) v.push_back(Extended<T>::pos_inf());
    return v;
  }
};

/// Calls f on every point of values^n. Stops early if f returns false.
template <ScalarField T, class F>
void for_each_point(std::size_t n, const std::vector<Extended<T>>& values, F&& f) {
  std::vector<std::size_t> idx(n, 0);
  Vector<T> h(n, values.front());
  for (;;) {
    if (!f(static_cast<const Vector<T>&>(h))) return;
    std::size_t k = 0;
    while (k < n) {
      if (++idx[k] < values.size()) {
        h[k] = values[idx[k]];
        break;
      }
      idx[k] = 0;
      h[k] = values[0];
      ++k;
    }
    if (k == n) return;
  }
}

/// max_i (c_i + h_i) written out directly.
template <ScalarField T>
Extended<T> linear_form(const RowVector<T>& c, const Vector<T>& h) {
  Extended<T> best = Extended<T>::neg_inf();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_neg_inf() || h[i].is_neg_inf()) continue;
    Extended<T> term = (c[i].is_pos_inf() || h[i].is_pos_inf()) ? Extended<T>::pos_inf()
                                                                 : Extended<T>(c[i].value() + h[i].value());
    if (best < term) best = term;
  }
  return best;
}

template <ScalarField T>
bool in_halfspace(const HalfSpace<T>& H, const Vector<T>& h) {
  return linear_form(H.a, h) >= linear_form(H.b, h);
}

/// Hilbert distance on R_max^n from the same-support formula:
/// max_I (x - y) - min_I (x - y) when both have support I, +inf when the
/// supports differ, -inf for two bottom vectors.
template <ScalarField T>
Extended<T> support_distance(const Vector<T>& x, const Vector<T>& y) {
  bool any = false;
  T hi{}, lo{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_pos_inf() || y[i].is_pos_inf()) throw std::invalid_argument("support_distance: +inf entry");
    if (x[i].is_neg_inf() != y[i].is_neg_inf()) return Extended<T>::pos_inf();
    if (x[i].is_neg_inf()) continue;
    const T d = x[i].value() - y[i].value();
    if (!any || hi < d) hi = d;
    if (!any || d < lo) lo = d;
    any = true;
  }
  if (!any) return Extended<T>::neg_inf();
  return Extended<T>(hi - lo);
}

template <ScalarField T>
bool lex_less(const Vector<T>& x, const Vector<T>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

template <ScalarField T>
struct GridMinimum {
  Extended<T> d;
  std::vector<Vector<T>> argmins;  // lexicographically sorted
};

/// min over grid h in H of d(x, h), with every attaining grid point. Grid
/// points with +inf entries are skipped since H lives in R_max^n.
template <ScalarField T>
GridMinimum<T> grid_min_distance(const HalfSpace<T>& H, const Vector<T>& x, const GridSpec& G) {
  GridMinimum<T> out{Extended<T>::pos_inf(), {}};
  bool seen = false;
  for_each_point<T>(x.size(), G.values<T>(), [&](const Vector<T>& h) {
    if (has_pos_inf(h) || !in_halfspace(H, h)) return true;
    const Extended<T> d = support_distance(x, h);
    if (!seen || d < out.d) {
      out.d = d;
      out.argmins.clear();
      seen = true;
    }
    if (d == out.d) out.argmins.push_back(h);
    return true;
  });
  if (out.d.is_pos_inf()) out.argmins.clear();
  std::sort(out.argmins.begin(), out.argmins.end(), lex_less<T>);
  return out;
}

namespace detail {
template <ScalarField T, class Member>
Vector<T> sup_below(const Vector<T>& x, const GridSpec& G, Member&& member) {
  Vector<T> best(x.size());
  for_each_point<T>(x.size(), G.values<T>(), [&](const Vector<T>& h) {
    if (!has_pos_inf(h) && maxplus::leq(h, x) && member(h)) best = oplus(best, h);
    return true;
  });
  return best;
}
}  // namespace detail

/// Entrywise max of the grid points of H below x.
template <ScalarField T>
Vector<T> grid_projection(const HalfSpace<T>& H, const Vector<T>& x, const GridSpec& G) {
  return detail::sup_below(x, G, [&](const Vector<T>& h) { return in_halfspace(H, h); });
}

/// Entrywise max of the grid points satisfying every row of S, below x.
template <ScalarField T>
Vector<T> grid_projection(const InequalitySystem<T>& S, const Vector<T>& x, const GridSpec& G) {
  return detail::sup_below(x, G, [&](const Vector<T>& h) {
    for (std::size_t j = 0; j < S.rows(); ++j) {
      if (!in_halfspace(S.row(j), h)) return false;
    }
    return true;
  });
}

/// Every combination sup_k g_k + lambda_k with lambda_k on the grid (and
/// -inf). Distinct elements, lexicographically sorted.
template <ScalarField T>
std::vector<Vector<T>> grid_elements(const GeneratedSemimodule<T>& V, const GridSpec& G) {
  GridSpec scalars = G;
  scalars.include_neg_inf = true;
  scalars.include_pos_inf = false;
  const auto lams = scalars.values<T>();
  const auto& gens = V.generators();
  std::vector<Vector<T>> out;
  if (gens.empty()) {
    out.emplace_back(V.dimension());
    return out;
  }
  for_each_point<T>(gens.size(), lams, [&](const Vector<T>& lam) {
    Vector<T> v(V.dimension());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Extended<T>& g = gens[k][i];
        if (g.is_neg_inf() || lam[k].is_neg_inf()) continue;
        Extended<T> t = g.is_pos_inf() ? g : Extended<T>(g.value() + lam[k].value());
        if (v[i] < t) v[i] = t;
      }
    }
    out.push_back(std::move(v));
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less<T>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Entrywise max of the enumerated elements of V below x.
template <ScalarField T>
Vector<T> grid_projection(const GeneratedSemimodule<T>& V, const Vector<T>& x, const GridSpec& G) {
  Vector<T> best(x.size());
  for (const auto& v : grid_elements(V, G)) {
    if (maxplus::leq(v, x)) best = oplus(best, v);
  }
  return best;
}

template <ScalarField T>
using ResidualFn = std::function<Vector<T>(const Matrix<T>&, const Vector<T>&)>;

/// Exhaustively checks Bx <= y <=> x <= residual_fn(B, y) over the grid.
template <ScalarField T>
bool grid_galois(const Matrix<T>& B, const GridSpec& G,
                 ResidualFn<T> residual_fn = [](const Matrix<T>& M, const Vector<T>& y) {
                   return residuated_apply(M, y);
                 }) {
  const auto vals = G.values<T>();
  bool ok = true;
  for_each_point<T>(B.rows(), vals, [&](const Vector<T>& y) {
    const Vector<T> r = residual_fn(B, y);
    for_each_point<T>(B.cols(), vals, [&](const Vector<T>& x) {
      bool below = true;
      for (std::size_t i = 0; i < B.rows() && below; ++i) below = linear_form(B.row(i), x) <= y[i];
      if (below != maxplus::leq(x, r)) ok = false;
      return ok;
    });
    return ok;
  });
  return ok;
}

}  // namespace maxplus::oracle
