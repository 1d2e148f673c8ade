// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/halfspace.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus {

/// The set of all max-combinations of the generators, plus the bottom vector.
template <ScalarField T>
class GeneratedSemimodule {
 public:
  explicit GeneratedSemimodule(std::size_t n, std::vector<Vector<T>> generators = {})
      : n_(n), gens_(std::move(generators)) {
    if (n_ == 0) throw DimensionError("semimodule dimension must be at least 1");
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (gens_[k].size() != n_) {
        throw DimensionError("generator " + std::to_string(k + 1) + " has length " +
                             std::to_string(gens_[k].size()) + ", expected " + std::to_string(n_));
      }
    }
  }

  [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Vector<T>>& generators() const noexcept { return gens_; }

 private:
  std::size_t n_;
  std::vector<Vector<T>> gens_;
};

namespace detail {
template <ScalarField T>
void require_point(const GeneratedSemimodule<T>& V, const Vector<T>& u, const char* op) {
  if (u.size() != V.dimension()) {
    throw DimensionError(std::string(op) + ": point has length " + std::to_string(u.size()) +
                         ", semimodule has dimension " + std::to_string(V.dimension()));
  }
}
}  // namespace detail

/// P_V(u) = sup_g g (g\u).
template <ScalarField T>
Vector<T> project(const GeneratedSemimodule<T>& V, const Vector<T>& u) {
  detail::require_point(V, u, "project");
  Vector<T> acc(V.dimension());
  for (const auto& g : V.generators()) acc = oplus(acc, scale(g, residual(g, u)));
  return acc;
}

template <ScalarField T>
Extended<T> distance_to(const GeneratedSemimodule<T>& V, const Vector<T>& x) {
  return hilbert_distance(x, project(V, x));
}

template <ScalarField T>
bool membership(const GeneratedSemimodule<T>& V, const Vector<T>& x) {
  return project(V, x) == x;
}

/// g\x = g\y for every generator g.
template <ScalarField T>
bool is_orthogonal(const GeneratedSemimodule<T>& V, const Vector<T>& x, const Vector<T>& y) {
  detail::require_point(V, x, "is_orthogonal");
  detail::require_point(V, y, "is_orthogonal");
  for (const auto& g : V.generators()) {
    if (residual(g, x) != residual(g, y)) return false;
  }
  return true;
}

/// The half-space that contains V, excludes x, and has the same projection
/// of x and the same distance to x as V. Needs P_V(x) finite.
template <ScalarField T>
HalfSpace<T> universal_halfspace(const GeneratedSemimodule<T>& V, const Vector<T>& x) {
  const Vector<T> p = project(V, x);
  if (p == x) throw AlreadyInsideError("universal_halfspace: the point lies in the semimodule, nothing to separate");
  if (!all_finite(p)) {
    throw DomainError("universal_halfspace: the projection has infinite coordinates; reduce to the support first");
  }
  const std::size_t n = x.size();
  RowVector<T> a(n), b(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == p[j]) a[j] = negate(x[j]);
    else b[j] = negate(p[j]);
  }
  return HalfSpace<T>(std::move(a), std::move(b));
}

/// Result of restricting a best-approximation problem to Supp x.
template <ScalarField T>
struct ReducedProblem {
  Vector<T> x;
  GeneratedSemimodule<T> V;
  IndexSet I;
};

/// Restricts x and the generators supported inside Supp x to Supp x.
/// Throws InfiniteDistanceError when d(x, V) = +inf.
template <ScalarField T>
ReducedProblem<T> reduce_problem(const GeneratedSemimodule<T>& V, const Vector<T>& x) {
  detail::require_point(V, x, "reduce_problem");
  if (has_pos_inf(x)) throw DomainError("reduce_problem: point has a +inf entry");
  const IndexSet I = support(x);
  if (I.empty()) throw DomainError("reduce_problem: point is the bottom vector");
  if (support(project(V, x)) != I) {
    throw InfiniteDistanceError("reduce_problem: d(x, V) = +inf, the semimodule misses the part of x");
  }
  std::vector<Vector<T>> kept;
  for (const auto& g : V.generators()) {
    if (supports(g).usupp.subset_of(I)) kept.push_back(restrict(g, I));
  }
  return {restrict(x, I), GeneratedSemimodule<T>(I.size(), std::move(kept)), I};
}

}  // namespace maxplus
