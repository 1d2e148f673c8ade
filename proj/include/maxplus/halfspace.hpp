// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/hilbert.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus {

/// {h in R_max^n | ah >= bh}.
template <ScalarField T>
struct HalfSpace {
  RowVector<T> a;
  RowVector<T> b;

  HalfSpace(RowVector<T> a_, RowVector<T> b_) : a(std::move(a_)), b(std::move(b_)) {
    detail::require_same_size(a, b, "half-space coefficients");
  }
  [[nodiscard]] std::size_t dimension() const noexcept { return a.size(); }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

enum class Classification { Everything, BottomOnly, Proper };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Everything: return "everything";
    case Classification::BottomOnly: return "bottom-only";
    case Classification::Proper: return "proper";
  }
  return "?";
}

/// Same set as the source half-space, with disjoint coefficient supports.
template <ScalarField T>
struct CanonicalHalfSpace {
  RowVector<T> a_prime;
  RowVector<T> b_prime;
  IndexSet I;  // Supp a'
  IndexSet J;  // Supp b'

  [[nodiscard]] std::size_t dimension() const noexcept { return a_prime.size(); }
  [[nodiscard]] HalfSpace<T> as_halfspace() const { return HalfSpace<T>(a_prime, b_prime); }
};

template <ScalarField T>
Classification classify(const HalfSpace<T>& H) {
  bool a_dominates = true;
  bool b_strict = true;
  for (std::size_t i = 0; i < H.dimension(); ++i) {
    if (H.a[i] < H.b[i]) a_dominates = false;
    else b_strict = false;
  }
  if (a_dominates) return Classification::Everything;
  if (b_strict) return Classification::BottomOnly;
  return Classification::Proper;
}

namespace detail {

// Truncation is defined for every half-space; canonicalize only exposes it
// for proper ones.
template <ScalarField T>
CanonicalHalfSpace<T> truncate(const HalfSpace<T>& H) {
  const std::size_t n = H.dimension();
  RowVector<T> ap(n), bp(n);
  std::vector<std::size_t> I, J;
  for (std::size_t i = 0; i < n; ++i) {
    if (H.a[i] >= H.b[i]) {
      ap[i] = H.a[i];
      if (ap[i].is_finite()) I.push_back(i);
    } else {
      bp[i] = H.b[i];
      if (bp[i].is_finite()) J.push_back(i);
    }
  }
  return {std::move(ap), std::move(bp), IndexSet(n, std::move(I)), IndexSet(n, std::move(J))};
}

template <ScalarField T>
void require_point(const HalfSpace<T>& H, const Vector<T>& x, const char* op) {
  if (x.size() != H.dimension()) {
    throw DimensionError(std::string(op) + ": point has length " + std::to_string(x.size()) +
                         ", half-space has dimension " + std::to_string(H.dimension()));
  }
  if (has_pos_inf(x)) throw DomainError(std::string(op) + ": point has a +inf entry");
}

template <ScalarField T>
void require_finite_coefficients(const HalfSpace<T>& H) {
  if (has_pos_inf(H.a) || has_pos_inf(H.b)) throw DomainError("half-space coefficients must be < +inf");
}

}  // namespace detail

template <ScalarField T>
CanonicalHalfSpace<T> canonicalize(const HalfSpace<T>& H) {
  const Classification c = classify(H);
  if (c != Classification::Proper) {
    throw DegenerateHalfSpaceError(std::string("cannot canonicalize a degenerate half-space (") +
                                   to_string(c) + ")");
  }
  return detail::truncate(H);
}

template <ScalarField T>
bool contains(const HalfSpace<T>& H, const Vector<T>& h) {
  if (h.size() != H.dimension()) throw DimensionError("contains: dimension mismatch");
  return row_apply(H.a, h) >= row_apply(H.b, h);
}

template <ScalarField T>
bool contains(const CanonicalHalfSpace<T>& C, const Vector<T>& h) {
  return row_apply(C.a_prime, h) >= row_apply(C.b_prime, h);
}

struct Sector {
  std::size_t index;  // i in Supp a'
};

template <ScalarField T>
struct ApexSectors {
  Vector<T> apex;
  std::vector<Sector> sectors;
  bool finite_apex;
};

template <ScalarField T>
ApexSectors<T> apex_and_sectors(const CanonicalHalfSpace<T>& C) {
  Vector<T> apex = as_column(oplus(C.a_prime, C.b_prime));
  for (auto& e : apex) e = negate(e);
  std::vector<Sector> sectors;
  for (std::size_t i : C.I) sectors.push_back({i});
  const bool finite = all_finite(apex);
  return {std::move(apex), std::move(sectors), finite};
}

/// h_i - apex_i >= max_{j != i} (h_j - apex_j). Coordinates where the apex
/// is +inf impose nothing.
template <ScalarField T>
bool sector_contains(const Vector<T>& apex, std::size_t i, const Vector<T>& h) {
  detail::require_same_size(apex, h, "sector_contains");
  const Extended<T> lhs = upper_add(h[i], negate(apex[i]));
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (j == i) continue;
    if (lhs < lower_add(h[j], negate(apex[j]))) return false;
  }
  return true;
}

/// P_H(x): the greatest element of H below x.
template <ScalarField T>
Vector<T> project(const HalfSpace<T>& H, const Vector<T>& x, OpCounter* counter = nullptr) {
  detail::require_point(H, x, "project");
  if (contains(H, x)) return x;
  const CanonicalHalfSpace<T> C = detail::truncate(H);
  const Extended<T> ax = row_apply(C.a_prime, x, counter);
  Vector<T> p = x;
  // b'_j \ ax is +inf off J, so only J can move.
  for (std::size_t j : C.J) {
    detail::tick(counter);
    p[j] = min(p[j], scalar_residual(C.b_prime[j], ax));
  }
  return p;
}

/// Row-level step used by the solvers: projects in place with a truncation
/// computed once per row.
template <ScalarField T>
bool project_in_place(const CanonicalHalfSpace<T>& C, Vector<T>& x, OpCounter* counter = nullptr) {
  const Extended<T> ax = row_apply(C.a_prime, x, counter);
  bool changed = false;
  for (std::size_t j : C.J) {
    detail::tick(counter);
    const Extended<T> cap = scalar_residual(C.b_prime[j], ax);
    if (cap < x[j]) {
      x[j] = cap;
      changed = true;
    }
  }
  return changed;
}

/// d(x, H).
template <ScalarField T>
Extended<T> distance(const HalfSpace<T>& H, const Vector<T>& x) {
  detail::require_point(H, x, "distance");
  if (contains(H, x)) return all_neg_inf(x) ? Extended<T>::neg_inf() : Extended<T>(T{0});
  const CanonicalHalfSpace<T> C = detail::truncate(H);
  return scalar_residual(row_apply(C.a_prime, x), row_apply(H.b, x));
}

/// One piece of the best-approximation set, normalized so that the free
/// parameter lambda = a'h is 0. Members are the translates by finite lambda.
template <ScalarField T>
struct FaceBox {
  std::size_t pivot;
  std::map<std::size_t, Extended<T>> fixed;
  std::map<std::size_t, std::pair<Extended<T>, Extended<T>>> box;

  [[nodiscard]] bool contains(const Vector<T>& h, const Extended<T>& pivot_coefficient) const {
    if (has_pos_inf(h)) return false;
    const Extended<T> lam = lower_add(pivot_coefficient, h[pivot]);
    if (!lam.is_finite()) return false;
    for (const auto& [k, v] : fixed) {
      if (h[k] != lower_add(v, lam)) return false;
    }
    for (const auto& [k, lh] : box) {
      if (h[k] < lower_add(lh.first, lam) || lower_add(lh.second, lam) < h[k]) return false;
    }
    return true;
  }
};

template <ScalarField T>
struct BestApproxSet {
  Extended<T> base_distance;
  std::vector<FaceBox<T>> faces;
  bool all_at_infinite_distance = false;
  RowVector<T> a_prime;  // pivot coefficients for membership tests

  [[nodiscard]] bool contains(const Vector<T>& h) const {
    for (const auto& f : faces) {
      if (f.contains(h, a_prime[f.pivot])) return true;
    }
    return false;
  }
};

template <ScalarField T, class Tag>
std::vector<std::size_t> argmax(const BasicVector<T, RowTag>& a, const BasicVector<T, Tag>& x) {
  detail::require_same_size(a, x, "argmax");
  Extended<T> best = Extended<T>::neg_inf();
  for (std::size_t i = 0; i < a.size(); ++i) best = max(best, lower_add(a[i], x[i]));
  std::vector<std::size_t> r;
  if (best.is_neg_inf()) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lower_add(a[i], x[i]) == best) r.push_back(i);
  }
  return r;
}

namespace detail {

template <ScalarField T>
void require_outside(const HalfSpace<T>& H, const Vector<T>& x, const char* op) {
  require_point(H, x, op);
  require_finite_coefficients(H);
  if (contains(H, x)) throw AlreadyInsideError(std::string(op) + ": the point lies in the half-space");
}

}  // namespace detail

/// All best approximations of x in H, as a union of faces.
template <ScalarField T>
BestApproxSet<T> best_approx_set(const HalfSpace<T>& H, const Vector<T>& x) {
  detail::require_outside(H, x, "best_approx_set");
  const CanonicalHalfSpace<T> C = detail::truncate(H);
  BestApproxSet<T> out{distance(H, x), {}, false, C.a_prime};
  if (out.base_distance.is_pos_inf()) {
    out.all_at_infinite_distance = true;
    return out;
  }
  const Extended<T> ax = row_apply(C.a_prime, x);
  const Extended<T> bx = row_apply(H.b, x);
  const Vector<T> p = project(H, x);
  const std::vector<std::size_t> b_arg = argmax(C.b_prime, x);

  for (std::size_t i : argmax(C.a_prime, x)) {
    FaceBox<T> f{i, {}, {}};
    f.fixed[i] = negate(C.a_prime[i]);
    for (std::size_t j : b_arg) f.fixed[j] = negate(C.b_prime[j]);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (f.fixed.count(k) != 0) continue;
      f.box[k] = {lower_add(x[k], negate(bx)), lower_add(p[k], negate(ax))};
    }
    out.faces.push_back(std::move(f));
  }
  return out;
}

/// Direct test that h attains d(x, H), without building the faces.
template <ScalarField T>
bool is_best_approx(const HalfSpace<T>& H, const Vector<T>& x, const Vector<T>& h) {
  detail::require_outside(H, x, "is_best_approx");
  if (h.size() != x.size()) throw DimensionError("is_best_approx: dimension mismatch");
  const CanonicalHalfSpace<T> C = detail::truncate(H);
  const Extended<T> ax = row_apply(C.a_prime, x);
  const Extended<T> bx = row_apply(H.b, x);
  if (!ax.is_finite() || !bx.is_finite()) {
    throw InfiniteDistanceError("is_best_approx: the point is at infinite distance from the half-space");
  }
  if (has_pos_inf(h)) return false;
  const Extended<T> ah = row_apply(C.a_prime, h);
  const Extended<T> bh = row_apply(C.b_prime, h);
  if (bh.is_neg_inf() || ah < bh) return false;
  const Extended<T> lo_shift = lower_add(ah, negate(bx));
  const Extended<T> hi_shift = lower_add(bh, negate(ax));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (h[k] < lower_add(x[k], lo_shift) || lower_add(x[k], hi_shift) < h[k]) return false;
  }
  return true;
}

}  // namespace maxplus
