// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maxplus/linalg.hpp"

namespace maxplus {

/// A subset of {0, ..., n-1}, kept sorted. Printing is 1-based.
class IndexSet {
 public:
  explicit IndexSet(std::size_t n) : n_(n) {}
  IndexSet(std::size_t n, std::vector<std::size_t> members);

  static IndexSet full(std::size_t n);

  [[nodiscard]] std::size_t dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] bool contains(std::size_t i) const;
  [[nodiscard]] const std::vector<std::size_t>& members() const noexcept { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  [[nodiscard]] IndexSet intersect(const IndexSet& other) const;
  [[nodiscard]] IndexSet unite(const IndexSet& other) const;
  [[nodiscard]] IndexSet complement() const;
  [[nodiscard]] bool subset_of(const IndexSet& other) const;

  /// "{1,3}" style, 1-based.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

struct Supports {
  IndexSet supp;   // finite entries
  IndexSet lsupp;  // entries < +inf
  IndexSet usupp;  // entries > -inf
};

template <ScalarField T, class Tag>
Supports supports(const BasicVector<T, Tag>& x) {
  std::vector<std::size_t> s, l, u;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_finite()) s.push_back(i);
    if (!x[i].is_pos_inf()) l.push_back(i);
    if (!x[i].is_neg_inf()) u.push_back(i);
  }
  return {IndexSet(x.size(), std::move(s)), IndexSet(x.size(), std::move(l)),
          IndexSet(x.size(), std::move(u))};
}

template <ScalarField T, class Tag>
IndexSet support(const BasicVector<T, Tag>& x) {
  return supports(x).supp;
}

/// delta(x, y) = (x\y) + (y\x) under the lower convention.
template <ScalarField T>
Extended<T> anti_distance(const Vector<T>& x, const Vector<T>& y) {
  return lower_add(residual(x, y), residual(y, x));
}

/// Hilbert's projective distance, -delta(x, y).
template <ScalarField T>
Extended<T> hilbert_distance(const Vector<T>& x, const Vector<T>& y) {
  return negate(anti_distance(x, y));
}

/// x lies in {-inf, +inf}^n.
template <ScalarField T, class Tag>
bool is_all_infinite(const BasicVector<T, Tag>& x) {
  for (const auto& e : x) {
    if (e.is_finite()) return false;
  }
  return true;
}

/// Identifies the part of x: (Supp x, positions of -inf, positions of +inf).
/// For all-infinite vectors the two sigma sets pin down x itself, so equal
/// descriptors there already mean equal vectors.
struct PartDescriptor {
  IndexSet supp;
  IndexSet sigma_neg;
  IndexSet sigma_pos;
  std::size_t n;

  friend bool operator==(const PartDescriptor&, const PartDescriptor&) = default;
};

template <ScalarField T>
PartDescriptor part_of(const Vector<T>& x) {
  std::vector<std::size_t> neg, pos;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_neg_inf()) neg.push_back(i);
    if (x[i].is_pos_inf()) pos.push_back(i);
  }
  return {support(x), IndexSet(x.size(), std::move(neg)), IndexSet(x.size(), std::move(pos)), x.size()};
}

template <ScalarField T>
bool same_part(const Vector<T>& x, const Vector<T>& y) {
  return part_of(x) == part_of(y);
}

/// x|_I in the order of I. I must be nonempty.
template <ScalarField T, class Tag>
BasicVector<T, Tag> restrict(const BasicVector<T, Tag>& x, const IndexSet& I) {
  if (I.dimension() != x.size()) throw DimensionError("restrict: index set dimension differs from vector length");
  if (I.empty()) throw DimensionError("restrict: empty index set");
  std::vector<Extended<T>> r;
  r.reserve(I.size());
  for (std::size_t i : I) r.push_back(x[i]);
  return BasicVector<T, Tag>(std::move(r));
}

/// Inverse of restrict on vectors supported in I: -inf outside I.
template <ScalarField T, class Tag>
BasicVector<T, Tag> lift(const BasicVector<T, Tag>& x, const IndexSet& I) {
  if (I.size() != x.size()) throw DimensionError("lift: index set size differs from vector length");
  BasicVector<T, Tag> r(I.dimension());
  std::size_t k = 0;
  for (std::size_t i : I) r[i] = x[k++];
  return r;
}

}  // namespace maxplus
