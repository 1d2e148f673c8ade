// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <iterator>

#include "maxplus/hilbert.hpp"

namespace maxplus {

IndexSet::IndexSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n_) {
    throw DimensionError("index " + std::to_string(members_.back() + 1) + " out of range 1.." +
                         std::to_string(n_));
  }
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return IndexSet(n, std::move(all));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  if (other.n_ != n_) throw DimensionError("index sets over different dimensions");
  std::vector<std::size_t> r;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(r));
  return IndexSet(n_, std::move(r));
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  if (other.n_ != n_) throw DimensionError("index sets over different dimensions");
  std::vector<std::size_t> r;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(r));
  return IndexSet(n_, std::move(r));
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!contains(i)) r.push_back(i);
  }
  return IndexSet(n_, std::move(r));
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k != 0) s += ",";
    s += std::to_string(members_[k] + 1);
  }
  return s + "}";
}

}  // namespace maxplus
