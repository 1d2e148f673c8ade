// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

// JSON views of results. Scalars are written as tokens ("-inf", "3", "0.5")
// and indices are 1-based.

#pragma once

#include <string>

#include "json.hpp"
#include "maxplus/halfspace.hpp"
#include "maxplus/solvers.hpp"

namespace maxplus::jsonio {

using nlohmann::json;

template <ScalarField T, class Tag>
json tokens(const BasicVector<T, Tag>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_token(e));
  return a;
}

template <ScalarField T>
Vector<T> vector_from_tokens(const json& a) {
  if (!a.is_array() || a.empty()) throw ParseError("expected a non-empty array of tokens");
  std::vector<Extended<T>> v;
  for (const auto& t : a) v.push_back(parse_extended<T>(t.get<std::string>()));
  return Vector<T>(std::move(v));
}

inline json indices(const IndexSet& s) {
  json a = json::array();
  for (std::size_t i : s) a.push_back(i + 1);
  return a;
}

template <ScalarField T>
json report(const SolveReport<T>& r, StepKind kind) {
  json j = {
      {"method", to_string(kind)},
      {"status", to_string(r.status)},
      {"solution", tokens(r.solution)},
      {"iterations", r.iterations},
      {"distance_bound", to_token(r.distance_bound_used)},
      {"guard_triggered", r.guard_triggered},
      {"scalar_ops", r.scalar_ops},
  };
  if (r.trace) {
    json t = json::array();
    for (const auto& p : r.trace->points) t.push_back(tokens(p));
    j["trace"] = std::move(t);
    if (kind == StepKind::Cyclic) j["cycle_length"] = r.trace->cycle_length;
  }
  return j;
}

template <ScalarField T>
json best_approx(const BestApproxSet<T>& s) {
  json faces = json::array();
  for (const auto& f : s.faces) {
    json fixed = json::object();
    for (const auto& [k, v] : f.fixed) fixed[std::to_string(k + 1)] = to_token(v);
    json box = json::object();
    for (const auto& [k, lh] : f.box) box[std::to_string(k + 1)] = {to_token(lh.first), to_token(lh.second)};
    faces.push_back({{"pivot", f.pivot + 1}, {"fixed", std::move(fixed)}, {"box", std::move(box)}});
  }
  json j = {{"distance", to_token(s.base_distance)}, {"faces", std::move(faces)}};
  if (s.all_at_infinite_distance) j["all_at_infinite_distance"] = true;
  return j;
}

template <ScalarField T>
json halfspace(const HalfSpace<T>& H) {
  return {{"a", tokens(H.a)}, {"b", tokens(H.b)}};
}

template <ScalarField T>
json canonical(const CanonicalHalfSpace<T>& C) {
  const ApexSectors<T> as = apex_and_sectors(C);
  json sectors = json::array();
  for (const auto& s : as.sectors) sectors.push_back(s.index + 1);
  return {{"a_prime", tokens(C.a_prime)}, {"b_prime", tokens(C.b_prime)},
          {"I", indices(C.I)},            {"J", indices(C.J)},
          {"apex", tokens(as.apex)},      {"finite_apex", as.finite_apex},
          {"sectors", std::move(sectors)}};
}

}  // namespace maxplus::jsonio
