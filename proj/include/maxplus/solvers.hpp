// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "maxplus/halfspace.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus {

/// Ax >= Bx, one half-space per row.
template <ScalarField T>
struct InequalitySystem {
  Matrix<T> A;
  Matrix<T> B;

  InequalitySystem(Matrix<T> A_, Matrix<T> B_) : A(std::move(A_)), B(std::move(B_)) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
      throw DimensionError("A is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) + " but B is " +
                           std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
    }
  }

  [[nodiscard]] std::size_t rows() const noexcept { return A.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return A.cols(); }
  [[nodiscard]] HalfSpace<T> row(std::size_t j) const { return HalfSpace<T>(A.row(j), B.row(j)); }
};

template <ScalarField T>
bool satisfies(const InequalitySystem<T>& S, const Vector<T>& x) {
  if (S.rows() == 0) return true;
  return leq(mat_apply(S.B, x), mat_apply(S.A, x));
}

/// Index of the first column of B without a finite entry, if any.
template <ScalarField T>
std::optional<std::size_t> inadmissible_column(const Matrix<T>& B) {
  for (std::size_t j = 0; j < B.cols(); ++j) {
    bool ok = false;
    for (std::size_t i = 0; i < B.rows() && !ok; ++i) ok = B(i, j).is_finite();
    if (!ok) return j;
  }
  return std::nullopt;
}

enum class SolveStatus { Solved, BottomReached, IterationCapHit };
enum class StepKind { Cyclic, Power };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::BottomReached: return "bottom";
    case SolveStatus::IterationCapHit: return "cap";
  }
  return "?";
}

inline const char* to_string(StepKind k) { return k == StepKind::Cyclic ? "cyclic" : "power"; }

/// Cyclic traces hold one point per row step, so point p*k is the iterate
/// after k sweeps. Power traces hold one point per iteration.
template <ScalarField T>
struct IterationTrace {
  std::vector<Vector<T>> points;
  StepKind step_kind = StepKind::Cyclic;
  std::size_t cycle_length = 1;
};

struct SolveOptions {
  std::size_t max_sweeps = 100000;
  double tol = 1e-9;  // float payloads only
  bool record_trace = false;
  bool divergence_guard = true;
  std::optional<double> divergence_cap;  // overrides the D_cap estimate
  // Reject a B with an all -inf column in power_solve. Such a column only
  // makes (B#y)_j = +inf, which the meet with eta absorbs.
  bool require_admissible = false;
};

template <ScalarField T>
struct SolveReport {
  SolveStatus status = SolveStatus::IterationCapHit;
  Vector<T> solution;
  std::size_t iterations = 0;
  Extended<T> distance_bound_used;  // n * d(u, solution)
  bool guard_triggered = false;
  std::uint64_t scalar_ops = 0;
  std::optional<IterationTrace<T>> trace;
};

namespace detail {

template <ScalarField T>
T from_double(double v) {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(v);
  } else if constexpr (std::is_integral_v<T>) {
    return static_cast<T>(std::llround(v));
  } else {
    return T(static_cast<long long>(std::llround(v)));
  }
}

template <ScalarField T>
T times(T v, std::size_t n) {
  T acc{};
  for (std::size_t i = 0; i < n; ++i) acc = acc + v;
  return acc;
}

// Spread of the finite entries of A and B, 0 if there are none.
template <ScalarField T>
T coefficient_range(const InequalitySystem<T>& S) {
  std::optional<T> lo, hi;
  auto visit = [&](const Matrix<T>& M) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!M(i, j).is_finite()) continue;
        const T& v = M(i, j).value();
        if (!lo || v < *lo) lo = v;
        if (!hi || *hi < v) hi = v;
      }
    }
  };
  visit(S.A);
  visit(S.B);
  return lo ? *hi - *lo : T{};
}

// Below this value a coordinate of any iterate cannot belong to a finite
// coordinate of the limit, so it may be sent to -inf. Finite coordinates of
// the limit are at least min u - (n-1) * range; the cutoff leaves slack.
template <ScalarField T>
std::optional<T> divergence_cutoff(const InequalitySystem<T>& S, const Vector<T>& u, const SolveOptions& opt) {
  if (!opt.divergence_guard) return std::nullopt;
  std::optional<T> umin, umax;
  for (const auto& e : u) {
    if (!e.is_finite()) continue;
    if (!umin || e.value() < *umin) umin = e.value();
    if (!umax || *umax < e.value()) umax = e.value();
  }
  if (!umin) return std::nullopt;
  const std::size_t n = u.size();
  T cap = opt.divergence_cap ? from_double<T>(*opt.divergence_cap)
                             : (*umax - *umin) + times(coefficient_range(S), n - 1);
  return *umin - times(cap, n);
}

template <ScalarField T>
bool apply_guard(Vector<T>& x, const std::optional<T>& cutoff) {
  if (!cutoff) return false;
  bool hit = false;
  for (auto& e : x) {
    if (e.is_finite() && e.value() < *cutoff) {
      e = Extended<T>::neg_inf();
      hit = true;
    }
  }
  return hit;
}

// Largest entrywise drop from `before` to `after` (after <= before), as a
// double; infinite if some entry left the finite range.
template <ScalarField T>
double max_drop(const Vector<T>& before, const Vector<T>& after) {
  double m = 0.0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] == after[i]) continue;
    if (!before[i].is_finite() || !after[i].is_finite()) return HUGE_VAL;
    m = std::max(m, static_cast<double>(before[i].value() - after[i].value()));
  }
  return m;
}

template <ScalarField T>
void validate_start(const InequalitySystem<T>& S, const Vector<T>& u) {
  if (u.size() != S.cols()) {
    throw DimensionError("initial point has length " + std::to_string(u.size()) + ", system has " +
                         std::to_string(S.cols()) + " columns");
  }
  if (has_pos_inf(u)) throw DomainError("initial point has a +inf entry");
}

template <ScalarField T>
void finish(SolveReport<T>& r, const Vector<T>& u) {
  const Extended<T> d = hilbert_distance(u, r.solution);
  r.distance_bound_used = d.is_finite() ? Extended<T>(times(d.value(), u.size())) : d;
}

template <ScalarField T>
SolveReport<T> trivial_report(const Vector<T>& u, StepKind kind, std::size_t p, const SolveOptions& opt) {
  SolveReport<T> r{SolveStatus::Solved, u, 0, {}, false, 0, std::nullopt};
  if (all_neg_inf(u)) r.status = SolveStatus::BottomReached;
  if (opt.record_trace) r.trace = IterationTrace<T>{{u}, kind, std::max<std::size_t>(p, 1)};
  finish(r, u);
  return r;
}

}  // namespace detail

/// Round-robin projection onto the row half-spaces, rows 1..p in order.
/// Converges to the greatest solution below u.
template <ScalarField T>
SolveReport<T> cyclic_solve(const InequalitySystem<T>& S, const Vector<T>& u, const SolveOptions& opt = {}) {
  detail::validate_start(S, u);
  const std::size_t p = S.rows();
  if (p == 0 || all_neg_inf(u)) return detail::trivial_report(u, StepKind::Cyclic, p, opt);

  std::vector<CanonicalHalfSpace<T>> rows;
  std::vector<Classification> kinds;
  rows.reserve(p);
  for (std::size_t j = 0; j < p; ++j) {
    const HalfSpace<T> H = S.row(j);
    detail::require_finite_coefficients(H);
    kinds.push_back(classify(H));
    rows.push_back(detail::truncate(H));
  }

  SolveReport<T> r{SolveStatus::IterationCapHit, u, 0, {}, false, 0, std::nullopt};
  if (opt.record_trace) r.trace = IterationTrace<T>{{u}, StepKind::Cyclic, p};

  if (std::find(kinds.begin(), kinds.end(), Classification::BottomOnly) != kinds.end()) {
    r.status = SolveStatus::BottomReached;
    r.solution = Vector<T>(u.size());
    if (r.trace) r.trace->points.push_back(r.solution);
    detail::finish(r, u);
    return r;
  }

  OpCounter ops;
  const auto cutoff = detail::divergence_cutoff(S, u, opt);
  Vector<T>& x = r.solution;
  for (std::size_t sweep = 0;; ++sweep) {
    if (sweep == opt.max_sweeps) {
      r.iterations = sweep;
      break;
    }
    const Vector<T> before = x;
    bool changed = false;
    for (std::size_t j = 0; j < p; ++j) {
      if (kinds[j] != Classification::Everything) changed |= project_in_place(rows[j], x, &ops);
      if (r.trace) r.trace->points.push_back(x);
    }
    if (detail::apply_guard(x, cutoff)) {
      r.guard_triggered = true;
      changed = true;
      if (r.trace) r.trace->points.back() = x;
    }
    if (all_neg_inf(x)) {
      r.status = SolveStatus::BottomReached;
      r.iterations = sweep + 1;
      break;
    }
    bool settled = !changed;
    if constexpr (std::is_floating_point_v<T>) settled = settled || detail::max_drop(before, x) <= opt.tol;
    if (settled) {
      r.status = SolveStatus::Solved;
      r.iterations = sweep;
      break;
    }
  }
  r.scalar_ops = ops.ops;
  detail::finish(r, u);
  return r;
}

/// eta <- B#(A eta) meet eta.
template <ScalarField T>
SolveReport<T> power_solve(const InequalitySystem<T>& S, const Vector<T>& u, const SolveOptions& opt = {}) {
  detail::validate_start(S, u);
  if (opt.require_admissible && S.rows() > 0) {
    if (auto bad = inadmissible_column(S.B)) {
      throw AdmissibilityError(*bad, "column " + std::to_string(*bad + 1) +
                                         " of B has no finite entry; the power algorithm needs one in every column");
    }
  }
  if (S.rows() == 0 || all_neg_inf(u)) return detail::trivial_report(u, StepKind::Power, 1, opt);

  SolveReport<T> r{SolveStatus::IterationCapHit, u, 0, {}, false, 0, std::nullopt};
  if (opt.record_trace) r.trace = IterationTrace<T>{{u}, StepKind::Power, 1};

  OpCounter ops;
  const auto cutoff = detail::divergence_cutoff(S, u, opt);
  Vector<T>& x = r.solution;
  for (std::size_t it = 0;; ++it) {
    if (it == opt.max_sweeps) {
      r.iterations = it;
      break;
    }
    Vector<T> y = meet(residuated_apply(S.B, mat_apply(S.A, x, &ops), &ops), x);
    ops.ops += x.size();
    if (detail::apply_guard(y, cutoff)) r.guard_triggered = true;
    if (r.trace) r.trace->points.push_back(y);
    bool settled = y == x;
    if constexpr (std::is_floating_point_v<T>) settled = settled || detail::max_drop(x, y) <= opt.tol;
    x = std::move(y);
    if (settled) {
      r.status = all_neg_inf(x) ? SolveStatus::BottomReached : SolveStatus::Solved;
      r.iterations = it;
      break;
    }
    if (all_neg_inf(x)) {
      r.status = SolveStatus::BottomReached;
      r.iterations = it + 1;
      break;
    }
  }
  r.scalar_ops = ops.ops;
  detail::finish(r, u);
  return r;
}

/// Checks P_V(u) <= xi^{pk} <= eta^k for k = 0..k_max, where P_V(u) is the
/// cyclic limit. Traces are extended by their last point once a run stops.
template <ScalarField T>
bool sandwich_check(const InequalitySystem<T>& S, const Vector<T>& u, std::size_t k_max, SolveOptions opt = {}) {
  opt.record_trace = true;
  const SolveReport<T> c = cyclic_solve(S, u, opt);
  const SolveReport<T> w = power_solve(S, u, opt);
  const auto& xi = c.trace->points;
  const auto& eta = w.trace->points;
  const std::size_t p = std::max<std::size_t>(S.rows(), 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Vector<T>& xk = xi[std::min(p * k, xi.size() - 1)];
    const Vector<T>& ek = eta[std::min(k, eta.size() - 1)];
    if (!leq(c.solution, xk) || !leq(xk, ek)) return false;
  }
  return true;
}

template <ScalarField T>
struct FiniteSolution {
  Vector<T> v;
};
struct OnlyBottom {};

template <ScalarField T>
using Feasibility = std::variant<FiniteSolution<T>, OnlyBottom>;

/// Whether the system has a solution other than -inf, via the cyclic limit
/// from a finite start.
template <ScalarField T>
Feasibility<T> feasibility(const InequalitySystem<T>& S, const Vector<T>& u, const SolveOptions& opt = {}) {
  if (!all_finite(u)) throw DomainError("feasibility needs a finite initial point");
  const SolveReport<T> r = cyclic_solve(S, u, opt);
  if (r.status == SolveStatus::IterationCapHit) {
    throw SolverError("feasibility: iteration cap hit after " + std::to_string(r.iterations) + " sweeps");
  }
  if (all_neg_inf(r.solution)) return OnlyBottom{};
  return FiniteSolution<T>{r.solution};
}

}  // namespace maxplus
