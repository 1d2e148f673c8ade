// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <variant>

#include "fixtures.hpp"
#include "maxplus/oracle.hpp"

using namespace fixtures;  // NOLINT
using maxplus::SolveStatus;

namespace {

maxplus::SolveOptions traced() {
  maxplus::SolveOptions o;
  o.record_trace = true;
  return o;
}

Vec chain_limit(std::size_t n) {
  Vec v(n, ExtInt(0));
  for (std::size_t i = 0; i + 1 < n; ++i) v[i] = -static_cast<Z>(i + 1);
  return v;
}

}  // namespace

TEST_CASE("cyclic projection on the chain system") {
  const System S = chain_system(6);
  const auto r = maxplus::cyclic_solve(S, Vec(6, ExtInt(0)), traced());
  CHECK(r.status == SolveStatus::Solved);
  CHECK(r.iterations == 1);
  const auto& pts = r.trace->points;
  REQUIRE(pts.size() == 11);
  CHECK(pts[1] == Vec{-1, 0, 0, 0, 0, 0});
  CHECK(pts[2] == Vec{-1, -2, 0, 0, 0, 0});
  CHECK(pts[3] == Vec{-1, -2, -3, 0, 0, 0});
  CHECK(pts[4] == Vec{-1, -2, -3, -4, 0, 0});
  CHECK(pts[5] == Vec{-1, -2, -3, -4, -5, 0});
  for (std::size_t k = 6; k < pts.size(); ++k) CHECK(pts[k] == pts[5]);
  CHECK(r.solution == chain_limit(6));
  CHECK(maxplus::satisfies(S, r.solution));
  CHECK_FALSE(r.guard_triggered);
  CHECK(r.distance_bound_used == ExtInt(30));
}

TEST_CASE("power algorithm on the chain system") {
  const System S = chain_system(6);
  const auto r = maxplus::power_solve(S, Vec(6, ExtInt(0)), traced());
  CHECK(r.status == SolveStatus::Solved);
  CHECK(r.iterations == 5);
  const auto& pts = r.trace->points;
  REQUIRE(pts.size() == 7);
  CHECK(pts[1] == Vec{-1, -1, -1, -1, -1, 0});
  CHECK(pts[2] == Vec{-1, -2, -2, -2, -2, 0});
  CHECK(pts[3] == Vec{-1, -2, -3, -3, -3, 0});
  CHECK(pts[4] == Vec{-1, -2, -3, -4, -4, 0});
  CHECK(pts[5] == Vec{-1, -2, -3, -4, -5, 0});
  CHECK(pts[6] == pts[5]);
  CHECK(r.solution == chain_limit(6));
}

TEST_CASE("feasible start is returned unchanged") {
  const System S = chain_system(4);
  const Vec u = chain_limit(4);
  const auto c = maxplus::cyclic_solve(S, u, traced());
  CHECK(c.status == SolveStatus::Solved);
  CHECK(c.iterations == 0);
  CHECK(c.solution == u);
  const auto p = maxplus::power_solve(S, u, traced());
  CHECK(p.iterations == 0);
  REQUIRE(p.trace->points.size() == 2);
  CHECK(p.trace->points[1] == u);
}

TEST_CASE("slow two-variable system") {
  for (Z k : {5, 10, 50}) {
    const System S = slow_system();
    const auto c = maxplus::cyclic_solve(S, slow_start(k));
    CHECK(c.status == SolveStatus::Solved);
    CHECK(c.solution == Vec{0, 0, 0});
    CHECK(c.iterations == static_cast<std::size_t>(k));
    // the simultaneous update lags one step behind the sweep on this system
    const auto p = maxplus::power_solve(S, slow_start(k));
    CHECK(p.solution == Vec{0, 0, 0});
    CHECK(p.iterations == static_cast<std::size_t>(2 * k));
  }
}

TEST_CASE("power trace on the slow system alternates coordinates") {
  const auto p = maxplus::power_solve(slow_system(), slow_start(3), traced());
  const auto& pts = p.trace->points;
  CHECK(pts[1] == Vec{2, 3, 0});
  CHECK(pts[2] == Vec{2, 2, 0});
  CHECK(pts[3] == Vec{1, 2, 0});
  CHECK(pts[6] == Vec{0, 0, 0});
}

TEST_CASE("admissibility") {
  const Mat A{{0, 0}};
  const Mat B{{0, NI}};
  const System S(A, B);
  maxplus::SolveOptions strict;
  strict.require_admissible = true;
  try {
    maxplus::power_solve(S, Vec{0, 0}, strict);
    FAIL("expected an admissibility error");
  } catch (const maxplus::AdmissibilityError& e) {
    CHECK(e.column() == 1);
  }
  // the empty column only produces +inf in B#, which the meet absorbs
  const auto loose = maxplus::power_solve(S, Vec{0, 0});
  CHECK(loose.status == SolveStatus::Solved);
  CHECK(loose.solution == maxplus::cyclic_solve(S, Vec{0, 0}).solution);
  CHECK(maxplus::inadmissible_column(chain_system(6).B) == 5);
}

TEST_CASE("degenerate rows") {
  // a < b everywhere: only the bottom vector
  const System bottom(Mat{{-1}}, Mat{{0}});
  const auto r = maxplus::cyclic_solve(bottom, Vec{0}, traced());
  CHECK(r.status == SolveStatus::BottomReached);
  CHECK(r.solution == Vec{NI});
  CHECK(std::holds_alternative<maxplus::OnlyBottom>(maxplus::feasibility(bottom, Vec{0})));

  // a >= b everywhere: the row is skipped
  const System all(Mat{{0, 0}}, Mat{{-1, NI}});
  CHECK(maxplus::cyclic_solve(all, Vec{3, 4}).solution == Vec{3, 4});
}

TEST_CASE("empty constraint list") {
  const System S(Mat(0, 3), Mat(0, 3));
  const Vec u{1, 2, 3};
  const auto f = maxplus::feasibility(S, u);
  REQUIRE(std::holds_alternative<maxplus::FiniteSolution<Z>>(f));
  CHECK(std::get<maxplus::FiniteSolution<Z>>(f).v == u);
  CHECK(maxplus::power_solve(S, u).solution == u);
}

TEST_CASE("feasibility") {
  const auto f = maxplus::feasibility(chain_system(6), Vec(6, ExtInt(0)));
  REQUIRE(std::holds_alternative<maxplus::FiniteSolution<Z>>(f));
  CHECK(std::get<maxplus::FiniteSolution<Z>>(f).v == chain_limit(6));
  CHECK_THROWS_AS(maxplus::feasibility(chain_system(3), Vec{0, NI, 0}), maxplus::DomainError);
}

TEST_CASE("divergence guard stops an infeasible cycle") {
  // x1 <= x2 - 1 and x2 <= x1 - 1: only the bottom vector
  const System S(Mat{{NI, -1}, {-1, NI}}, Mat{{0, NI}, {NI, 0}});
  const auto c = maxplus::cyclic_solve(S, Vec{0, 0});
  CHECK(c.status == SolveStatus::BottomReached);
  CHECK(c.guard_triggered);
  CHECK(c.iterations < 10);
  const auto p = maxplus::power_solve(S, Vec{0, 0});
  CHECK(p.status == SolveStatus::BottomReached);
  CHECK(p.guard_triggered);
  CHECK(std::holds_alternative<maxplus::OnlyBottom>(maxplus::feasibility(S, Vec{0, 0})));

  maxplus::SolveOptions off;
  off.divergence_guard = false;
  off.max_sweeps = 50;
  const auto capped = maxplus::cyclic_solve(S, Vec{0, 0}, off);
  CHECK(capped.status == SolveStatus::IterationCapHit);
  CHECK(capped.iterations == 50);
}

TEST_CASE("guard keeps a partially infinite limit") {
  // x1 <= x1 - 1 forces x1 = -inf, x2 is free
  const System S(Mat{{-1, NI}, {NI, 0}}, Mat{{0, NI}, {NI, 0}});
  const auto c = maxplus::cyclic_solve(S, Vec{0, 5});
  CHECK(c.status == SolveStatus::Solved);
  CHECK(c.solution == Vec{NI, 5});
}

TEST_CASE("solver properties on planted instances") {
  std::mt19937_64 rng(61);
  const maxplus::oracle::GridSpec G{-12, 8, 1, true, false};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 3, p = 1 + (t / 3) % 3;
    const auto inst = planted_instance(rng, p, n, -4, 4);
    const Vec u = random_vector(rng, n, -4, 4, 0.0);
    const auto c = maxplus::cyclic_solve(inst.S, u, traced());
    const auto w = maxplus::power_solve(inst.S, u, traced());
    REQUIRE(c.status == SolveStatus::Solved);
    REQUIRE(w.status == SolveStatus::Solved);
    CHECK(c.solution == w.solution);
    CHECK(maxplus::satisfies(inst.S, c.solution));
    // fixed point of the power map
    CHECK(maxplus::meet(maxplus::residuated_apply(inst.S.B, maxplus::mat_apply(inst.S.A, c.solution)),
                        c.solution) == c.solution);
    for (const auto* tr : {&c.trace->points, &w.trace->points}) {
      for (std::size_t k = 1; k < tr->size(); ++k) {
        CHECK(maxplus::leq((*tr)[k], (*tr)[k - 1]));
        CHECK(maxplus::leq(c.solution, (*tr)[k]));
      }
    }
    const auto d = maxplus::hilbert_distance(u, c.solution);
    REQUIRE(d.is_finite());
    CHECK(static_cast<Z>(w.iterations) <= static_cast<Z>(n) * d.value());
    CHECK(maxplus::sandwich_check(inst.S, u, w.iterations + 2));
    if (n <= 3) CHECK(maxplus::oracle::grid_projection(inst.S, u, G) == c.solution);
  }
}

TEST_CASE("sandwich on random systems") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5, p = 1 + (t / 5) % 5;
    const Mat A = random_matrix(rng, p, n, -5, 5, 0.3);
    const Mat B = random_matrix(rng, p, n, -5, 5, 0.3);
    const System S(A, B);
    const Vec u = random_vector(rng, n, -5, 5, 0.0);
    CHECK(maxplus::sandwich_check(S, u, 60));
  }
}

TEST_CASE("operation counts on the chain family") {
  for (std::size_t n : {10, 20, 40}) {
    const System S = chain_system(n);
    const Vec u(n, ExtInt(0));
    const auto c = maxplus::cyclic_solve(S, u);
    const auto p = maxplus::power_solve(S, u);
    CHECK(c.solution == p.solution);
    CHECK(c.scalar_ops <= 6 * n);
    CHECK(p.scalar_ops >= n * n);
    CHECK(p.scalar_ops <= 4 * n * n);
  }
}

TEST_CASE("float mode") {
  using R = maxplus::ExtReal;
  using V = maxplus::Vector<double>;
  const R ni = R::neg_inf();
  const maxplus::InequalitySystem<double> S(maxplus::Matrix<double>{{ni, -0.5}}, maxplus::Matrix<double>{{0.0, ni}});
  const auto r = maxplus::cyclic_solve(S, V{1.0, 0.25});
  CHECK(r.status == SolveStatus::Solved);
  CHECK(r.solution == V{-0.25, 0.25});
}

TEST_CASE("rejects bad starts") {
  CHECK_THROWS_AS(maxplus::cyclic_solve(chain_system(3), Vec{0, 0}), maxplus::DimensionError);
  CHECK_THROWS_AS(maxplus::cyclic_solve(chain_system(3), Vec{0, PI, 0}), maxplus::DomainError);
  CHECK(maxplus::cyclic_solve(chain_system(3), Vec{NI, NI, NI}).status == SolveStatus::BottomReached);
}
