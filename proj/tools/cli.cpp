// Copyright 2026 The maxplus Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxplus/json_io.hpp"
#include "maxplus/maxplus.hpp"

namespace mps {
namespace {

using namespace maxplus;  // NOLINT
using nlohmann::json;

constexpr std::size_t kDefaultMaxIters = 100000;

struct Options {
  std::string a, b, init, halfspace, point, generators;
  std::string method = "cyclic";
  std::string mode;
  std::string output = "text";
  double tol = 1e-9;
  std::optional<std::size_t> max_iters;
  bool trace = false;
  bool require_admissible = false;
};

struct Context {
  const Options& opt;
  std::map<std::string, io::TokenFile> files;  // keyed by option name
  std::ostream& out;
  std::ostream& err;

  [[nodiscard]] const io::TokenFile& file(const std::string& role) const { return files.at(role); }
  [[nodiscard]] bool as_json() const { return opt.output == "json"; }
};

std::size_t resolve_max_iters(const Options& o) {
  if (o.max_iters) return *o.max_iters;
  if (const char* env = std::getenv("MPS_MAX_ITERS"); env != nullptr && *env != '\0') {
    std::size_t v = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
      throw ParseError("MPS_MAX_ITERS must be a positive integer, got '" + std::string(env) + "'");
    }
    return v;
  }
  return kDefaultMaxIters;
}

void require_dims(const Context& c, const std::string& role_a, const std::string& what_a, std::size_t na,
                  const std::string& role_b, const std::string& what_b, std::size_t nb) {
  if (na == nb) return;
  throw DimensionError("dimension mismatch: " + c.file(role_a).source + " " + what_a + " " + std::to_string(na) +
                       " but " + c.file(role_b).source + " " + what_b + " " + std::to_string(nb));
}

template <ScalarField T>
std::string row_text(const Vector<T>& v) {
  return io::format_row(v);
}

template <ScalarField T>
std::string shifted(const Extended<T>& e) {
  if (!e.is_finite()) return to_token(e);
  if (e == Extended<T>(T{})) return "t";
  if (e.value() < T{}) return "t - " + to_token(negate(e));
  return "t + " + to_token(e);
}

template <ScalarField T>
void print_report(std::ostream& out, StepKind kind, const SolveReport<T>& r) {
  out << "method: " << to_string(kind) << "\n"
      << "status: " << to_string(r.status) << "\n"
      << "iterations: " << r.iterations << "\n"
      << "solution: " << row_text(r.solution) << "\n";
  if (r.guard_triggered) out << "note: divergence guard sent coordinates to -inf\n";
  if (r.trace) {
    out << "trace:\n";
    for (std::size_t k = 0; k < r.trace->points.size(); ++k) {
      out << "  " << k << ": " << row_text(r.trace->points[k]) << "\n";
    }
  }
}

template <ScalarField T>
SolveOptions solve_options(const Context& c) {
  SolveOptions s;
  s.max_sweeps = resolve_max_iters(c.opt);
  s.tol = c.opt.tol;
  s.record_trace = c.opt.trace;
  s.require_admissible = c.opt.require_admissible;
  return s;
}

template <ScalarField T>
InequalitySystem<T> load_system(const Context& c, Vector<T>& u) {
  Matrix<T> A = io::parse_matrix<T>(c.file("a"));
  Matrix<T> B = io::parse_matrix<T>(c.file("b"));
  require_dims(c, "a", "has rows", A.rows(), "b", "has rows", B.rows());
  require_dims(c, "a", "has columns", A.cols(), "b", "has columns", B.cols());
  u = io::parse_vector<T>(c.file("init"));
  require_dims(c, "a", "has columns", A.cols(), "init", "has length", u.size());
  return InequalitySystem<T>(std::move(A), std::move(B));
}

template <ScalarField T>
void check_admissible(const Context& c, const InequalitySystem<T>& S) {
  if (!c.opt.require_admissible || S.rows() == 0) return;
  if (auto bad = inadmissible_column(S.B)) {
    throw AdmissibilityError(*bad, "power method: column " + std::to_string(*bad + 1) + " of " + c.file("b").source +
                                       " has no finite entry");
  }
}

template <ScalarField T>
int cmd_solve(Context& c) {
  Vector<T> u(1);
  const InequalitySystem<T> S = load_system<T>(c, u);
  const SolveOptions so = solve_options<T>(c);
  std::vector<std::pair<StepKind, SolveReport<T>>> reports;
  if (c.opt.method != "cyclic") check_admissible(c, S);
  if (c.opt.method != "power") reports.emplace_back(StepKind::Cyclic, cyclic_solve(S, u, so));
  if (c.opt.method != "cyclic") reports.emplace_back(StepKind::Power, power_solve(S, u, so));

  if (c.as_json()) {
    json j;
    if (reports.size() == 1) {
      j = jsonio::report(reports[0].second, reports[0].first);
    } else {
      for (const auto& [k, r] : reports) j[to_string(k)] = jsonio::report(r, k);
    }
    c.out << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i != 0) c.out << "\n";
      print_report(c.out, reports[i].first, reports[i].second);
    }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const auto& kr) { return kr.second.status == SolveStatus::Solved; });
  return ok ? kOk : kInfeasible;
}

template <ScalarField T>
int cmd_compare(Context& c) {
  Vector<T> u(1);
  const InequalitySystem<T> S = load_system<T>(c, u);
  check_admissible(c, S);
  SolveOptions so = solve_options<T>(c);
  so.record_trace = true;
  auto fc = std::async(std::launch::async, [&] { return cyclic_solve(S, u, so); });
  auto fp = std::async(std::launch::async, [&] { return power_solve(S, u, so); });
  SolveReport<T> rc = fc.get();
  SolveReport<T> rp = fp.get();
  const std::size_t k_max = std::max(rc.iterations, rp.iterations) + 1;
  const bool sandwich = sandwich_check(S, u, k_max, so);
  const bool agree = rc.solution == rp.solution;
  if (!c.opt.trace) {
    rc.trace.reset();
    rp.trace.reset();
  }
  if (c.as_json()) {
    json j = {{"cyclic", jsonio::report(rc, StepKind::Cyclic)},
              {"power", jsonio::report(rp, StepKind::Power)},
              {"limits_agree", agree},
              {"sandwich", sandwich}};
    c.out << j.dump(2) << "\n";
  } else {
    print_report(c.out, StepKind::Cyclic, rc);
    c.out << "\n";
    print_report(c.out, StepKind::Power, rp);
    c.out << "\nlimits agree: " << (agree ? "yes" : "no") << "\n"
          << "sandwich holds: " << (sandwich ? "yes" : "no") << "\n";
  }
  const bool ok = rc.status == SolveStatus::Solved && rp.status == SolveStatus::Solved;
  return ok ? kOk : kInfeasible;
}

template <ScalarField T>
std::pair<HalfSpace<T>, Vector<T>> load_halfspace_point(const Context& c) {
  HalfSpace<T> H = io::parse_halfspace<T>(c.file("halfspace"));
  Vector<T> x = io::parse_vector<T>(c.file("point"));
  require_dims(c, "halfspace", "has dimension", H.dimension(), "point", "has length", x.size());
  return {std::move(H), std::move(x)};
}

template <ScalarField T>
std::pair<GeneratedSemimodule<T>, Vector<T>> load_generators_point(const Context& c) {
  GeneratedSemimodule<T> V = io::parse_generators<T>(c.file("generators"));
  Vector<T> x = io::parse_vector<T>(c.file("point"));
  require_dims(c, "generators", "has dimension", V.dimension(), "point", "has length", x.size());
  if (has_pos_inf(x)) throw DomainError("the point must not have +inf entries");
  return {std::move(V), std::move(x)};
}

template <ScalarField T>
int cmd_project_halfspace(Context& c) {
  auto [H, x] = load_halfspace_point<T>(c);
  const Vector<T> p = project(H, x);
  const Extended<T> d = distance(H, x);
  if (c.as_json()) {
    c.out << json{{"classification", to_string(classify(H))},
                  {"projection", jsonio::tokens(p)},
                  {"distance", to_token(d)}}
                 .dump(2)
          << "\n";
  } else {
    c.out << row_text(p) << "\n";
  }
  return kOk;
}

template <ScalarField T>
int cmd_distance(Context& c) {
  Extended<T> d;
  if (!c.opt.halfspace.empty()) {
    auto [H, x] = load_halfspace_point<T>(c);
    d = distance(H, x);
  } else {
    auto [V, x] = load_generators_point<T>(c);
    d = distance_to(V, x);
  }
  if (c.as_json()) {
    c.out << json{{"distance", to_token(d)}}.dump(2) << "\n";
  } else {
    c.out << to_token(d) << "\n";
  }
  return kOk;
}

template <ScalarField T>
int cmd_canonicalize(Context& c) {
  const HalfSpace<T> H = io::parse_halfspace<T>(c.file("halfspace"));
  const CanonicalHalfSpace<T> C = canonicalize(H);
  if (c.as_json()) {
    c.out << jsonio::canonical(C).dump(2) << "\n";
    return kOk;
  }
  const ApexSectors<T> as = apex_and_sectors(C);
  std::string sectors;
  for (const auto& s : as.sectors) sectors += (sectors.empty() ? "" : " ") + std::to_string(s.index + 1);
  c.out << "a': " << io::format_row(C.a_prime) << "\n"
        << "b': " << io::format_row(C.b_prime) << "\n"
        << "I: " << C.I.to_string() << "\n"
        << "J: " << C.J.to_string() << "\n"
        << "apex: " << row_text(as.apex) << (as.finite_apex ? "" : " (not finite)") << "\n"
        << "sectors: " << sectors << "\n";
  return kOk;
}

template <ScalarField T>
int cmd_best_approx(Context& c) {
  auto [H, x] = load_halfspace_point<T>(c);
  const BestApproxSet<T> s = best_approx_set(H, x);
  if (c.as_json()) {
    c.out << jsonio::best_approx(s).dump(2) << "\n";
    return kOk;
  }
  c.out << "distance: " << to_token(s.base_distance) << "\n";
  if (s.all_at_infinite_distance) {
    c.out << "every element of the half-space is at infinite distance\n";
    return kOk;
  }
  for (const auto& f : s.faces) {
    c.out << "face (pivot " << f.pivot + 1 << "):\n";
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (auto it = f.fixed.find(k); it != f.fixed.end()) {
        c.out << "  h" << k + 1 << " = " << shifted(it->second) << "\n";
      } else {
        const auto& [lo, hi] = f.box.at(k);
        c.out << "  " << shifted(lo) << " <= h" << k + 1 << " <= " << shifted(hi) << "\n";
      }
    }
  }
  return kOk;
}

template <ScalarField T>
int cmd_project_semimodule(Context& c) {
  auto [V, x] = load_generators_point<T>(c);
  const Vector<T> p = project(V, x);
  const Extended<T> d = hilbert_distance(x, p);
  if (c.as_json()) {
    c.out << json{{"projection", jsonio::tokens(p)}, {"distance", to_token(d)}, {"member", p == x}}.dump(2) << "\n";
  } else {
    c.out << row_text(p) << "\n";
  }
  return kOk;
}

template <ScalarField T>
int cmd_separate(Context& c) {
  auto [V, x] = load_generators_point<T>(c);
  const Vector<T> p = project(V, x);
  const Extended<T> d = hilbert_distance(x, p);
  if (p == x) {
    if (c.as_json()) {
      c.out << json{{"separated", false}, {"projection", jsonio::tokens(p)}, {"distance", to_token(d)}}.dump(2) << "\n";
    } else {
      c.out << "the point lies in the semimodule; nothing to separate\n";
    }
    return kInfeasible;
  }
  if (d.is_pos_inf()) {
    if (c.as_json()) {
      c.out << json{{"separated", false}, {"projection", jsonio::tokens(p)}, {"distance", "+inf"}}.dump(2) << "\n";
    } else {
      c.out << "distance is +inf: the semimodule does not meet the part of the point\n";
    }
    return kInfeasible;
  }

  std::optional<IndexSet> index_map;
  Vector<T> xr = x;
  GeneratedSemimodule<T> Vr = V;
  if (!all_finite(p)) {
    ReducedProblem<T> rp = reduce_problem(V, x);
    xr = rp.x;
    Vr = rp.V;
    index_map = rp.I;
  }
  const HalfSpace<T> H = universal_halfspace(Vr, xr);
  const Vector<T> pr = project(Vr, xr);
  if (c.as_json()) {
    json j = {{"separated", true},
              {"projection", jsonio::tokens(p)},
              {"distance", to_token(d)},
              {"halfspace", jsonio::halfspace(H)},
              {"apex", jsonio::tokens(pr)}};
    if (index_map) j["index_map"] = jsonio::indices(*index_map);
    c.out << j.dump(2) << "\n";
  } else {
    c.out << "projection: " << row_text(p) << "\n"
          << "distance: " << to_token(d) << "\n";
    if (index_map) c.out << "reduced to coordinates " << index_map->to_string() << "\n";
    c.out << "a: " << io::format_row(H.a) << "\n"
          << "b: " << io::format_row(H.b) << "\n";
  }
  return kOk;
}

template <ScalarField T>
int dispatch(const std::string& cmd, Context& c) {
  if (cmd == "solve") return cmd_solve<T>(c);
  if (cmd == "compare") return cmd_compare<T>(c);
  if (cmd == "project-halfspace") return cmd_project_halfspace<T>(c);
  if (cmd == "distance") return cmd_distance<T>(c);
  if (cmd == "canonicalize") return cmd_canonicalize<T>(c);
  if (cmd == "best-approx") return cmd_best_approx<T>(c);
  if (cmd == "project-semimodule") return cmd_project_semimodule<T>(c);
  if (cmd == "separate") return cmd_separate<T>(c);
  throw std::logic_error("unknown command " + cmd);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "number mode (default: inferred)")->check(CLI::IsMember({"int", "float"}));
  sub->add_option("--output", o.output, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_solver_opts(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a, "matrix A")->required();
  sub->add_option("--b", o.b, "matrix B")->required();
  sub->add_option("--init", o.init, "initial point u")->required();
  sub->add_option("--tol", o.tol, "float-mode stopping tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iters", o.max_iters, "iteration cap (sweeps for cyclic)")->check(CLI::PositiveNumber);
  sub->add_flag("--trace", o.trace, "include the iterates");
  sub->add_flag("--require-admissible", o.require_admissible,
                "power method: reject B when a column has no finite entry");
  add_common(sub, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"max-plus projection and inequality solver", "mps"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve Ax >= Bx from an initial point");
  add_solver_opts(solve, o);
  solve->add_option("--method", o.method, "cyclic, power or both")->check(CLI::IsMember({"cyclic", "power", "both"}));

  auto* compare = app.add_subcommand("compare", "run both solvers and check the sandwich bound");
  add_solver_opts(compare, o);

  auto* proj_h = app.add_subcommand("project-halfspace", "project a point onto a half-space");
  proj_h->add_option("--halfspace", o.halfspace)->required();
  proj_h->add_option("--point", o.point)->required();
  add_common(proj_h, o);

  auto* dist = app.add_subcommand("distance", "distance from a point to a half-space or a semimodule");
  auto* dh = dist->add_option("--halfspace", o.halfspace);
  auto* dg = dist->add_option("--generators", o.generators);
  dh->excludes(dg);
  dist->add_option("--point", o.point)->required();
  add_common(dist, o);

  auto* canon = app.add_subcommand("canonicalize", "canonical form, apex and sectors of a half-space");
  canon->add_option("--halfspace", o.halfspace)->required();
  add_common(canon, o);

  auto* best = app.add_subcommand("best-approx", "all best approximations of a point in a half-space");
  best->add_option("--halfspace", o.halfspace)->required();
  best->add_option("--point", o.point)->required();
  add_common(best, o);

  auto* proj_v = app.add_subcommand("project-semimodule", "project a point onto a generated semimodule");
  proj_v->add_option("--generators", o.generators)->required();
  proj_v->add_option("--point", o.point)->required();
  add_common(proj_v, o);

  auto* sep = app.add_subcommand("separate", "half-space separating a point from a generated semimodule");
  sep->add_option("--generators", o.generators)->required();
  sep->add_option("--point", o.point)->required();
  add_common(sep, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (dist->parsed() && o.halfspace.empty() && o.generators.empty()) {
    err << "error: distance needs --halfspace or --generators\n";
    return kInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    std::map<std::string, io::TokenFile> files;
    const std::pair<const char*, const std::string*> roles[] = {
        {"a", &o.a},           {"b", &o.b},         {"init", &o.init},
        {"halfspace", &o.halfspace}, {"point", &o.point}, {"generators", &o.generators}};
    for (const auto& [role, path] : roles) {
      if (!path->empty()) files.emplace(role, io::read_token_file(*path));
    }

    bool integral = true;
    if (o.mode == "int") {
      for (const auto& [_, f] : files) io::require_integer_tokens(f);
    } else if (o.mode == "float") {
      integral = false;
    } else {
      for (const auto& [_, f] : files) integral = integral && io::infer_mode(f) == io::NumberMode::Int;
    }

    Context ctx{o, std::move(files), out, err};
    return integral ? dispatch<std::int64_t>(cmd, ctx) : dispatch<double>(cmd, ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const AdmissibilityError& e) {
    err << "inadmissible system: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SolverError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace mps
