// Copyright 2026 The AGPPA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "agppa/agppa.hpp"
#include "agppa/errors.hpp"
#include "agppa/generators.hpp"
#include "agppa/mps.hpp"
#include "agppa/problem_json.hpp"
#include "agppa/report.hpp"

namespace agppa::cli {
namespace {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level_from_env(std::ostream& err) {
  const char* v = std::getenv("AGPPA_LOG");
  if (v == nullptr || *v == '\0') return LogLevel::kError;
  const std::string s(v);
  if (s == "error") return LogLevel::kError;
  if (s == "info") return LogLevel::kInfo;
  if (s == "debug") return LogLevel::kDebug;
  err << "agppa: ignoring AGPPA_LOG='" << s << "' (expected error, info or debug)\n";
  return LogLevel::kError;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

struct LoadedProblem {
  LpProblem problem;
  std::optional<VariableMap> variables;
  double objective_offset = 0.0;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    const auto a = std::tolower(static_cast<unsigned char>(s[s.size() - suffix.size() + i]));
    if (a != suffix[i]) return false;
  }
  return true;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedProblem load_problem(const std::string& path, const std::string& format, bool fixed) {
  std::string kind = format;
  if (kind == "auto") kind = ends_with(path, ".json") ? "json" : "mps";
  LoadedProblem out;
  if (kind == "json") {
    out.problem = problem_from_json(read_json_file(path));
    return out;
  }
  MpsModel m = mps_parse(read_text(path), fixed ? MpsFormat::kFixed : MpsFormat::kFree);
  out.problem = std::move(m.problem);
  out.variables = std::move(m.variables);
  out.objective_offset = m.objective_offset;
  return out;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string format = "auto";
  bool fixed = false;
  std::string form = "auto";
  std::string residual = "e2";
  std::string inner = "hybrid";
  std::string hood = "apg";
  double c_j = 10.0;
  long long max_inner_iterations = 1'000'000;
  std::uint64_t seed = 0;
  std::string report_path;
  std::string history_path;
  std::string solution_path;
  std::string warm_start_path;
  AgppaParams params;
  std::optional<double> delta;
  std::optional<double> sigma0;
};

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err, LogLevel log) {
  const LoadedProblem loaded = load_problem(o.input, o.format, o.fixed);
  const LpProblem& p = loaded.problem;

  AgppaParams params = o.params;
  params.residual_kind = parse_residual_kind(o.residual);
  params.delta = o.delta;
  params.sigma0 = o.sigma0;
  params.validate();

  InnerConfig inner;
  inner.mode = parse_inner_mode(o.inner);
  if (o.hood == "apg") {
    inner.hood.kind = HoodKind::kApg;
  } else if (o.hood == "rcd") {
    inner.hood.kind = HoodKind::kRcd;
  } else {
    throw std::invalid_argument("--hood must be apg or rcd");
  }
  inner.hood.seed = o.seed;
  inner.c_j = o.c_j;
  inner.max_iterations = o.max_inner_iterations;
  inner.pssn.validate();

  Form form = Form::kPrimal;
  if (o.form == "auto") {
    form = choose_form(p);
  } else if (o.form == "dual") {
    form = Form::kDual;
  } else if (o.form != "primal") {
    throw std::invalid_argument("--form must be auto, primal or dual");
  }
  const TransformedProblem tp = apply_form(p, form);

  RunOptions run;
  if (!o.warm_start_path.empty()) {
    const PrimalDualPoint z0 = point_from_json(read_json_file(o.warm_start_path));
    check_dimensions(p, z0);
    run.initial_point = tp.map.to_solved(z0);
  }
  if (log >= LogLevel::kInfo) {
    err << "agppa: n=" << p.n() << " n_b=" << p.n_b() << " m_I=" << p.m_ineq()
        << " m_E=" << p.m_eq() << " nnz=" << p.a().nnz() << " form=" << to_string(form)
        << " inner=" << to_string(inner.mode) << "\n";
    run.on_step = [&err, log](const StepEvent& e) {
      if (e.violation) {
        err << "agppa: stage " << e.stage << " restarts after t=" << e.t
            << " (sigma=" << fmt("%.3e", e.sigma) << ")\n";
      } else if (log >= LogLevel::kDebug) {
        err << "agppa: stage " << e.stage << " t=" << e.t << " sigma=" << fmt("%.3e", e.sigma)
            << " eta=" << fmt("%.3e", e.eta) << " step=" << fmt("%.3e", e.step_norm)
            << " inner=" << to_string(e.inner->status) << "\n";
      }
    };
  }

  const SolveReport r = agppa_run(tp.problem, params, inner, run);
  const PrimalDualPoint z = tp.map.to_original(r.z);

  nlohmann::json rep = report_to_json(r);
  rep["form"] = std::string(to_string(form));
  rep["residual_kind"] = std::string(to_string(params.residual_kind));
  rep["solved_problem"] = {{"objective", r.objective}, {"residual", r.residual}};
  const double obj = objective(p, z.x) + loaded.objective_offset;
  const double orig_residual = residual(p, z, params.residual_kind);
  rep["objective"] = obj;
  rep["e1"] = residual_e1(p, z);
  rep["e2"] = residual_e2(p, z);
  rep["e3"] = residual_e3(p, z);
  rep["residual"] = orig_residual;

  if (!o.report_path.empty()) write_file_atomic(o.report_path, json_text(rep));
  if (!o.history_path.empty()) write_file_atomic(o.history_path, history_to_csv(r.history));
  if (!o.solution_path.empty()) {
    nlohmann::json sol = point_to_json(z);
    if (loaded.variables) {
      const std::vector<double> xv = loaded.variables->to_original(z.x);
      nlohmann::json vars = nlohmann::json::object();
      for (std::size_t j = 0; j < xv.size(); ++j) vars[loaded.variables->names[j]] = xv[j];
      sol["variables"] = std::move(vars);
    }
    write_file_atomic(o.solution_path, json_text(sol));
  }

  out << "status=" << to_string(r.status) << " objective=" << fmt("%.10g", obj) << " "
      << to_string(params.residual_kind) << "=" << fmt("%.3e", orig_residual)
      << " steps=" << r.total_steps << " time=" << fmt("%.3f", r.wall_seconds) << "s\n";
  return r.status == SolveStatus::kSolved ? kExitOk : kExitBudget;
}

// ---------------------------------------------------------------------------

struct GenerateOptions {
  std::string family;
  int m = 0;
  int n = 0;
  int m_eq = 0;
  int n_b = 0;
  double density = 0.01;
  std::uint64_t seed = 0;
  std::string data_path;
  double penalty = 1.0;
  std::string normalize = "none";
  std::string out_path;
  std::string mps_path;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  LpProblem p;
  if (o.family == "random-sparse") {
    p = gen_random_sparse_lp(o.m, o.n, o.density, o.seed);
  } else if (o.family == "covering") {
    p = gen_covering_lp(o.m, o.n, o.density, o.seed);
  } else if (o.family == "mixed") {
    p = gen_mixed_lp(o.n, o.m, o.m_eq, o.n_b, o.seed);
  } else if (o.family == "svm") {
    if (o.data_path.empty()) throw std::invalid_argument("svm needs --data");
    SvmData d = read_svm_csv(o.data_path);
    SvmNormalization mode = SvmNormalization::kNone;
    if (o.normalize == "dense") {
      mode = SvmNormalization::kDense;
    } else if (o.normalize == "sparse") {
      mode = SvmNormalization::kSparse;
    } else if (o.normalize != "none") {
      throw std::invalid_argument("--normalize must be none, dense or sparse");
    }
    normalize_samples(d.samples, mode);
    p = l1svm_to_lp(d.samples, d.labels, o.penalty);
  } else {
    throw std::invalid_argument("unknown family '" + o.family + "'");
  }
  if (o.out_path.empty() && o.mps_path.empty()) {
    out << problem_to_json(p).dump() << "\n";
  }
  if (!o.out_path.empty()) write_file_atomic(o.out_path, problem_to_json(p).dump() + "\n");
  if (!o.mps_path.empty()) write_file_atomic(o.mps_path, mps_write(p));
  if (!o.out_path.empty() || !o.mps_path.empty()) {
    out << "n=" << p.n() << " n_b=" << p.n_b() << " m_I=" << p.m_ineq() << " m_E=" << p.m_eq()
        << " nnz=" << p.a().nnz() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string problem;
  std::string point;
  std::string format = "auto";
  bool fixed = false;
  double epsilon = 1e-6;
  std::string residual = "e2";
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const LoadedProblem loaded = load_problem(o.problem, o.format, o.fixed);
  const PrimalDualPoint z = point_from_json(read_json_file(o.point));
  try {
    check_dimensions(loaded.problem, z);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const ResidualKind kind = parse_residual_kind(o.residual);
  const double e1 = residual_e1(loaded.problem, z);
  const double e2 = residual_e2(loaded.problem, z);
  const double e3 = residual_e3(loaded.problem, z);
  out << "E1 " << fmt("%.6e", e1) << "\nE2 " << fmt("%.6e", e2) << "\nE3 " << fmt("%.6e", e3)
      << "\n";
  const double sel = kind == ResidualKind::kE1 ? e1 : kind == ResidualKind::kE2 ? e2 : e3;
  return sel <= o.epsilon ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AGPPA linear programming solver", "agppa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "agppa 0.1.0");

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Solve an LP given as MPS or JSON");
  solve->add_option("input", so.input, "Problem file (.mps or .json)")->required();
  solve->add_option("--format", so.format, "auto, mps or json")
      ->check(CLI::IsMember({"auto", "mps", "json"}));
  solve->add_flag("--fixed", so.fixed, "Read MPS in fixed-column format");
  solve->add_option("--form", so.form, "auto, primal or dual")
      ->check(CLI::IsMember({"auto", "primal", "dual"}));
  solve->add_option("--epsilon", so.params.epsilon, "Target residual");
  solve->add_option("--residual", so.residual, "e1, e2 or e3")
      ->check(CLI::IsMember({"e1", "e2", "e3"}));
  solve->add_option("--gamma", so.params.gamma, "Relaxation factor in (0, 2)");
  solve->add_option("--rho", so.params.rho, "Target linear rate in (0, 1)");
  solve->add_option("--rho-delta", so.params.rho_delta, "Scale of the default delta");
  solve->add_option("--rho-eta", so.params.rho_eta, "Stage decay of eta");
  solve->add_option("--rho-sigma", so.params.rho_sigma, "Stage growth of sigma");
  solve->add_option("--varsigma", so.params.varsigma, "Exponent of the eta schedule");
  solve->add_option("--eta0", so.params.eta0, "Initial absolute inner tolerance");
  solve->add_option("--delta", so.delta, "Relative inner tolerance (overrides the default)");
  solve->add_option("--sigma0", so.sigma0, "Initial sigma (overrides alpha/||A||_F)");
  solve->add_option("--sigma0-scale", so.params.sigma0_scale, "Multiplier on the initial sigma");
  solve->add_option("--time-limit", so.params.max_time_seconds, "Wall-clock limit in seconds");
  solve->add_option("--max-stages", so.params.max_stages, "Stage limit");
  solve->add_option("--max-steps", so.params.max_steps, "Outer step limit");
  solve->add_flag("--check-residual-first", so.params.check_residual_first,
                  "Test the residual before each step");
  solve->add_option("--inner", so.inner, "hybrid, first_order_only or pssn_only")
      ->check(CLI::IsMember({"hybrid", "first_order_only", "pssn_only"}));
  solve->add_option("--hood", so.hood, "First-order epoch: apg or rcd")
      ->check(CLI::IsMember({"apg", "rcd"}));
  solve->add_option("--c-j", so.c_j, "PSSN budget multiplier of the hybrid solver");
  solve->add_option("--max-inner-iterations", so.max_inner_iterations,
                    "First-order iterations per inner solve");
  solve->add_option("--seed", so.seed, "Base seed of the RCD streams");
  solve->add_option("--report", so.report_path, "Write the report JSON here");
  solve->add_option("--history", so.history_path, "Write the residual history CSV here");
  solve->add_option("--solution", so.solution_path, "Write the primal-dual pair JSON here");
  solve->add_option("--warm-start", so.warm_start_path, "Initial primal-dual pair (JSON)");

  GenerateOptions go;
  auto* generate = app.add_subcommand("generate", "Write a generated LP");
  generate->add_option("family", go.family, "random-sparse, covering, mixed or svm")
      ->required()
      ->check(CLI::IsMember({"random-sparse", "covering", "mixed", "svm"}));
  generate->add_option("--m", go.m, "Rows (inequality rows for mixed)");
  generate->add_option("--n", go.n, "Columns");
  generate->add_option("--m-eq", go.m_eq, "Equality rows (mixed)");
  generate->add_option("--n-b", go.n_b, "Sign-constrained variables (mixed)");
  generate->add_option("--density", go.density, "Pattern density in (0, 1]");
  generate->add_option("--seed", go.seed, "Generator seed");
  generate->add_option("--data", go.data_path, "CSV samples 'label,features...' (svm)");
  generate->add_option("--penalty", go.penalty, "L1 penalty (svm)");
  generate->add_option("--normalize", go.normalize, "none, dense or sparse (svm)")
      ->check(CLI::IsMember({"none", "dense", "sparse"}));
  generate->add_option("--out", go.out_path, "JSON output path");
  generate->add_option("--mps", go.mps_path, "MPS output path");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "Print E1, E2, E3 of a pair");
  check->add_option("problem", co.problem, "Problem file")->required();
  check->add_option("point", co.point, "Pair JSON {\"x\", \"lambda\"}")->required();
  check->add_option("--format", co.format, "auto, mps or json")
      ->check(CLI::IsMember({"auto", "mps", "json"}));
  check->add_flag("--fixed", co.fixed, "Read MPS in fixed-column format");
  check->add_option("--epsilon", co.epsilon, "Threshold for the exit status");
  check->add_option("--residual", co.residual, "e1, e2 or e3")
      ->check(CLI::IsMember({"e1", "e2", "e3"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "agppa 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "agppa: " << e.what() << "\n";
    return kExitInput;
  }

  const LogLevel log = log_level_from_env(err);
  try {
    if (*solve) return cmd_solve(so, out, err, log);
    if (*generate) return cmd_generate(go, out);
    return cmd_check(co, out);
  } catch (const InputError& e) {
    err << "agppa: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "agppa: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "agppa: internal error: " << e.what() << "\n";
    return kExitBudget;
  }
}

}  // namespace agppa::cli
