// Copyright 2026 The noisyot Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "noisyot/bounds.hpp"
#include "noisyot/protocol.hpp"
#include "noisyot/uncertainty.hpp"
#include "noisyot/verify.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 usage/precondition,
// 3 infeasible parameters.
enum ExitCode { kOk = 0, kVerifyFail = 1, kUsage = 2, kInfeasible = 3 };

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Stable 9-significant-digit doubles inside JSON reports.
json num9(double v) { return json::parse(fmt9(v)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw noisyot::parameter_error("cannot open " + out_path);
  out << text;
}

int cmd_uncertainty(double r_min, double r_max, double step,
                    const std::string& format, const std::string& out_path) {
  if (step <= 0.0 || r_min < 0.0 || r_max > 1.0 || r_min > r_max) {
    std::cerr << "error: need 0 <= r-min <= r-max <= 1 and step > 0\n";
    return kUsage;
  }
  struct Row {
    double r;
    bool is_r_hat;
  };
  std::vector<Row> rows;
  for (double r = r_min; r <= r_max + 1e-12; r += step)
    rows.push_back({std::min(r, 1.0), false});
  const double rh = noisyot::r_hat();
  if (rh >= r_min && rh <= r_max) {
    auto it = rows.begin();
    while (it != rows.end() && it->r < rh) ++it;
    rows.insert(it, {rh, true});
  }

  std::ostringstream csv;
  json rows_json = json::array();
  csv << "r,t_closed,t_numeric,argmin_alpha,flag\n";
  for (const Row& row : rows) {
    const double closed = noisyot::t_closed_form(row.r);
    const noisyot::NumericMin num = noisyot::t_numeric(row.r);
    if (format == "csv") {
      csv << fmt9(row.r) << ',' << fmt9(closed) << ',' << fmt9(num.min_bits)
          << ',' << fmt9(num.argmin_alpha) << ','
          << (row.is_r_hat ? "r_hat" : "") << "\n";
    } else {
      rows_json.push_back({{"r", num9(row.r)},
                           {"t_closed", num9(closed)},
                           {"t_numeric", num9(num.min_bits)},
                           {"argmin_alpha", num9(num.argmin_alpha)},
                           {"flag", row.is_r_hat ? "r_hat" : ""}});
    }
  }
  emit(format == "csv" ? csv.str() : rows_json.dump(2) + "\n", out_path);
  return kOk;
}

int cmd_bounds(long long n, double eps, double r, double t, bool have_r,
               bool have_t, const std::string& mode, double p_error,
               double p_erase, const std::string& format,
               const std::string& out_path) {
  if (format == "csv") {
    std::cerr << "error: bounds reports are JSON only\n";
    return kUsage;
  }
  if (have_r == have_t) {
    std::cerr << "error: give exactly one of --r or --t\n";
    return kUsage;
  }
  const double t_used = have_t ? t : noisyot::t_closed_form(r);
  noisyot::SecurityReport rep;
  if (mode == "ideal")
    rep = noisyot::ell_ideal(n, eps, t_used);
  else if (mode == "robust")
    rep = noisyot::ell_robust(n, eps, t_used, p_error, p_erase);
  else {
    std::cerr << "error: mode must be ideal or robust\n";
    return kUsage;
  }

  json out = {{"params",
               {{"n", n},
                {"eps", num9(eps)},
                {"t", num9(t_used)},
                {"mode", mode}}},
              {"ell_max", rep.ell_max},
              {"delta", num9(rep.delta)},
              {"secure", rep.secure},
              {"margin_bits", num9(rep.margin_bits)},
              {"regime", noisyot::to_string(rep.regime)}};
  if (have_r) out["params"]["r"] = num9(r);
  if (mode == "robust") {
    out["params"]["p_error"] = num9(p_error);
    out["params"]["p_erase"] = num9(p_erase);
  }
  emit(out.dump(2) + "\n", out_path);
  return rep.secure ? kOk : kInfeasible;
}

int cmd_simulate(const noisyot::ProtocolParams& params,
                 const std::string& strategy_name, double alpha, double ax,
                 double az, int trials, bool exact,
                 const std::string& transcript_path,
                 const std::string& format, const std::string& out_path) {
  if (format == "csv") {
    std::cerr << "error: simulation reports are JSON only\n";
    return kUsage;
  }
  if (exact && (params.n > 8 || params.ell > 2)) {
    std::cerr << "error: exact mode needs n <= 8 and ell <= 2\n";
    return kUsage;
  }
  noisyot::AttackStrategy strategy =
      noisyot::AttackStrategy::from_name(strategy_name, params.storage_r);
  if (strategy.kind == noisyot::AttackStrategy::Kind::partial)
    strategy = noisyot::AttackStrategy::partial(alpha, ax, az,
                                                params.storage_r);

  const noisyot::SimReport rep =
      noisyot::simulate(params, strategy, trials, exact);

  json out = {{"params",
               {{"n", params.n},
                {"ell", params.ell},
                {"eps", num9(params.eps)},
                {"p_error", num9(params.channel.p_error)},
                {"p_erase", num9(params.channel.p_erase)},
                {"r", num9(params.storage_r)},
                {"strategy", strategy.name()},
                {"trials", trials},
                {"seed", params.rng_seed}}},
              {"correctness_rate", num9(rep.correctness_rate)},
              {"abort_rate", num9(rep.abort_rate)},
              {"per_bit_guess_analytic", num9(rep.per_bit_guess_analytic)},
              {"per_bit_guess_empirical", num9(rep.per_bit_guess_empirical)},
              {"ell_certified", rep.ell_certified}};
  if (rep.has_exact)
    out["d_estimate"] = {{"mean", num9(rep.exact.mean)},
                         {"ci95", num9(rep.exact.ci95)},
                         {"samples", rep.exact.samples}};

  if (!transcript_path.empty()) {
    const noisyot::RunResult run =
        noisyot::run_honest(params, noisyot::QubitBasis::computational);
    std::ofstream tf(transcript_path);
    if (!tf)
      throw noisyot::parameter_error("cannot open " + transcript_path);
    tf << run.transcript.to_jsonl();
  }
  emit(out.dump(2) + "\n", out_path);
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<noisyot::verify::CheckResult> checks;
  const bool all = suite == "all";
  if (all || suite == "entropy") {
    auto part = noisyot::verify::run_entropy_suite(seed);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  if (all || suite == "appendixB") {
    auto part = noisyot::verify::run_appendix_b_suite(seed);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  if (all || suite == "pa") {
    auto part = noisyot::verify::run_pa_suite(seed);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  if (checks.empty()) {
    std::cerr << "error: unknown suite " << suite
              << " (expected entropy|appendixB|pa|all)\n";
    return kUsage;
  }
  std::ostringstream report;
  bool ok = true;
  for (const auto& check : checks) {
    report << (check.passed ? "PASS" : "FAIL") << "  " << check.name
           << " (worst=" << fmt9(check.worst) << ")\n";
    if (!check.passed) {
      ok = false;
      report << "      counterexample: " << check.counterexample << "\n";
    }
  }
  report << (ok ? "all checks passed\n" : "suite failed\n");
  emit(report.str(), out_path);
  return ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-2 oblivious transfer in the noisy-quantum-storage model"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  app.add_option("--seed", seed, "rng seed")->capture_default_str();
  app.add_option("--out", out_path, "write output to this file");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* unc = app.add_subcommand("uncertainty",
                                 "entropy-bound curve under depolarizing noise");
  unc->fallthrough();
  double r_min = 0.0, r_max = 1.0, step = 0.05;
  unc->add_option("--r-min", r_min, "lowest storage-noise parameter")
      ->capture_default_str();
  unc->add_option("--r-max", r_max, "highest storage-noise parameter")
      ->capture_default_str();
  unc->add_option("--step", step, "grid step")->capture_default_str();

  auto* bnd = app.add_subcommand("bounds", "extractable-length calculators");
  bnd->fallthrough();
  long long n = 1000000;
  double eps = 1e-3, r_opt = 0.0, t_opt = 0.0, p_error = 0.0, p_erase = 0.0;
  std::string mode = "ideal";
  bnd->add_option("--n", n, "number of qubits")->required();
  bnd->add_option("--eps", eps, "security error")->required();
  CLI::Option* r_flag = bnd->add_option("--r", r_opt, "storage noise r");
  CLI::Option* t_flag = bnd->add_option("--t", t_opt, "uncertainty bound t");
  bnd->add_option("--mode", mode, "ideal or robust")->capture_default_str();
  bnd->add_option("--p-error", p_error, "QBER");
  bnd->add_option("--p-erase", p_erase, "erasure probability");

  auto* sim = app.add_subcommand("simulate", "protocol Monte Carlo");
  sim->fallthrough();
  noisyot::ProtocolParams params;
  params.n = 1024;
  params.ell = 8;
  params.eps = 0.1;
  std::string strategy = "store";
  double alpha = 0.0, axis_x = 0.0, axis_z = 1.0;
  int trials = 100;
  bool exact = false;
  std::string transcript_path;
  sim->add_option("--n", params.n, "qubits per run")->capture_default_str();
  sim->add_option("--ell", params.ell, "output string length")
      ->capture_default_str();
  sim->add_option("--eps", params.eps, "abort-window parameter")
      ->capture_default_str();
  sim->add_option("--p-error", params.channel.p_error, "QBER")
      ->capture_default_str();
  sim->add_option("--p-erase", params.channel.p_erase, "erasure probability")
      ->capture_default_str();
  sim->add_option("--r", params.storage_r, "storage noise r")
      ->capture_default_str();
  sim->add_option("--strategy", strategy,
                  "store|measure-computational|measure-hadamard|breidbart|partial")
      ->capture_default_str();
  sim->add_option("--alpha", alpha, "partial-measurement alpha");
  sim->add_option("--axis-x", axis_x, "partial-measurement Bloch x");
  sim->add_option("--axis-z", axis_z, "partial-measurement Bloch z");
  sim->add_option("--trials", trials, "Monte Carlo trials")
      ->capture_default_str();
  sim->add_flag("--exact", exact, "exact small-n non-uniformity");
  sim->add_option("--transcript", transcript_path,
                  "write one honest run's transcript (JSON lines)");

  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  ver->fallthrough();
  std::string suite = "all";
  ver->add_option("suite", suite, "entropy|appendixB|pa|all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (unc->parsed())
      return cmd_uncertainty(r_min, r_max, step,
                             format.empty() ? "csv" : format, out_path);
    if (bnd->parsed())
      return cmd_bounds(n, eps, r_opt, t_opt, r_flag->count() > 0,
                        t_flag->count() > 0, mode, p_error, p_erase,
                        format.empty() ? "json" : format, out_path);
    if (sim->parsed()) {
      params.rng_seed = seed;
      return cmd_simulate(params, strategy, alpha, axis_x, axis_z, trials,
                          exact, transcript_path,
                          format.empty() ? "json" : format, out_path);
    }
    if (ver->parsed()) return cmd_verify(suite, seed ? seed : 20260811, out_path);
  } catch (const noisyot::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const noisyot::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const noisyot::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
