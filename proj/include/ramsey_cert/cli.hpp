#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/extractor.hpp"
#include "ramsey_cert/graph6.hpp"
#include "ramsey_cert/io.hpp"
#include "ramsey_cert/matching_case.hpp"
#include "ramsey_cert/oracle.hpp"
#include "ramsey_cert/path_ramsey.hpp"
#include "ramsey_cert/target.hpp"

// Command-line surface. Every command prints one JSON report to `out`;
// diagnostics go to `err`. Exit status: 0 witness found or verified, 1 no
// witness (Exhausted, counterexample, witness-free colouring), 2 usage error.

namespace ramsey::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoWitness = 1;
inline constexpr int kExitUsage = 2;
inline constexpr const char* kJobsEnv = "RAMSEY_CERT_JOBS";
inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

inline json witness_json(const Witness& w) {
  if (const auto* c = std::get_if<RedCycle>(&w)) return {{"type", "red_cycle"}, {"vertices", c->vertices}};
  return {{"type", "blue_copy"}, {"map", std::get<BlueCopy>(w).embedding.map}};
}

inline json coloring_json(const ColoredComplete& c) {
  return {{"order", c.order()}, {"red_graph6", emit_graph6(c.red())}};
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

inline ColoredComplete load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read colouring file '" + path + "'");
  return read_coloring(in);
}

/// Runs one command; args exclude the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey certificates: red C_k or blue H", "ramsey_cert"};
  app.require_subcommand(1);

  int k = 0;
  std::string target_text;
  std::string coloring_path;
  std::uint64_t m0 = 0;
  std::int64_t big_b = 0;
  int fallback_limit = 10;
  std::uint64_t seed = kDefaultSeed;
  bool no_guards = false;
  int m = 0;
  bool lower_bound = false;
  int order = 0;
  int min_order = 1;
  int max_order = 0;
  int max_pairs = 24;
  unsigned jobs = default_jobs();

  auto* extract = app.add_subcommand("extract", "extract a red C_k or blue H from a colouring");
  extract->add_option("--k", k, "cycle length (odd, >= 5)")->required();
  extract->add_option("--target", target_text, "H as graph6, edge list, or name")->required();
  extract->add_option("--coloring", coloring_path, "colouring file")->required();
  extract->add_option("--m0", m0, "base-case edge threshold");
  extract->add_option("--B", big_b, "additive constant");
  extract->add_option("--fallback-limit", fallback_limit, "orders up to this use brute force");
  extract->add_option("--seed", seed, "partition sampling seed");
  extract->add_flag("--no-density-guards", no_guards, "skip the density window check");

  auto* matching = app.add_subcommand("matching-case", "red C_k or blue mK_2");
  matching->add_option("--k", k)->required();
  matching->add_option("--m", m)->required();
  auto* source = matching->add_option("--coloring", coloring_path, "colouring file");
  matching->add_flag("--lower-bound", lower_bound, "use the extremal colouring of K_{N-1}")->excludes(source);

  auto* verify = app.add_subcommand("verify", "check every colouring of K_order exhaustively");
  verify->add_option("--k", k)->required();
  verify->add_option("--target", target_text)->required();
  verify->add_option("--order", order)->required();
  verify->add_option("--jobs", jobs, std::string("worker threads (default from ") + kJobsEnv + ")");
  verify->add_option("--max-pairs", max_pairs, "largest binomial(order, 2) enumerated");

  auto* bounds = app.add_subcommand("bounds", "numeric upper bounds for H");
  bounds->add_option("--k", k)->required();
  bounds->add_option("--target", target_text)->required();
  bounds->add_option("--B", big_b, "additive constant of the cycle bound");

  auto* ramsey = app.add_subcommand("ramsey-number", "exact R(C_k, H) by exhaustive search");
  ramsey->add_option("--k", k)->required();
  ramsey->add_option("--target", target_text)->required();
  ramsey->add_option("--max-order", max_order)->required();
  ramsey->add_option("--min-order", min_order);
  ramsey->add_option("--jobs", jobs);
  ramsey->add_option("--max-pairs", max_pairs);

  std::vector<std::string> argv_store{"ramsey_cert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  json report;
  report["validated"] = false;
  int status = kExitOk;

  auto finish = [&]() {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    report["timings"] = {{"total_ms", elapsed.count()}};
    out << report.dump(2) << '\n';
    return status;
  };

  try {
    if (extract->parsed()) {
      const TargetGraph h(parse_graph_spec(target_text));
      const ColoredComplete coloring = load_coloring(coloring_path);
      Config cfg = Config::desk(k);
      cfg.m0 = m0;
      cfg.B = big_b;
      cfg.fallback_limit = fallback_limit;
      cfg.seed = seed;
      cfg.density_guards = !no_guards;
      report["command"] = "extract";
      report["inputs"] = {{"k", k},           {"target", emit_graph6(h.graph())}, {"N", coloring.order()},
                          {"m0", m0},         {"B", big_b},                        {"fallback_limit", fallback_limit},
                          {"seed", seed},     {"density_guards", cfg.density_guards}};
      ExtractionTrace trace;
      const ExtractionResult r = extract_witness(coloring, cfg, h, &trace);
      if (const auto* w = std::get_if<Witness>(&r)) {
        report["witness"] = witness_json(*w);
        report["validated"] = check_witness(coloring, k, h.graph(), *w);
        if (!trace.events.empty()) report["stage"] = to_string(trace.events.back().stage);
        status = report["validated"].get<bool>() ? kExitOk : kExitNoWitness;
      } else {
        const auto& ex = std::get<Exhausted>(r);
        report["stage"] = to_string(ex.stage);
        report["exhausted"] = ex.check;
        status = kExitNoWitness;
      }
      return finish();
    }

    if (matching->parsed()) {
      report["command"] = "matching-case";
      report["inputs"] = {{"k", k}, {"m", m}, {"lower_bound", lower_bound}};
      const Graph h = matching_graph(m);
      if (lower_bound) {
        const ColoredComplete c = lower_bound_coloring(k, m);
        report["coloring"] = coloring_json(c);
        const auto w = brute_force_witness(c, k, h);
        if (w) {
          report["witness"] = witness_json(*w);
          report["validated"] = check_witness(c, k, h, *w);
          status = kExitOk;
        } else {
          report["witness_exists"] = false;
          report["result"] = "no witness exists";
          report["validated"] = true;
          status = kExitNoWitness;
        }
        return finish();
      }
      if (coloring_path.empty()) throw InvalidInput("matching-case needs --coloring or --lower-bound");
      const ColoredComplete c = load_coloring(coloring_path);
      report["inputs"]["N"] = c.order();
      const Witness w = matching_witness(c, k, m);
      report["witness"] = witness_json(w);
      report["validated"] = check_witness(c, k, h, w);
      status = report["validated"].get<bool>() ? kExitOk : kExitNoWitness;
      return finish();
    }

    if (verify->parsed()) {
      const Graph h = parse_graph_spec(target_text);
      report["command"] = "verify";
      report["inputs"] = {{"k", k}, {"target", emit_graph6(h)}, {"order", order}, {"jobs", jobs}};
      const VerifyResult r = exhaustive_verify(k, h, order, VerifyOptions{jobs, max_pairs});
      report["verified"] = r.verified;
      report["colorings"] = r.colorings;
      if (r.verified) {
        report["result"] = "verified over " + std::to_string(r.colorings) + " colourings";
        report["validated"] = true;
        status = kExitOk;
      } else {
        report["counterexample"] = coloring_json(*r.counterexample);
        report["counterexample"]["index"] = *r.counterexample_index;
        report["validated"] = !brute_force_witness(*r.counterexample, k, h, {order, kUnlimitedNodes}).has_value();
        status = kExitNoWitness;
      }
      return finish();
    }

    if (bounds->parsed()) {
      const TargetGraph h(parse_graph_spec(target_text));
      report["command"] = "bounds";
      report["inputs"] = {{"k", k}, {"target", emit_graph6(h.graph())}, {"B", big_b}};
      Config cfg = Config::desk(k);
      cfg.B = big_b;
      const auto mm = static_cast<std::int64_t>(h.m());
      const double dense = 3.0 * k * std::pow(static_cast<double>(h.n()), (k + 1.0) / (k - 1.0));
      report["target"] = {{"n", h.n()}, {"m", h.m()}, {"chi", h.chi()}};
      report["bounds"] = {{"complete_graph", dense},
                          {"path_chromatic", bound_chi(k, h.n(), h.chi())},
                          {"path_sqrt", bound_sqrt(k, h.n(), mm)},
                          {"cycle_target", ramsey_bound_target(cfg, mm)}};
      report["validated"] = true;
      return finish();
    }

    if (ramsey->parsed()) {
      const Graph h = parse_graph_spec(target_text);
      report["command"] = "ramsey-number";
      report["inputs"] = {{"k", k},
                          {"target", emit_graph6(h)},
                          {"min_order", min_order},
                          {"max_order", max_order},
                          {"jobs", jobs}};
      const RamseyResult r = ramsey_number_exact(k, h, min_order, max_order, VerifyOptions{jobs, max_pairs});
      report["value"] = r.value;
      bool checked = true;
      if (r.lower_certificate) {
        report["lower_certificate"] = coloring_json(*r.lower_certificate);
        checked = !brute_force_witness(*r.lower_certificate, k, h, {r.value, kUnlimitedNodes}).has_value();
      }
      report["validated"] = checked;
      return finish();
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "no command given\n";
  return kExitUsage;
}

}  // namespace ramsey::cli
