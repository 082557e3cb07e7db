// Copyright 2026 The inckap Authors.
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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input or validation error, 3 capability limit.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inckap/inckap.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;

enum class LogLevel { kOff, kInfo, kDebug };

LogLevel log_level() {
  const char* env = std::getenv("INCKAP_LOG");
  const std::string value = env == nullptr ? "off" : env;
  if (value == "info") return LogLevel::kInfo;
  if (value == "debug") return LogLevel::kDebug;
  return LogLevel::kOff;
}

void log(LogLevel level, const std::string& message) {
  static const LogLevel threshold = log_level();
  if (threshold == LogLevel::kOff || level > threshold) return;
  std::cerr << (level == LogLevel::kDebug ? "[debug] " : "[info] ") << message << '\n';
}

struct RunConfig {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format;  // empty selects the subcommand default
  std::size_t limit_m = inckap::kMaxEnumerationElements;
};

std::ifstream open_input(const std::string& path) {
  if (path.empty()) throw inckap::InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw inckap::InputError("cannot read '" + path + "'");
  return in;
}

// Writes to --output when given, standard output otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw inckap::InputError("cannot write '" + cfg.output + "'");
  out << text;
}

void check_limit(const RunConfig& cfg, std::size_t m, std::size_t capability) {
  if (cfg.limit_m > capability) {
    throw inckap::InputError("--limit-m may not exceed " + std::to_string(capability));
  }
  if (m > cfg.limit_m) {
    throw inckap::CapabilityError("instance has " + std::to_string(m) +
                                  " elements, limit is " + std::to_string(cfg.limit_m));
  }
}

inckap::Instance load_valid_instance(const RunConfig& cfg) {
  auto in = open_input(cfg.input);
  inckap::Instance instance = inckap::io::read_instance(in);
  const inckap::ValidationReport report = inckap::validate(instance);
  if (!report.ok) {
    std::string message = "invalid instance:";
    for (const std::string& v : report.violations) message += "\n  " + v;
    throw inckap::InputError(message);
  }
  check_limit(cfg, instance.size(), inckap::kMaxEnumerationElements);
  log(LogLevel::kInfo, "loaded " + std::to_string(instance.size()) + " elements, " +
                           std::to_string(instance.num_clauses()) + " clauses");
  return instance;
}

int cmd_solve(const RunConfig& cfg) {
  using inckap::io::format_number;
  const inckap::Instance instance = load_valid_instance(cfg);
  const double big_m = inckap::validate(instance).max_singleton;
  const inckap::BreakpointTable table(instance);
  const inckap::PhaseSchedule schedule = inckap::phase_schedule(instance, table);
  const inckap::IncrementalOrdering ordering = inckap::build_ordering(instance, schedule);
  const inckap::RatioCurve curve = inckap::competitive_ratio(instance, table, ordering.order);
  const double rho = inckap::compute_constants().rho(big_m);
  log(LogLevel::kDebug, std::to_string(table.size()) + " breakpoints, " +
                            std::to_string(schedule.size()) + " phases");
  if (cfg.format == "csv") {
    std::ostringstream out;
    inckap::io::write_ratio_csv(out, curve);
    emit(cfg, out.str());
    return 0;
  }
  std::string json = inckap::io::ordering_to_json(instance, ordering, schedule);
  json.pop_back();
  json += ",\"ratio\":" + format_number(curve.ratio);
  json += ",\"M\":" + format_number(big_m);
  json += ",\"rho\":" + format_number(rho);
  json += std::string(",\"within_bound\":") +
          (curve.ratio <= rho + 1e-6 ? "true" : "false") + "}\n";
  emit(cfg, json);
  return 0;
}

int cmd_curve(const RunConfig& cfg, bool breakpoints_only) {
  const inckap::Instance instance = load_valid_instance(cfg);
  const inckap::BreakpointTable table(instance);
  std::ostringstream out;
  if (breakpoints_only) {
    inckap::io::write_breakpoint_csv(out, table);
  } else {
    const inckap::IncrementalOrdering ordering =
        inckap::build_ordering(instance, inckap::phase_schedule(instance, table));
    inckap::io::write_ratio_csv(out, inckap::competitive_ratio(instance, table, ordering.order));
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_best(RunConfig cfg) {
  if (cfg.limit_m > inckap::kMaxOrderingSearchElements) {
    cfg.limit_m = inckap::kMaxOrderingSearchElements;
  }
  const inckap::Instance instance = load_valid_instance(cfg);
  const auto start = std::chrono::steady_clock::now();
  const inckap::BestOrdering best = inckap::best_ordering(instance, cfg.threads);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  log(LogLevel::kInfo, "ordering search took " + inckap::io::format_number(seconds) + " s");
  emit(cfg, "{\"order\":" + inckap::io::labels(instance, best.order) +
                ",\"ratio\":" + inckap::io::format_number(best.ratio) + "}\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const inckap::verify::Options options{cfg.seed, cfg.threads};
  const auto results = inckap::verify::run_suite(suite, options);
  std::string report;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    report += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name + ": " + r.measured +
              " (expected " + r.expected + ")\n";
  }
  emit(cfg, report);
  return all ? 0 : kExitVerifyFailed;
}

int cmd_flow(const RunConfig& cfg) {
  auto in = open_input(cfg.input);
  const inckap::FlowInstance graph = inckap::io::read_graph(in);
  if (graph.num_edges() > inckap::kMaxFlowRatioEdges) {
    throw inckap::CapabilityError("flow certification is limited to " +
                                  std::to_string(inckap::kMaxFlowRatioEdges) + " edges");
  }
  const inckap::IncrementTrace trace = inckap::quickest_increment(graph);
  const inckap::RatioCurve curve = inckap::flow_ratio(graph, trace.order);
  log(LogLevel::kInfo, "maximum flow " + std::to_string(trace.max_flow) + " in " +
                           std::to_string(trace.batches.size()) + " batches");
  std::ostringstream out;
  if (cfg.format == "json") {
    out << "{\"order\":[";
    for (std::size_t i = 0; i < trace.order.size(); ++i) {
      out << (i > 0 ? "," : "") << '"' << graph.edge_label(trace.order[i]) << '"';
    }
    out << "],\"batch_sizes\":[";
    for (std::size_t i = 0; i < trace.batch_sizes.size(); ++i) {
      out << (i > 0 ? "," : "") << trace.batch_sizes[i];
    }
    out << "],\"min_edges\":[";
    for (std::size_t i = 0; i < trace.min_edges.size(); ++i) {
      out << (i > 0 ? "," : "") << trace.min_edges[i];
    }
    out << "],\"ratio\":" << inckap::io::format_number(curve.ratio) << "}\n";
  } else {
    inckap::io::write_ratio_csv(out, curve, "k");
  }
  emit(cfg, out.str());
  return 0;
}

struct GenConfig {
  std::string kind;
  std::size_t m = 6;
  std::size_t k = 2;
  double max_value = 4.0;
  std::size_t universe = 6;
  std::size_t vertices = 6;
  std::size_t edges = 9;
  std::string psi = "identity";
};

int cmd_gen(const RunConfig& cfg, const GenConfig& gen) {
  std::string text;
  if (gen.kind == "m-bound") {
    text = inckap::io::instance_to_json(inckap::gen_m_bound(gen.max_value));
  } else if (gen.kind == "sqrt6") {
    text = inckap::io::instance_to_json(inckap::gen_sqrt6());
  } else if (gen.kind == "random") {
    text = inckap::io::instance_to_json(
        inckap::gen_random_xos(gen.m, gen.k, gen.max_value, cfg.seed));
  } else if (gen.kind == "coverage") {
    text = inckap::io::instance_to_json(
        inckap::gen_coverage(gen.universe, gen.m, cfg.seed).instance);
  } else if (gen.kind == "potential") {
    if (gen.psi != "identity" && gen.psi != "quadratic") {
      throw inckap::InputError("--psi must be identity or quadratic");
    }
    const auto psi = gen.psi == "identity" ? inckap::PotentialLoss::kIdentity
                                           : inckap::PotentialLoss::kSignedQuadratic;
    const auto p = inckap::gen_random_potential(gen.m, gen.max_value, psi, cfg.seed);
    text = cfg.format == "potential" ? inckap::io::potential_to_json(p)
                                     : inckap::io::instance_to_json(inckap::potential_to_xos(p));
  } else if (gen.kind == "graph") {
    emit(cfg, inckap::io::graph_to_text(
                  inckap::gen_random_graph(gen.vertices, gen.edges, true, cfg.seed)));
    return 0;
  } else if (gen.kind == "blocking") {
    emit(cfg, inckap::io::graph_to_text(inckap::blocking_path_graph()));
    return 0;
  } else {
    throw inckap::InputError("unknown generator '" + gen.kind + "'");
  }
  emit(cfg, text + "\n");
  return 0;
}

// A potential instance given as input is compiled to the XOS JSON form.
int cmd_compile(const RunConfig& cfg) {
  auto in = open_input(cfg.input);
  const inckap::PotentialInstance p = inckap::io::read_potential(in);
  emit(cfg, inckap::io::instance_to_json(inckap::potential_to_xos(p)) + "\n");
  return 0;
}

void add_io(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "input file");
  cmd->add_option("-o,--output", cfg.output, "output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental knapsack orderings for XOS objectives"};
  app.require_subcommand(1);
  RunConfig cfg;
  GenConfig gen;
  std::string suite;
  bool breakpoints_only = false;

  app.add_option("--seed", cfg.seed, "base seed for all randomness")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for exhaustive search")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "potential"}))
      ->capture_default_str();
  app.add_option("--limit-m", cfg.limit_m, "largest instance accepted by exhaustive modes")
      ->capture_default_str();
  app.fallthrough();

  auto* solve = app.add_subcommand("solve", "scaling ordering, phases and ratio");
  add_io(solve, cfg);
  auto* curve = app.add_subcommand("curve", "ratio curve CSV of the scaling ordering");
  add_io(curve, cfg);
  curve->add_flag("--breakpoints", breakpoints_only, "write the f* breakpoint table instead");
  auto* best = app.add_subcommand("best", "exhaustive best ordering (m <= 10)");
  add_io(best, cfg);
  auto* verify = app.add_subcommand("verify", "run a certification suite");
  verify->add_option("suite", suite, "paperbounds, lemmas or flows")
      ->required()
      ->check(CLI::IsMember({"paperbounds", "lemmas", "flows"}));
  verify->add_option("-o,--output", cfg.output, "report file");
  auto* flow = app.add_subcommand("flow", "Quickest-Increment order and ratio curve");
  add_io(flow, cfg);
  auto* compile = app.add_subcommand("compile", "potential instance to XOS JSON");
  add_io(compile, cfg);
  auto* generate = app.add_subcommand("gen", "write a generated instance");
  generate->add_option("kind", gen.kind,
                       "m-bound, sqrt6, random, coverage, potential, graph or blocking")
      ->required();
  generate->add_option("-o,--output", cfg.output, "output file");
  generate->add_option("--m", gen.m, "elements, sets or edges")->capture_default_str();
  generate->add_option("--k", gen.k, "clauses")->capture_default_str();
  generate->add_option("--max-value", gen.max_value, "M")->capture_default_str();
  generate->add_option("--universe", gen.universe, "coverage items")->capture_default_str();
  generate->add_option("--vertices", gen.vertices, "graph vertices")->capture_default_str();
  generate->add_option("--edges", gen.edges, "graph edges")->capture_default_str();
  generate->add_option("--psi", gen.psi, "identity or quadratic")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (curve->parsed()) return cmd_curve(cfg, breakpoints_only);
    if (best->parsed()) return cmd_best(cfg);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (flow->parsed()) return cmd_flow(cfg);
    if (compile->parsed()) return cmd_compile(cfg);
    return cmd_gen(cfg, gen);
  } catch (const inckap::CapabilityError& e) {
    std::cerr << "capability limit: " << e.what() << '\n';
    return kExitCapability;
  } catch (const inckap::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const inckap::InfeasibleError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}
