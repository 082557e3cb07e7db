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

// File formats.
//
//   Instance JSON   {"elements":[..],"weights":[..],"clauses":[[..],..]}
//   Potential JSON  {"beta":[..],"mu":[..],"psi":"identity"|"quadratic",
//                    "weights":[..]}
//   Graph text      first line "s t", then one "u v" edge per line
//   Ratio CSV       capacity,opt,alg,ratio  (k,opt,alg,ratio for flows)
//   Breakpoint CSV  capacity,optimum_value
//
// Numbers are written with 17 significant digits; infinity is written `inf`.

#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "inckap/algscale.hpp"
#include "inckap/errors.hpp"
#include "inckap/evaluator.hpp"
#include "inckap/flows.hpp"
#include "inckap/objective.hpp"
#include "inckap/optimum.hpp"

namespace inckap::io {

using nlohmann::json;

inline std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::string number_list(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(values[i]);
  }
  return out + "]";
}

inline std::string string_list(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += json(values[i]).dump();
  }
  return out + "]";
}

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

inline json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline std::string instance_to_json(const Instance& instance) {
  std::string out = "{\"elements\":" + detail::string_list(instance.element_ids());
  out += ",\"weights\":" + detail::number_list(instance.weights());
  out += ",\"clauses\":[";
  for (std::size_t i = 0; i < instance.num_clauses(); ++i) {
    if (i > 0) out += ",";
    out += detail::number_list(instance.clauses()[i]);
  }
  return out + "]}";
}

inline Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  auto weights = detail::required<std::vector<double>>(doc, "weights");
  auto clauses = detail::required<std::vector<std::vector<double>>>(doc, "clauses");
  std::vector<std::string> ids;
  if (doc.contains("elements")) ids = detail::required<std::vector<std::string>>(doc, "elements");
  return Instance(std::move(ids), std::move(weights), std::move(clauses));
}

inline Instance read_instance(std::istream& in) {
  return instance_from_json(detail::parse_json(in));
}

inline PotentialInstance potential_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("potential instance must be a JSON object");
  PotentialInstance p;
  p.beta = detail::required<std::vector<double>>(doc, "beta");
  p.mu = detail::required<std::vector<double>>(doc, "mu");
  const auto psi = detail::required<std::string>(doc, "psi");
  if (psi == "identity") {
    p.psi = PotentialLoss::kIdentity;
  } else if (psi == "quadratic") {
    p.psi = PotentialLoss::kSignedQuadratic;
  } else {
    throw InputError("psi must be \"identity\" or \"quadratic\"");
  }
  if (doc.contains("weights")) {
    p.weights = detail::required<std::vector<double>>(doc, "weights");
  } else {
    p.weights.assign(p.beta.size(), 1.0);
  }
  return p;
}

inline PotentialInstance read_potential(std::istream& in) {
  return potential_from_json(detail::parse_json(in));
}

inline std::string potential_to_json(const PotentialInstance& p) {
  std::string out = "{\"beta\":" + detail::number_list(p.beta);
  out += ",\"mu\":" + detail::number_list(p.mu);
  out += ",\"psi\":";
  out += p.psi == PotentialLoss::kIdentity ? "\"identity\"" : "\"quadratic\"";
  out += ",\"weights\":" + detail::number_list(p.weights);
  return out + "}";
}

// Blank lines and lines starting with '#' are ignored.
inline FlowInstance read_graph(std::istream& in) {
  std::string line;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a) || a[0] == '#') continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw InputError("graph line " + std::to_string(line_no) +
                       ": expected exactly two names");
    }
    pairs.emplace_back(a, b);
  }
  if (pairs.empty()) throw InputError("graph file needs an 's t' header line");
  const auto [s, t] = pairs.front();
  pairs.erase(pairs.begin());
  return FlowInstance::from_named_edges(s, t, pairs);
}

inline std::string graph_to_text(const FlowInstance& g) {
  std::string out = g.vertices()[g.source()] + " " + g.vertices()[g.sink()] + "\n";
  for (const FlowEdge& e : g.edges()) {
    out += g.vertices()[e.from] + " " + g.vertices()[e.to] + "\n";
  }
  return out;
}

inline void write_ratio_csv(std::ostream& out, const RatioCurve& curve,
                            const char* first_column = "capacity") {
  out << first_column << ",opt,alg,ratio\n";
  for (const RatioRow& row : curve.rows) {
    out << format_number(row.capacity) << ',' << format_number(row.opt) << ','
        << format_number(row.alg) << ',' << format_number(row.ratio) << '\n';
  }
}

inline void write_breakpoint_csv(std::ostream& out, const BreakpointTable& table) {
  out << "capacity,optimum_value\n";
  for (const Breakpoint& row : table.rows()) {
    out << format_number(row.capacity) << ',' << format_number(row.value) << '\n';
  }
}

inline std::string labels(const Instance& instance, const std::vector<ElementIndex>& set) {
  std::vector<std::string> names;
  for (ElementIndex e : set) names.push_back(instance.element_ids()[e]);
  return detail::string_list(names);
}

// {"order":[..],"phases":[{"capacity":..,"target":[..]},..]} with element
// labels.
inline std::string ordering_to_json(const Instance& instance,
                                    const IncrementalOrdering& ordering,
                                    const PhaseSchedule& schedule) {
  std::string out = "{\"order\":" + labels(instance, ordering.order);
  out += ",\"phases\":[";
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i > 0) out += ",";
    out += "{\"capacity\":" + format_number(schedule.phases[i].capacity);
    out += ",\"target\":" + labels(instance, schedule.phases[i].target) + "}";
  }
  return out + "]}";
}

}  // namespace inckap::io
