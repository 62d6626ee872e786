// SPDX-License-Identifier: Apache-2.0
#include "pathwl/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace pathwl {
namespace {

using nlohmann::ordered_json;

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json env_json(const EnvironmentFingerprint &env) {
  return {{"cpu_model", env.cpu_model},
          {"hardware_threads", env.hardware_threads},
          {"threads_used", env.threads_used}};
}

}  // namespace

std::string method_label(const RunConfig &config) {
  std::string s(to_string(config.method));
  switch (config.method) {
    case Method::wl1: return s;
    case Method::cwl:
    case Method::cwn: return s + "(ring=" + std::to_string(config.max_ring) + ")";
    default: return s + "(dim=" + std::to_string(config.max_dim) + ")";
  }
}

void write_csv(std::ostream &out, const std::vector<FailureReport> &reports) {
  out << "family,method,max_dim,layers,seed,failure_rate,pairs,indistinguishable,lift_ms,"
         "forward_ms\n";
  for (const auto &rep : reports) {
    for (const auto &row : rep.rows) {
      out << csv_field(rep.family) << ',' << to_string(rep.config.method) << ','
          << rep.config.lift_param() << ',' << row.layers << ','
          << (row.seed ? std::to_string(*row.seed) : std::string()) << ','
          << fmt(row.failure_rate, 10) << ',' << row.pairs << ',' << row.indistinguishable
          << ',' << fmt(row.lift_ms) << ',' << fmt(row.forward_ms) << '\n';
    }
  }
}

std::string reports_to_json(const std::vector<FailureReport> &reports,
                            const EnvironmentFingerprint &env) {
  ordered_json doc;
  doc["format"] = "pathwl-failure-report";
  doc["version"] = 1;
  doc["environment"] = env_json(env);
  doc["reports"] = ordered_json::array();
  for (const auto &rep : reports) {
    const auto &c = rep.config;
    ordered_json r;
    r["family"] = rep.family;
    r["graphs"] = rep.graphs;
    r["method"] = to_string(c.method);
    r["label"] = method_label(c);
    r["status"] = to_string(rep.status);
    if (rep.status != CellStatus::ok) {
      r["diagnostic"] = {{"code", rep.diagnostic_code}, {"message", rep.diagnostic}};
    }
    ordered_json cfg = {{"max_dim", c.max_dim},
                        {"max_ring", c.max_ring},
                        {"boundary_mode", to_string(c.lift.boundary_mode)},
                        {"member_cap", c.lift.member_cap}};
    if (is_network_method(c.method)) {
      cfg["layers"] = c.layers;
      cfg["seeds"] = c.seeds;
      cfg["epsilon"] = c.epsilon;
      cfg["hidden_dim"] = c.hidden_dim;
      cfg["embed_dim"] = c.embed_dim;
      cfg["use_coboundary"] = c.use_coboundary;
      cfg["feature_aggregation"] = c.aggregation == FeatureAggregation::sum ? "sum" : "mean";
      cfg["base_feature"] = c.base == BaseFeature::ones ? "ones" : "degree";
    } else {
      cfg["update_rule"] = to_string(c.rule);
      r["refinement_rounds"] = rep.refinement_rounds;
    }
    r["config"] = cfg;
    r["rows"] = ordered_json::array();
    for (const auto &row : rep.rows) {
      ordered_json jr = {{"layers", row.layers}};
      jr["seed"] = row.seed ? ordered_json(*row.seed) : ordered_json(nullptr);
      jr["failure_rate"] = row.failure_rate;
      jr["pairs"] = row.pairs;
      jr["indistinguishable"] = row.indistinguishable;
      jr["lift_ms"] = row.lift_ms;
      jr["forward_ms"] = row.forward_ms;
      r["rows"].push_back(jr);
    }
    r["aggregates"] = ordered_json::array();
    for (const auto &a : rep.aggregates) {
      r["aggregates"].push_back({{"layers", a.layers},
                                 {"samples", a.samples},
                                 {"mean", a.mean},
                                 {"std", a.std},
                                 {"min", a.min},
                                 {"max", a.max}});
    }
    doc["reports"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

void write_text_matrix(std::ostream &out, const std::vector<FailureReport> &reports) {
  // Columns: method label plus layer count.
  std::vector<std::string> columns;
  std::vector<std::string> families;
  std::map<std::pair<std::string, std::string>, std::string> cells;
  auto add_column = [&](const std::string &c) {
    if (std::find(columns.begin(), columns.end(), c) == columns.end()) columns.push_back(c);
  };
  for (const auto &rep : reports) {
    if (std::find(families.begin(), families.end(), rep.family) == families.end())
      families.push_back(rep.family);
    const auto label = method_label(rep.config);
    if (rep.status != CellStatus::ok) {
      add_column(label);
      cells[{rep.family, label}] = std::string(to_string(rep.status)) + ":" + rep.diagnostic_code;
      continue;
    }
    for (const auto &a : rep.aggregates) {
      const auto col = is_network_method(rep.config.method)
                           ? label + " L=" + std::to_string(a.layers)
                           : label;
      add_column(col);
      std::string cell = fmt(a.mean);
      if (a.samples > 1) cell += " +/- " + fmt(a.std, 3);
      cells[{rep.family, col}] = cell;
    }
  }
  if (families.empty()) {
    out << "(no results)\n";
    return;
  }
  std::size_t w0 = 6;
  for (const auto &f : families) w0 = std::max(w0, f.size());
  std::vector<std::size_t> widths;
  for (const auto &c : columns) {
    std::size_t w = c.size();
    for (const auto &f : families) {
      auto it = cells.find({f, c});
      if (it != cells.end()) w = std::max(w, it->second.size());
    }
    widths.push_back(w);
  }
  out << std::left << std::setw(static_cast<int>(w0)) << "family";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << "  " << std::setw(static_cast<int>(widths[i])) << columns[i];
  out << '\n';
  for (const auto &f : families) {
    out << std::setw(static_cast<int>(w0)) << f;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      auto it = cells.find({f, columns[i]});
      out << "  " << std::setw(static_cast<int>(widths[i]))
          << (it == cells.end() ? std::string("-") : it->second);
    }
    out << '\n';
  }
  out << std::right;
}

std::string timings_to_json(const std::vector<LiftTiming> &timings,
                            const EnvironmentFingerprint &env) {
  ordered_json doc;
  doc["format"] = "pathwl-lift-timing";
  doc["version"] = 1;
  doc["environment"] = env_json(env);
  doc["timings"] = ordered_json::array();
  for (const auto &t : timings) {
    doc["timings"].push_back({{"kind", to_string(t.kind)},
                              {"param", t.param},
                              {"repeats", t.repeats},
                              {"mean_ms", t.mean_ms},
                              {"std_ms", t.std_ms},
                              {"samples_ms", t.samples_ms},
                              {"members", t.members}});
  }
  return doc.dump(2) + "\n";
}

void write_timings_csv(std::ostream &out, const std::vector<LiftTiming> &timings) {
  out << "kind,param,repeats,mean_ms,std_ms,members\n";
  for (const auto &t : timings) {
    std::size_t total = 0;
    for (auto m : t.members) total += m;
    out << to_string(t.kind) << ',' << t.param << ',' << t.repeats << ',' << fmt(t.mean_ms)
        << ',' << fmt(t.std_ms) << ',' << total << '\n';
  }
}

void write_timings_text(std::ostream &out, const std::vector<LiftTiming> &timings,
                        const EnvironmentFingerprint &env) {
  out << "cpu: " << env.cpu_model << " (" << env.hardware_threads << " hardware threads, "
      << env.threads_used << " used)\n";
  for (const auto &t : timings) {
    out << to_string(t.kind) << " param=" << t.param << " repeats=" << t.repeats
        << " mean=" << fmt(t.mean_ms) << " ms std=" << fmt(t.std_ms) << " ms members=";
    for (std::size_t p = 0; p < t.members.size(); ++p) out << (p ? " " : "") << t.members[p];
    out << '\n';
  }
}

}  // namespace pathwl
