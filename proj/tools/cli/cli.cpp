// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pathwl/cyclic_family.hpp"
#include "pathwl/errors.hpp"
#include "pathwl/lift.hpp"
#include "pathwl/refine.hpp"
#include "pathwl/report.hpp"
#include "pathwl/serialize.hpp"
#include "pathwl/srg_bench.hpp"
#include "settings.hpp"

namespace pathwl::cli {
namespace {

using nlohmann::ordered_json;

std::vector<SimpleGraph> read_graphs(const std::string &path, const std::string &format) {
  const std::filesystem::path p(path);
  const auto ext = p.extension().string();
  const bool g6 = format == "graph6" || (format == "auto" && (ext == ".g6" || ext == ".graph6"));
  if (g6) return read_graph6_file(p);
  std::ifstream in(p);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return {parse_edge_list(buf.str())};
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what(), e.position());
  }
}

SimpleGraph read_one(const std::string &path, const std::string &format, std::size_t index) {
  auto graphs = read_graphs(path, format);
  if (index >= graphs.size())
    throw InputError(path + " has " + std::to_string(graphs.size()) + " graph(s); index " +
                     std::to_string(index) + " requested");
  return std::move(graphs[index]);
}

std::string join_counts(const std::vector<std::size_t> &counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) s += (i ? " " : "") + std::to_string(counts[i]);
  return s;
}

std::string path_name(std::span<const Vertex> seq) {
  bool wide = false;
  for (Vertex v : seq) wide = wide || v > 9;
  std::string s = "e";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(seq[i]);
  }
  return s;
}

LiftOptions lift_options(const Settings &s) { return {s.member_cap, s.boundary_mode}; }

struct Common {
  std::string config_path;
  std::map<std::string, std::string> flags;  // key -> raw value, only when given
  Settings settings;
};

// defaults < config file < flags
void resolve(Common &c) {
  if (!c.config_path.empty())
    for (const auto &[k, v] : read_config_file(c.config_path)) apply_setting(c.settings, k, v);
  for (const auto &[k, v] : c.flags) {
    try {
      apply_setting(c.settings, k, v);
    } catch (const ConfigError &e) {
      throw ConfigError(std::string("--") + e.what());
    }
  }
}

int cmd_lift(const Common &c, const std::string &input, const std::string &format,
             std::size_t index, const std::string &kind_name, int max_dim, int max_ring,
             const std::string &out_path, std::ostream &out) {
  const auto &s = c.settings;
  const auto kind = parse_complex_kind(kind_name);
  const int param = kind == ComplexKind::cell ? max_ring : max_dim;
  const auto g = read_one(input, format, index);
  const auto cx = lift(g, kind, param, lift_options(s));
  if (!out_path.empty()) save_complex(out_path, cx);
  const auto counts = cx.counts();
  switch (s.output_format) {
    case OutputFormat::text:
      out << "counts: " << join_counts(counts) << '\n';
      break;
    case OutputFormat::csv:
      out << "dim,count\n";
      for (std::size_t p = 0; p < counts.size(); ++p) out << p << ',' << counts[p] << '\n';
      break;
    case OutputFormat::json:
      out << ordered_json{{"kind", to_string(kind)},
                          {"param", param},
                          {"boundary_mode", to_string(s.boundary_mode)},
                          {"counts", counts},
                          {"members", cx.member_count()}}
                 .dump(2)
          << '\n';
      break;
  }
  return kOk;
}

int cmd_test(const Common &c, const std::vector<std::string> &inputs, const std::string &format,
             std::size_t index_a, std::size_t index_b, const std::string &method_name,
             int max_dim, int max_ring, bool dump, std::ostream &out) {
  const auto &s = c.settings;
  const auto method = parse_method(method_name);
  if (is_network_method(method))
    throw ConfigError("test runs deterministic methods (pwl, swl, cwl, wl1); use bench for " +
                      method_name);
  const auto a = read_one(inputs[0], format, index_a);
  const auto b = read_one(inputs[1], format, index_b);
  PairResult r;
  if (method == Method::wl1) {
    r = wl1_refine_pair(a, b);
  } else {
    const auto kind = method == Method::swl ? ComplexKind::simplex
                      : method == Method::cwl ? ComplexKind::cell
                                              : ComplexKind::path;
    const int param = kind == ComplexKind::cell ? max_ring : max_dim;
    const auto x = lift(a, kind, param, lift_options(s));
    const auto y = lift(b, kind, param, lift_options(s));
    r = refine_pair(x, y, {s.rule, std::nullopt, s.threads});
  }
  const bool d = r.distinguished();
  const char *verdict = d ? "DISTINGUISHED" : "NOT-DISTINGUISHED";
  auto hist_json = [](const ColorHistogram &h) {
    ordered_json j = ordered_json::array();
    for (auto [color, count] : h.bins) j.push_back({color, count});
    return j;
  };
  switch (s.output_format) {
    case OutputFormat::text:
      out << verdict << " rounds=" << r.rounds << '\n';
      if (dump) {
        for (const auto *h : {&r.x, &r.y}) {
          out << (h == &r.x ? "A:" : "B:");
          for (auto [color, count] : h->bins) out << ' ' << color << 'x' << count;
          out << '\n';
        }
      }
      break;
    case OutputFormat::csv:
      out << "method,verdict,rounds\n" << method_name << ',' << verdict << ',' << r.rounds << '\n';
      break;
    case OutputFormat::json: {
      ordered_json j = {{"method", method_name}, {"verdict", verdict}, {"rounds", r.rounds}};
      if (dump) j["histograms"] = {hist_json(r.x), hist_json(r.y)};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_bench(const Common &c, const std::string &manifest, const std::vector<std::string> &methods,
              int max_dim, int max_ring, const std::string &prefix, bool no_cache,
              std::ostream &out, std::ostream &err) {
  const auto &s = c.settings;
  const auto families = read_manifest(manifest);
  std::vector<RunConfig> configs;
  for (const auto &m : methods) {
    RunConfig cfg;
    cfg.method = parse_method(m);
    cfg.max_dim = max_dim;
    cfg.max_ring = max_ring;
    cfg.layers = s.layers;
    cfg.seeds = s.seeds;
    cfg.epsilon = s.epsilon;
    cfg.hidden_dim = s.hidden_dim;
    cfg.embed_dim = s.embed_dim;
    cfg.use_coboundary = s.use_coboundary;
    cfg.aggregation = s.feature_aggregation;
    cfg.base = s.base_feature;
    cfg.rule = s.rule;
    cfg.lift = lift_options(s);
    cfg.family_member_budget = s.family_member_budget;
    cfg.threads = s.threads;
    try {
      cfg.validate();
    } catch (const InputError &e) {
      throw ConfigError(e.what());
    }
    configs.push_back(cfg);
  }
  if (families.empty()) err << "warning: manifest lists no families\n";
  const auto reports = sweep(families, configs, {!no_cache});
  const auto env = environment_fingerprint(s.threads);

  if (!prefix.empty()) {
    std::ofstream csv(prefix + ".csv");
    std::ofstream json(prefix + ".json");
    if (!csv || !json) throw InputError("cannot write reports with prefix " + prefix);
    write_csv(csv, reports);
    json << reports_to_json(reports, env);
  }
  switch (s.output_format) {
    case OutputFormat::text: write_text_matrix(out, reports); break;
    case OutputFormat::csv: write_csv(out, reports); break;
    case OutputFormat::json: out << reports_to_json(reports, env); break;
  }
  std::size_t ok = 0, capped = 0;
  for (const auto &r : reports) {
    if (r.status == CellStatus::ok) ++ok;
    if (r.status != CellStatus::ok)
      err << "note: " << r.family << ' ' << method_label(r.config) << ": " << to_string(r.status)
          << " (" << r.diagnostic_code << ") " << r.diagnostic << '\n';
    if (r.diagnostic_code == "member-cap" || r.diagnostic_code == "family-member-budget") ++capped;
  }
  if (reports.empty() || ok > 0) return kOk;
  return capped == reports.size() ? kCap : kInput;
}

int cmd_families(const Common &c, const std::string &input, const std::string &format,
                 std::size_t index, int ring_size, std::ostream &out) {
  const auto &s = c.settings;
  const auto g = read_one(input, format, index);
  const auto cx = lift_ring_complex(g, ring_size, lift_options(s));
  std::vector<CyclicFamily> fams;
  for (MemberId id = cx.first_id(2); id < cx.end_id(2); ++id) fams.push_back(cyclic_families(cx, id));
  auto set_text = [](const std::vector<std::vector<Vertex>> &f) {
    std::string t = "{";
    for (std::size_t i = 0; i < f.size(); ++i) t += (i ? ", " : "") + path_name(f[i]);
    return t + "}";
  };
  switch (s.output_format) {
    case OutputFormat::text:
      if (fams.empty()) {
        out << "no rings\n";
        break;
      }
      for (const auto &f : fams) {
        out << "ring " << path_name(f.cell_seq) << '\n';
        for (int p = f.top_dim(); p >= 0; --p)
          out << "  F" << p << " = " << set_text(f.family(p)) << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "ring,p,path\n";
      for (const auto &f : fams)
        for (int p = f.top_dim(); p >= 0; --p)
          for (const auto &seq : f.family(p))
            out << path_name(f.cell_seq) << ',' << p << ',' << path_name(seq) << '\n';
      break;
    case OutputFormat::json: {
      ordered_json j = ordered_json::array();
      for (const auto &f : fams) {
        ordered_json fj = {{"ring", f.cell_seq}, {"families", ordered_json::object()}};
        for (int p = f.top_dim(); p >= 0; --p) fj["families"]["F" + std::to_string(p)] = f.family(p);
        j.push_back(fj);
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_time_lift(const Common &c, const std::vector<std::string> &inputs,
                  const std::string &format, const std::string &kind_name,
                  const std::string &params_text, std::size_t repeats, std::ostream &out,
                  std::ostream &err) {
  const auto &s = c.settings;
  const auto kind = parse_complex_kind(kind_name);
  std::vector<int> params;
  try {
    params = parse_int_list(params_text);
  } catch (const ConfigError &e) {
    throw ConfigError(std::string("--params: ") + e.what());
  }
  if (params.empty()) throw ConfigError("--params must not be empty");
  if (repeats == 0) throw ConfigError("--repeats must be at least 1");
  std::vector<SimpleGraph> graphs;
  for (const auto &in : inputs) {
    auto g = read_graphs(in, format);
    graphs.insert(graphs.end(), g.begin(), g.end());
  }
  std::sort(params.begin(), params.end());
  std::vector<LiftTiming> timings;
  for (int p : params) timings.push_back(time_lifting(graphs, kind, p, lift_options(s), repeats));
  // Sanity: a larger lifting parameter never yields fewer members.
  for (std::size_t i = 1; i < timings.size(); ++i) {
    std::size_t a = 0, b = 0;
    for (auto m : timings[i - 1].members) a += m;
    for (auto m : timings[i].members) b += m;
    if (b < a)
      err << "warning: param " << timings[i].param << " produced fewer members than "
          << timings[i - 1].param << '\n';
  }
  const auto env = environment_fingerprint(1);
  switch (s.output_format) {
    case OutputFormat::text: write_timings_text(out, timings, env); break;
    case OutputFormat::csv: write_timings_csv(out, timings); break;
    case OutputFormat::json: out << timings_to_json(timings, env); break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Path complexes, PWL refinement and SRG distinguishability benchmarks", "pathwl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "pathwl 0.1.0");

  Common common;
  app.add_option("--config", common.config_path, "key = value settings file")
      ->check(CLI::ExistingFile);
  std::map<std::string, std::string> raw;
  const std::map<std::string, std::string> help = {
      {"boundary-mode", "incidence | truncation (default incidence)"},
      {"member-cap", "maximum members per lifted complex (default 50000000)"},
      {"hidden-dim", "network hidden width (default 16)"},
      {"embed-dim", "final embedding length (default 32)"},
      {"epsilon", "distance threshold for network methods (default 0.01)"},
      {"seeds", "seed list such as 0-9 or 1,4,7 (default 0-9)"},
      {"threads", "worker threads, 0 = all cores (default: all cores)"},
      {"output-format", "text | csv | json (default text)"},
      {"layers", "network depths such as 3-6 (default 4)"},
      {"rule", "refinement signature: reduced | full (default reduced)"},
      {"family-member-budget", "joint refinement member budget per family (default 10000000)"},
      {"use-coboundary", "include co-boundary features in upper messages (default true)"},
      {"feature-aggregation", "sum | mean initial feature population (default sum)"},
      {"base-feature", "ones | degree vertex features (default ones)"},
  };
  std::map<std::string, CLI::Option *> setting_opts;
  for (const auto &key : setting_keys())
    setting_opts[key] = app.add_option("--" + key, raw[key], help.at(key));

  std::string format = "auto";
  app.add_option("--input-format", format, "graph file format: auto | graph6 | edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  // lift
  auto *lift_cmd = app.add_subcommand("lift", "lift a graph and write a PCX complex");
  std::string lift_input, lift_kind = "path", lift_out;
  int lift_dim = 2, lift_ring = 4;
  std::size_t lift_index = 0;
  lift_cmd->add_option("input", lift_input, "graph6 or edge-list file")->required();
  lift_cmd->add_option("--kind", lift_kind, "path | simplex | cell")
      ->check(CLI::IsMember({"path", "simplex", "cell"}));
  lift_cmd->add_option("--max-dim", lift_dim, "lifting dimension for path/simplex");
  lift_cmd->add_option("--max-ring", lift_ring, "largest ring for cell lifting");
  lift_cmd->add_option("--index", lift_index, "graph index inside a graph6 file");
  lift_cmd->add_option("-o,--out", lift_out, "write the complex in PCX v1 format");

  // test
  auto *test_cmd = app.add_subcommand("test", "refine two graphs and compare histograms");
  std::vector<std::string> test_inputs;
  std::string test_method = "pwl";
  int test_dim = 2, test_ring = 4;
  std::size_t test_ia = 0, test_ib = 0;
  bool test_dump = false;
  test_cmd->add_option("inputs", test_inputs, "two graph files")->required()->expected(2);
  test_cmd->add_option("--method", test_method, "pwl | swl | cwl | wl1");
  test_cmd->add_option("--max-dim", test_dim, "lifting dimension for pwl/swl");
  test_cmd->add_option("--max-ring", test_ring, "largest ring for cwl");
  test_cmd->add_option("--index-a", test_ia, "graph index in the first file");
  test_cmd->add_option("--index-b", test_ib, "graph index in the second file");
  test_cmd->add_flag("--dump-histograms", test_dump, "print the stable histograms");

  // bench
  auto *bench_cmd = app.add_subcommand("bench", "run the SRG failure-rate protocol");
  std::string bench_manifest, bench_prefix = "pathwl-bench";
  std::vector<std::string> bench_methods{"pcn"};
  int bench_dim = 3, bench_ring = 4;
  bool bench_no_cache = false;
  bench_cmd->add_option("manifest", bench_manifest, "family manifest file")->required();
  bench_cmd->add_option("--method", bench_methods, "pwl swl cwl wl1 pcn cwn")->delimiter(',');
  bench_cmd->add_option("--max-dim", bench_dim, "path/simplex lifting dimension");
  bench_cmd->add_option("--max-ring", bench_ring, "largest ring for cwl/cwn");
  bench_cmd->add_option("--report-prefix", bench_prefix,
                        "write <prefix>.csv and <prefix>.json (empty to skip)");
  bench_cmd->add_flag("--no-cache", bench_no_cache, "lift separately for every cell");

  // families
  auto *fam_cmd = app.add_subcommand("families", "print cyclic-shifting families of each ring");
  std::string fam_input;
  int fam_ring = 4;
  std::size_t fam_index = 0;
  fam_cmd->add_option("input", fam_input, "graph file")->required();
  fam_cmd->add_option("--ring-size", fam_ring, "largest ring size");
  fam_cmd->add_option("--index", fam_index, "graph index inside a graph6 file");

  // time-lift
  auto *time_cmd = app.add_subcommand("time-lift", "time liftings over a corpus");
  std::vector<std::string> time_inputs;
  std::string time_kind = "path", time_params = "2,3";
  std::size_t time_repeats = 10;
  time_cmd->add_option("inputs", time_inputs, "graph files")->required();
  time_cmd->add_option("--kind", time_kind, "path | simplex | cell")
      ->check(CLI::IsMember({"path", "simplex", "cell"}));
  time_cmd->add_option("--params", time_params, "max-dim (or max-ring) values, e.g. 2-6");
  time_cmd->add_option("--repeats", time_repeats, "repetitions per configuration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion &) {
    out << "pathwl 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  for (const auto &[key, opt] : setting_opts)
    if (opt->count() > 0) common.flags[key] = raw[key];

  try {
    resolve(common);
    if (*lift_cmd)
      return cmd_lift(common, lift_input, format, lift_index, lift_kind, lift_dim, lift_ring,
                      lift_out, out);
    if (*test_cmd)
      return cmd_test(common, test_inputs, format, test_ia, test_ib, test_method, test_dim,
                      test_ring, test_dump, out);
    if (*bench_cmd)
      return cmd_bench(common, bench_manifest, bench_methods, bench_dim, bench_ring, bench_prefix,
                       bench_no_cache, out, err);
    if (*fam_cmd) return cmd_families(common, fam_input, format, fam_index, fam_ring, out);
    if (*time_cmd)
      return cmd_time_lift(common, time_inputs, format, time_kind, time_params, time_repeats,
                           out, err);
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceededError &e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace pathwl::cli
