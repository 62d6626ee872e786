// SPDX-License-Identifier: Apache-2.0
#include "pathwl/srg_bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "detail/parallel.hpp"
#include "pathwl/errors.hpp"
#include "pathwl/lift.hpp"

namespace pathwl {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ComplexKind kind_for(Method m) {
  switch (m) {
    case Method::pwl:
    case Method::pcn: return ComplexKind::path;
    case Method::swl: return ComplexKind::simplex;
    case Method::cwl:
    case Method::cwn: return ComplexKind::cell;
    case Method::wl1: break;
  }
  throw InputError("method has no lifting");
}

std::size_t parse_size(std::string_view tok, std::size_t line, const char *what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("manifest line " + std::to_string(line) + ": bad " + what + " '" +
                         std::string(tok) + "'",
                     line);
  return v;
}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Lifts every graph; stops early (returns nullopt) once the running member
// total passes `budget`.
std::optional<LiftedFamily> lift_family(const Family &family, ComplexKind kind, int param,
                                        const LiftOptions &options, std::size_t budget,
                                        unsigned threads) {
  LiftedFamily out;
  out.complexes.resize(family.graphs.size());
  const auto t0 = Clock::now();
  std::atomic<std::size_t> total{0};
  std::atomic<bool> over{false};
  detail::parallel_for(family.graphs.size(), threads, [&](std::size_t i) {
    if (over) return;
    out.complexes[i] = lift(family.graphs[i], kind, param, options);
    if ((total += out.complexes[i].member_count()) > budget) over = true;
  });
  if (over) return std::nullopt;
  out.lift_ms = ms_since(t0);
  return out;
}

std::size_t indistinguishable_pairs(const std::vector<ColorHistogram> &h) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j) count += !distinguishes(h[i], h[j]);
  return count;
}

void run_deterministic(const Family &family, const RunConfig &cfg,
                       const LiftedFamily *lifted, FailureReport &rep) {
  SeedResult row;
  row.pairs = pair_count(family.graphs.size());
  std::vector<ColorHistogram> hist;
  if (cfg.method == Method::wl1) {
    std::vector<const SimpleGraph *> ptrs;
    for (const auto &g : family.graphs) ptrs.push_back(&g);
    const auto t0 = Clock::now();
    hist = wl1_refine_jointly(ptrs, &rep.refinement_rounds);
    row.forward_ms = ms_since(t0);
  } else {
    std::optional<LiftedFamily> own;
    if (!lifted) {
      own = lift_family(family, kind_for(cfg.method), cfg.lift_param(), cfg.lift,
                        cfg.family_member_budget, cfg.threads);
      lifted = own ? &*own : nullptr;
    }
    std::size_t total = 0;
    if (lifted)
      for (const auto &c : lifted->complexes) total += c.member_count();
    if (!lifted || total > cfg.family_member_budget) {
      rep.status = CellStatus::skipped;
      rep.diagnostic_code = "family-member-budget";
      rep.diagnostic = "lifted family exceeds the joint refinement budget of " +
                       std::to_string(cfg.family_member_budget) + " members";
      return;
    }
    row.lift_ms = lifted->lift_ms;
    std::vector<const HigherOrderComplex *> ptrs;
    for (const auto &c : lifted->complexes) ptrs.push_back(&c);
    const auto t0 = Clock::now();
    hist = refine_jointly(ptrs, {cfg.rule, std::nullopt, cfg.threads}, &rep.refinement_rounds);
    row.forward_ms = ms_since(t0);
  }
  row.indistinguishable = indistinguishable_pairs(hist);
  row.failure_rate = row.pairs == 0 ? 0.0 : double(row.indistinguishable) / double(row.pairs);
  rep.rows.push_back(row);
}

void run_network(const Family &family, const RunConfig &cfg, const LiftedFamily *lifted,
                 FailureReport &rep) {
  const int deepest = *std::max_element(cfg.layers.begin(), cfg.layers.end());
  const auto kind = kind_for(cfg.method);
  Architecture arch;
  arch.layers = deepest;
  arch.max_dim = kind == ComplexKind::cell ? 2 : cfg.max_dim;
  arch.hidden_dim = cfg.hidden_dim;
  arch.embed_dim = cfg.embed_dim;
  arch.use_coboundary = cfg.use_coboundary;

  std::vector<NetworkParams> params;
  for (auto seed : cfg.seeds) params.push_back(NetworkParams::make(seed, arch));

  const std::size_t n = family.graphs.size();
  const std::size_t S = cfg.seeds.size();
  // emb[graph][seed][depth index]
  std::vector<std::vector<std::vector<std::vector<double>>>> emb(n);
  std::vector<std::vector<double>> forward_ms(n, std::vector<double>(S, 0.0));
  std::vector<double> lift_ms(n, 0.0);

  detail::parallel_for(n, cfg.threads, [&](std::size_t i) {
    std::optional<HigherOrderComplex> own;
    const HigherOrderComplex *c = nullptr;
    if (lifted) {
      c = &lifted->complexes[i];
    } else {
      const auto t0 = Clock::now();
      own = lift(family.graphs[i], kind, cfg.lift_param(), cfg.lift);
      lift_ms[i] = ms_since(t0);
      c = &*own;
    }
    const auto features = init_features(*c, cfg.aggregation, cfg.base, cfg.hidden_dim);
    emb[i].resize(S);
    for (std::size_t s = 0; s < S; ++s) {
      const auto t0 = Clock::now();
      emb[i][s] = forward_depths(*c, features, params[s], cfg.layers);
      forward_ms[i][s] = ms_since(t0);
    }
  });

  double total_lift = lifted ? lifted->lift_ms : 0.0;
  if (!lifted)
    for (double t : lift_ms) total_lift += t;
  const std::size_t pairs = pair_count(n);
  for (std::size_t li = 0; li < cfg.layers.size(); ++li) {
    for (std::size_t s = 0; s < S; ++s) {
      SeedResult row;
      row.layers = cfg.layers[li];
      row.seed = cfg.seeds[s];
      row.pairs = pairs;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          row.indistinguishable +=
              embedding_distance(emb[a][s][li], emb[b][s][li]) < cfg.epsilon;
      row.failure_rate = pairs == 0 ? 0.0 : double(row.indistinguishable) / double(pairs);
      row.lift_ms = total_lift;
      for (std::size_t a = 0; a < n; ++a) row.forward_ms += forward_ms[a][s];
      rep.rows.push_back(row);
    }
  }
  std::sort(rep.rows.begin(), rep.rows.end(), [](const SeedResult &x, const SeedResult &y) {
    return std::tie(x.layers, x.seed) < std::tie(y.layers, y.seed);
  });
}

}  // namespace

std::vector<FamilySpec> read_manifest(const std::filesystem::path &manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open manifest " + manifest.string());
  std::vector<FamilySpec> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.size() != 6)
      throw ParseError("manifest line " + std::to_string(number) +
                           ": expected 'name path n k lambda mu'",
                       number);
    FamilySpec spec;
    spec.name = tok[0];
    spec.path = tok[1];
    if (spec.path.is_relative()) spec.path = manifest.parent_path() / spec.path;
    spec.params = {parse_size(tok[2], number, "n"), parse_size(tok[3], number, "k"),
                   parse_size(tok[4], number, "lambda"), parse_size(tok[5], number, "mu")};
    out.push_back(std::move(spec));
  }
  return out;
}

Family load_family(const FamilySpec &spec) {
  Family f;
  f.spec = spec;
  f.graphs = read_graph6_file(spec.path);
  for (std::size_t i = 0; i < f.graphs.size(); ++i) {
    if (!is_strongly_regular(f.graphs[i], spec.params)) {
      throw InputError(spec.path.string() + ":" + std::to_string(i + 1) + ": graph is not SR(" +
                       std::to_string(spec.params.n) + "," + std::to_string(spec.params.k) +
                       "," + std::to_string(spec.params.lambda) + "," +
                       std::to_string(spec.params.mu) + ")");
    }
  }
  return f;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::pwl: return "pwl";
    case Method::swl: return "swl";
    case Method::cwl: return "cwl";
    case Method::wl1: return "wl1";
    case Method::pcn: return "pcn";
    case Method::cwn: return "cwn";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::pwl, Method::swl, Method::cwl, Method::wl1, Method::pcn, Method::cwn})
    if (to_string(m) == text) return m;
  throw InputError("unknown method '" + std::string(text) + "'");
}

bool is_network_method(Method m) { return m == Method::pcn || m == Method::cwn; }

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::ok: return "ok";
    case CellStatus::skipped: return "skipped";
    case CellStatus::error: return "error";
  }
  return "?";
}

void RunConfig::validate() const {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (max_dim < 0) throw InputError("max-dim must be non-negative");
  if (max_ring < 3) throw InputError("max-ring must be at least 3");
  if (hidden_dim <= 0 || embed_dim <= 0) throw InputError("network widths must be positive");
  if (is_network_method(method)) {
    if (seeds.empty()) throw InputError("network methods need at least one seed");
    if (layers.empty()) throw InputError("network methods need at least one layer count");
    for (int l : layers)
      if (l < 0) throw InputError("layer counts must be non-negative");
  }
}

int RunConfig::lift_param() const {
  return method == Method::cwl || method == Method::cwn ? max_ring : max_dim;
}

const AggregateStats *FailureReport::aggregate(int layers) const {
  for (const auto &a : aggregates)
    if (a.layers == layers) return &a;
  return nullptr;
}

std::vector<AggregateStats> aggregate_rows(const std::vector<SeedResult> &rows) {
  std::map<int, std::vector<double>> by_layers;
  for (const auto &r : rows) by_layers[r.layers].push_back(r.failure_rate);
  std::vector<AggregateStats> out;
  for (const auto &[layers, rates] : by_layers) {
    AggregateStats a;
    a.layers = layers;
    a.samples = rates.size();
    double sum = 0.0;
    for (double r : rates) sum += r;
    a.mean = sum / double(rates.size());
    double var = 0.0;
    for (double r : rates) var += (r - a.mean) * (r - a.mean);
    a.std = std::sqrt(var / double(rates.size()));
    a.min = *std::min_element(rates.begin(), rates.end());
    a.max = *std::max_element(rates.begin(), rates.end());
    out.push_back(a);
  }
  return out;
}

FailureReport run_family(const Family &family, const RunConfig &config,
                         const LiftedFamily *lifted) {
  FailureReport rep;
  rep.family = family.spec.name;
  rep.graphs = family.graphs.size();
  rep.config = config;
  try {
    config.validate();
    if (lifted && lifted->complexes.size() != family.graphs.size())
      throw InputError("cached complexes do not match the family");
    if (is_network_method(config.method))
      run_network(family, config, lifted, rep);
    else
      run_deterministic(family, config, lifted, rep);
  } catch (const CapExceededError &e) {
    rep.status = CellStatus::skipped;
    rep.diagnostic_code = "member-cap";
    rep.diagnostic = e.what();
  } catch (const NumericError &e) {
    rep.status = CellStatus::error;
    rep.diagnostic_code = "numeric-error";
    rep.diagnostic = e.what();
  } catch (const Error &e) {
    rep.status = CellStatus::error;
    rep.diagnostic_code = "input-error";
    rep.diagnostic = e.what();
  } catch (const std::bad_alloc &) {
    rep.status = CellStatus::skipped;
    rep.diagnostic_code = "out-of-memory";
    rep.diagnostic = "allocation failed";
  }
  if (rep.status != CellStatus::ok) rep.rows.clear();
  rep.aggregates = aggregate_rows(rep.rows);
  return rep;
}

std::vector<FailureReport> sweep(const std::vector<FamilySpec> &families,
                                 const std::vector<RunConfig> &configs,
                                 const SweepOptions &options) {
  std::vector<FailureReport> out;
  for (const auto &spec : families) {
    std::optional<Family> family;
    std::string load_error;
    try {
      family = load_family(spec);
    } catch (const Error &e) {
      load_error = e.what();
    }
    // (kind, param, boundary mode, cap) -> lifted family, or nullopt when
    // lifting exceeded a budget or cap.
    std::map<std::tuple<int, int, int, std::size_t>, std::optional<LiftedFamily>> cache;
    for (const auto &cfg : configs) {
      if (!family) {
        FailureReport rep;
        rep.family = spec.name;
        rep.config = cfg;
        rep.status = CellStatus::error;
        rep.diagnostic_code = "load-error";
        rep.diagnostic = load_error;
        out.push_back(std::move(rep));
        continue;
      }
      const LiftedFamily *lifted = nullptr;
      if (options.cache_complexes && cfg.method != Method::wl1) {
        const auto key = std::make_tuple(static_cast<int>(kind_for(cfg.method)), cfg.lift_param(),
                                         static_cast<int>(cfg.lift.boundary_mode),
                                         cfg.lift.member_cap);
        auto it = cache.find(key);
        if (it == cache.end()) {
          std::optional<LiftedFamily> entry;
          try {
            entry = lift_family(*family, kind_for(cfg.method), cfg.lift_param(), cfg.lift,
                                cfg.family_member_budget, cfg.threads);
          } catch (const Error &) {
            // run_family repeats the lift and reports the failure.
          }
          it = cache.emplace(key, std::move(entry)).first;
        }
        if (it->second) lifted = &*it->second;
      }
      out.push_back(run_family(*family, cfg, lifted));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FailureReport &a, const FailureReport &b) {
    return std::make_tuple(a.family, static_cast<int>(a.config.method), a.config.lift_param()) <
           std::make_tuple(b.family, static_cast<int>(b.config.method), b.config.lift_param());
  });
  return out;
}

EnvironmentFingerprint environment_fingerprint(unsigned threads_used) {
  EnvironmentFingerprint fp;
  fp.cpu_model = "unknown";
  std::ifstream cpuinfo("/proc/cpuinfo");
  for (std::string line; std::getline(cpuinfo, line);) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        fp.cpu_model = line.substr(colon + 1);
        fp.cpu_model.erase(0, fp.cpu_model.find_first_not_of(' '));
      }
      break;
    }
  }
  fp.hardware_threads = std::thread::hardware_concurrency();
  fp.threads_used = threads_used;
  return fp;
}

LiftTiming time_lifting(const std::vector<SimpleGraph> &graphs, ComplexKind kind, int param,
                        const LiftOptions &options, std::size_t repeats) {
  if (repeats == 0) throw InputError("repeats must be at least 1");
  LiftTiming t;
  t.kind = kind;
  t.param = param;
  t.repeats = repeats;
  for (std::size_t r = 0; r < repeats; ++r) {
    std::vector<std::size_t> members;
    const auto t0 = Clock::now();
    for (const auto &g : graphs) {
      const auto c = lift(g, kind, param, options);
      const auto counts = c.counts();
      if (members.size() < counts.size()) members.resize(counts.size(), 0);
      for (std::size_t p = 0; p < counts.size(); ++p) members[p] += counts[p];
    }
    t.samples_ms.push_back(ms_since(t0));
    t.members = std::move(members);
  }
  double sum = 0.0;
  for (double s : t.samples_ms) sum += s;
  t.mean_ms = sum / double(repeats);
  double var = 0.0;
  for (double s : t.samples_ms) var += (s - t.mean_ms) * (s - t.mean_ms);
  t.std_ms = std::sqrt(var / double(repeats));
  return t;
}

}  // namespace pathwl
