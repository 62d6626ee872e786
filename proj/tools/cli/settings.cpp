// SPDX-License-Identifier: Apache-2.0
#include "settings.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "pathwl/errors.hpp"

namespace pathwl::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(text) + "'");
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string t(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (t.empty() || used != t.size() || !std::isfinite(v))
    throw ConfigError(std::string(key) + ": expected a real number, got '" + t + "'");
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const auto t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(t) + "'");
}

template <class T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  std::string_view rest = trim(text);
  if (rest.empty()) return out;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    const auto dash = item.find('-', 1);
    if (dash != std::string_view::npos) {
      const T lo = parse_number<T>(key, item.substr(0, dash));
      const T hi = parse_number<T>(key, item.substr(dash + 1));
      if (hi < lo) throw ConfigError(std::string(key) + ": empty range '" + std::string(item) + "'");
      if (hi - lo > 100000) throw ConfigError(std::string(key) + ": range too large");
      for (T v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_number<T>(key, item));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

}  // namespace

const std::vector<std::string> &setting_keys() {
  static const std::vector<std::string> keys = {
      "boundary-mode", "member-cap", "hidden-dim", "embed-dim", "epsilon",
      "seeds", "threads", "output-format", "layers", "rule",
      "family-member-budget", "use-coboundary", "feature-aggregation", "base-feature"};
  return keys;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  return parse_list<std::uint64_t>("seeds", text);
}

std::vector<int> parse_int_list(std::string_view text) { return parse_list<int>("layers", text); }

void apply_setting(Settings &s, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  const std::string k(key);
  try {
    if (key == "boundary-mode") {
      s.boundary_mode = parse_boundary_mode(value);
    } else if (key == "member-cap") {
      s.member_cap = parse_number<std::size_t>(key, value);
      if (s.member_cap == 0) throw ConfigError("member-cap must be positive");
    } else if (key == "hidden-dim") {
      s.hidden_dim = parse_number<int>(key, value);
      if (s.hidden_dim <= 0) throw ConfigError("hidden-dim must be positive");
    } else if (key == "embed-dim") {
      s.embed_dim = parse_number<int>(key, value);
      if (s.embed_dim <= 0) throw ConfigError("embed-dim must be positive");
    } else if (key == "epsilon") {
      s.epsilon = parse_double(key, value);
      if (!(s.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    } else if (key == "seeds") {
      s.seeds = parse_seed_list(value);
      if (s.seeds.empty()) throw ConfigError("seeds must not be empty");
    } else if (key == "threads") {
      s.threads = parse_number<unsigned>(key, value);
      if (s.threads == 0) s.threads = std::max(1u, std::thread::hardware_concurrency());
    } else if (key == "output-format") {
      if (value == "text") s.output_format = OutputFormat::text;
      else if (value == "csv") s.output_format = OutputFormat::csv;
      else if (value == "json") s.output_format = OutputFormat::json;
      else throw ConfigError("output-format must be text, csv or json");
    } else if (key == "layers") {
      s.layers = parse_int_list(value);
      if (s.layers.empty()) throw ConfigError("layers must not be empty");
      for (int l : s.layers)
        if (l < 0) throw ConfigError("layers must be non-negative");
    } else if (key == "rule") {
      s.rule = parse_update_rule(value);
    } else if (key == "family-member-budget") {
      s.family_member_budget = parse_number<std::size_t>(key, value);
    } else if (key == "use-coboundary") {
      s.use_coboundary = parse_bool(key, value);
    } else if (key == "feature-aggregation") {
      if (value == "sum") s.feature_aggregation = FeatureAggregation::sum;
      else if (value == "mean") s.feature_aggregation = FeatureAggregation::mean;
      else throw ConfigError("feature-aggregation must be sum or mean");
    } else if (key == "base-feature") {
      if (value == "ones") s.base_feature = BaseFeature::ones;
      else if (value == "degree") s.base_feature = BaseFeature::degree;
      else throw ConfigError("base-feature must be ones or degree");
    } else {
      throw ConfigError("unknown setting '" + k + "'");
    }
  } catch (const InputError &e) {
    throw ConfigError(k + ": " + e.what());
  }
}

std::map<std::string, std::string> parse_config_text(std::string_view text,
                                                     std::string_view source) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  Settings scratch;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    try {
      apply_setting(scratch, key, value);
    } catch (const ConfigError &e) {
      throw ConfigError(where + e.what());
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

}  // namespace pathwl::cli
