// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pathwl/complex.hpp"
#include "pathwl/network.hpp"
#include "pathwl/refine.hpp"

namespace pathwl::cli {

enum class OutputFormat { text, csv, json };

/// Invalid flag or config value; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings shared by all subcommands. Every field has a config-file key of
/// the same spelling as its flag (without the leading dashes).
struct Settings {
  BoundaryMode boundary_mode = BoundaryMode::incidence;
  std::size_t member_cap = 50'000'000;
  int hidden_dim = 16;
  int embed_dim = 32;
  double epsilon = 0.01;
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  OutputFormat output_format = OutputFormat::text;
  std::vector<int> layers{4};
  UpdateRule rule = UpdateRule::reduced;
  std::size_t family_member_budget = 10'000'000;
  bool use_coboundary = true;
  FeatureAggregation feature_aggregation = FeatureAggregation::sum;
  BaseFeature base_feature = BaseFeature::ones;
};

/// Keys accepted in config files and as `--<key>` flags.
const std::vector<std::string> &setting_keys();

/// Applies one key/value pair; throws ConfigError on an unknown key or a
/// value that does not validate.
void apply_setting(Settings &s, std::string_view key, std::string_view value);

/// Parses `key = value` lines with '#' comments. Throws ConfigError naming
/// the line on syntax errors, unknown keys or bad values.
std::map<std::string, std::string> read_config_file(const std::filesystem::path &path);
std::map<std::string, std::string> parse_config_text(std::string_view text,
                                                     std::string_view source = "config");

/// "0-9", "1,5,7" or a mix such as "0-3,8".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);
/// "3,4,5,6" or a range "3-6".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace pathwl::cli
