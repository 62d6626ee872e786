// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pathwl/complex.hpp"
#include "pathwl/graph.hpp"

namespace pathwl {

using Color = std::uint32_t;

/// Signature used by each refinement round.
///   reduced: (c_sigma, {{c_B}}, {{(c_tau, c_delta) : upper}})
///   full:    reduced plus {{c_C}} and {{(c_tau, c_delta) : lower}}
enum class UpdateRule : std::uint8_t { reduced, full };

std::string_view to_string(UpdateRule rule);
UpdateRule parse_update_rule(std::string_view text);

/// Sorted (color, count) pairs over all members of one complex.
struct ColorHistogram {
  std::vector<std::pair<Color, std::size_t>> bins;

  std::size_t total() const;
  friend bool operator==(const ColorHistogram &, const ColorHistogram &) = default;
};

/// True iff the histograms differ as multisets. Only meaningful for
/// histograms produced by the same refinement run (shared dictionary).
bool distinguishes(const ColorHistogram &a, const ColorHistogram &b);

struct RefineOptions {
  UpdateRule rule = UpdateRule::reduced;
  /// Defaults to the total member count of all refined complexes.
  std::optional<std::size_t> max_rounds;
  /// Worker threads for the signature phase; results do not depend on it.
  unsigned threads = 1;
};

/// Joint color refinement of several complexes of one kind.
///
/// Every member starts with color 0. Each round builds every member's
/// signature from the previous round and maps it through a dictionary shared
/// by all complexes; fresh colors are handed out in first-seen order while
/// scanning complexes and member ids in ascending order.
class JointRefinement {
 public:
  /// Throws InputError when the complexes are not all of the same kind.
  JointRefinement(std::vector<const HigherOrderComplex *> complexes,
                  RefineOptions options);

  /// Runs one round. Returns true if the number of distinct colors grew.
  bool step();
  /// Steps until the joint color count stops growing or max_rounds is hit.
  void run();

  /// Productive plus final confirming rounds executed so far.
  std::size_t rounds() const noexcept { return rounds_; }
  bool stable() const noexcept { return stable_; }
  std::size_t color_count() const noexcept { return color_count_; }

  std::span<const Color> colors(std::size_t complex_index) const {
    return colors_[complex_index];
  }
  ColorHistogram histogram(std::size_t complex_index) const;

 private:
  void signature(std::size_t ci, MemberId id, std::vector<Color> &out,
                 std::vector<std::pair<Color, Color>> &pairs) const;

  std::vector<const HigherOrderComplex *> complexes_;
  RefineOptions options_;
  std::vector<std::vector<Color>> colors_;
  std::size_t rounds_ = 0;
  std::size_t color_count_ = 1;
  std::size_t max_rounds_ = 0;
  bool stable_ = false;
};

struct PairResult {
  ColorHistogram x;
  ColorHistogram y;
  std::size_t rounds = 0;

  bool distinguished() const { return distinguishes(x, y); }
};

/// Refines two complexes jointly to a stable partition. Throws InputError on
/// a kind mismatch.
PairResult refine_pair(const HigherOrderComplex &x, const HigherOrderComplex &y,
                       const RefineOptions &options = {});

/// Refines a whole collection at once and returns per-complex histograms.
/// Pairwise verdicts agree with refine_pair: colors are determined by the
/// unfolding of each member, and a partition that is stable on the union is
/// stable on every sub-collection.
std::vector<ColorHistogram> refine_jointly(
    std::span<const HigherOrderComplex *const> complexes,
    const RefineOptions &options = {}, std::size_t *rounds = nullptr);

/// Plain 1-WL on graphs with a shared dictionary.
PairResult wl1_refine_pair(const SimpleGraph &g1, const SimpleGraph &g2,
                           std::optional<std::size_t> max_rounds = std::nullopt);

/// 1-WL over a collection; histograms comparable across all graphs.
std::vector<ColorHistogram> wl1_refine_jointly(std::span<const SimpleGraph *const> graphs,
                                               std::size_t *rounds = nullptr);

}  // namespace pathwl
