// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "detail/dictionary.hpp"
#include "pathwl/refine.hpp"

namespace pathwl {
namespace {

ColorHistogram histogram_of(const std::vector<Color> &colors) {
  std::vector<Color> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  ColorHistogram h;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    h.bins.emplace_back(sorted[i], j - i);
    i = j;
  }
  return h;
}

std::vector<ColorHistogram> run_wl1(std::span<const SimpleGraph *const> graphs,
                                    std::optional<std::size_t> max_rounds,
                                    std::size_t *rounds_out) {
  std::vector<std::vector<Color>> colors;
  std::size_t total = 0;
  for (const auto *g : graphs) {
    colors.emplace_back(g->order(), 0);
    total += g->order();
  }
  const std::size_t limit = max_rounds.value_or(total);
  std::size_t count = total == 0 ? 0 : 1;
  std::size_t rounds = 0;
  std::vector<Color> key;
  while (rounds < limit) {
    detail::SequenceDictionary dict;
    std::vector<std::vector<Color>> next(colors.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto &g = *graphs[gi];
      next[gi].resize(g.order());
      for (Vertex v = 0; v < g.order(); ++v) {
        key.assign(1, colors[gi][v]);
        for (Vertex w : g.neighbors(v)) key.push_back(colors[gi][w]);
        std::sort(key.begin() + 1, key.end());
        next[gi][v] = dict.intern(key);
      }
    }
    colors = std::move(next);
    ++rounds;
    const bool grew = dict.size() > count;
    count = dict.size();
    if (!grew) break;
  }
  if (rounds_out) *rounds_out = rounds;
  std::vector<ColorHistogram> out;
  for (const auto &c : colors) out.push_back(histogram_of(c));
  return out;
}

}  // namespace

PairResult wl1_refine_pair(const SimpleGraph &g1, const SimpleGraph &g2,
                           std::optional<std::size_t> max_rounds) {
  const SimpleGraph *graphs[] = {&g1, &g2};
  PairResult r;
  auto h = run_wl1(graphs, max_rounds, &r.rounds);
  r.x = std::move(h[0]);
  r.y = std::move(h[1]);
  return r;
}

std::vector<ColorHistogram> wl1_refine_jointly(std::span<const SimpleGraph *const> graphs,
                                               std::size_t *rounds) {
  return run_wl1(graphs, std::nullopt, rounds);
}

}  // namespace pathwl
