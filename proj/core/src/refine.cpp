// SPDX-License-Identifier: Apache-2.0
#include "pathwl/refine.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "detail/dictionary.hpp"
#include "pathwl/errors.hpp"

namespace pathwl {
namespace {

constexpr std::size_t kBlock = 1 << 14;

}  // namespace

std::string_view to_string(UpdateRule rule) {
  return rule == UpdateRule::reduced ? "reduced" : "full";
}

UpdateRule parse_update_rule(std::string_view text) {
  if (text == "reduced") return UpdateRule::reduced;
  if (text == "full") return UpdateRule::full;
  throw InputError("unknown update rule '" + std::string(text) + "'");
}

std::size_t ColorHistogram::total() const {
  std::size_t t = 0;
  for (const auto &[c, n] : bins) t += n;
  return t;
}

bool distinguishes(const ColorHistogram &a, const ColorHistogram &b) { return a != b; }

JointRefinement::JointRefinement(std::vector<const HigherOrderComplex *> complexes,
                                 RefineOptions options)
    : complexes_(std::move(complexes)), options_(options) {
  std::size_t total = 0;
  for (const auto *c : complexes_) {
    if (c->kind() != complexes_.front()->kind())
      throw InputError("cannot refine complexes of different kinds together");
    colors_.emplace_back(c->member_count(), 0);
    total += c->member_count();
  }
  color_count_ = total == 0 ? 0 : 1;
  max_rounds_ = options_.max_rounds.value_or(total);
  if (options_.threads == 0) options_.threads = 1;
}

void JointRefinement::signature(std::size_t ci, MemberId id, std::vector<Color> &out,
                                std::vector<std::pair<Color, Color>> &pairs) const {
  const auto &c = *complexes_[ci];
  const auto &col = colors_[ci];
  out.push_back(col[id]);

  auto push_set = [&](std::span<const MemberId> ids) {
    out.push_back(static_cast<Color>(ids.size()));
    const std::size_t from = out.size();
    for (MemberId b : ids) out.push_back(col[b]);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(from), out.end());
  };
  auto push_pairs = [&]() {
    std::sort(pairs.begin(), pairs.end());
    out.push_back(static_cast<Color>(pairs.size()));
    for (auto [a, b] : pairs) {
      out.push_back(a);
      out.push_back(b);
    }
  };

  push_set(c.boundary(id));
  pairs.clear();
  c.for_each_upper(id, [&](MemberId tau, MemberId delta) {
    pairs.emplace_back(col[tau], col[delta]);
  });
  push_pairs();
  if (options_.rule == UpdateRule::full) {
    push_set(c.coboundary(id));
    pairs.clear();
    c.for_each_lower(id, [&](MemberId tau, MemberId delta) {
      pairs.emplace_back(col[tau], col[delta]);
    });
    push_pairs();
  }
}

bool JointRefinement::step() {
  detail::SequenceDictionary dict;
  std::vector<std::vector<Color>> next(colors_.size());
  const unsigned threads = options_.threads;

  struct Buffer {
    std::vector<Color> arena;
    std::vector<std::size_t> offsets;
    std::vector<std::pair<Color, Color>> pairs;
  };
  std::vector<Buffer> buffers(threads);

  for (std::size_t ci = 0; ci < complexes_.size(); ++ci) {
    const std::size_t m = complexes_[ci]->member_count();
    next[ci].resize(m);
    for (std::size_t block = 0; block < m; block += kBlock) {
      const std::size_t end = std::min(m, block + kBlock);
      // Phase 1: signatures, split into contiguous slices per worker.
      auto build = [&](unsigned w) {
        auto &buf = buffers[w];
        buf.arena.clear();
        buf.offsets.assign(1, 0);
        const std::size_t len = end - block;
        const std::size_t lo = block + len * w / threads;
        const std::size_t hi = block + len * (w + 1) / threads;
        for (std::size_t id = lo; id < hi; ++id) {
          signature(ci, static_cast<MemberId>(id), buf.arena, buf.pairs);
          buf.offsets.push_back(buf.arena.size());
        }
      };
      if (threads == 1) {
        build(0);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(build, w);
      }
      // Phase 2: ordered relabel.
      std::size_t id = block;
      for (const auto &buf : buffers) {
        for (std::size_t i = 0; i + 1 < buf.offsets.size(); ++i) {
          const std::span<const Color> key(buf.arena.data() + buf.offsets[i],
                                           buf.offsets[i + 1] - buf.offsets[i]);
          next[ci][id++] = dict.intern(key);
        }
      }
    }
  }

  colors_ = std::move(next);
  ++rounds_;
  const bool grew = dict.size() > color_count_;
  color_count_ = dict.size();
  if (!grew) stable_ = true;
  return grew;
}

void JointRefinement::run() {
  while (!stable_ && rounds_ < max_rounds_) step();
}

ColorHistogram JointRefinement::histogram(std::size_t complex_index) const {
  std::vector<Color> sorted(colors_[complex_index].begin(), colors_[complex_index].end());
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

PairResult refine_pair(const HigherOrderComplex &x, const HigherOrderComplex &y,
                       const RefineOptions &options) {
  JointRefinement r({&x, &y}, options);
  r.run();
  return {r.histogram(0), r.histogram(1), r.rounds()};
}

std::vector<ColorHistogram> refine_jointly(
    std::span<const HigherOrderComplex *const> complexes, const RefineOptions &options,
    std::size_t *rounds) {
  JointRefinement r({complexes.begin(), complexes.end()}, options);
  r.run();
  std::vector<ColorHistogram> out;
  for (std::size_t i = 0; i < complexes.size(); ++i) out.push_back(r.histogram(i));
  if (rounds) *rounds = r.rounds();
  return out;
}

}  // namespace pathwl
