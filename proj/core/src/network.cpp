// SPDX-License-Identifier: Apache-2.0
#include "pathwl/network.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail/hash.hpp"
#include "pathwl/errors.hpp"

namespace pathwl {
namespace {

enum Role : std::uint64_t {
  kBoundary = 1,
  kUpper = 2,
  kMessage = 3,
  kUpdate = 4,
  kPool = 5,
  kProjHidden = 6,
  kProjOut = 7,
};

constexpr std::uint64_t kNoIndex = 0xffffffffull;

DenseLayer make_dense(std::uint64_t seed, std::uint64_t layer, std::uint64_t dim,
                      std::uint64_t role, int in, int out) {
  std::uint64_t s = detail::mix64(seed ^ 0x70617468776cull);
  s = detail::mix64(s ^ layer);
  s = detail::mix64(s ^ (dim << 8));
  s = detail::mix64(s ^ (role << 16));
  std::mt19937_64 gen(s);
  const double a = std::sqrt(1.0 / in);
  auto draw = [&] {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return a * (2.0 * u - 1.0);
  };
  DenseLayer d;
  d.in = in;
  d.out = out;
  d.weight.resize(static_cast<std::size_t>(in) * out);
  for (double &w : d.weight) w = draw();
  d.bias.resize(out);
  for (double &b : d.bias) b = draw();
  return d;
}

inline double elu(double x) { return x > 0.0 ? x : std::expm1(x); }

// y = W x (+ b), columns [col0, col0 + x.size()) of W.
void affine(const DenseLayer &L, std::span<const double> x, int col0, bool with_bias,
            double *y) {
  for (int o = 0; o < L.out; ++o) {
    const double *w = L.weight.data() + static_cast<std::size_t>(o) * L.in + col0;
    double acc = with_bias ? L.bias[o] : 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * x[i];
    y[o] = acc;
  }
}

// Pairwise (cascade) summation of rows [lo, hi) into out.
void pairwise_sum(const std::vector<double> &h, int width, std::size_t lo, std::size_t hi,
                  double *out) {
  std::fill(out, out + width, 0.0);
  if (hi - lo <= 8) {
    for (std::size_t r = lo; r < hi; ++r)
      for (int j = 0; j < width; ++j) out[j] += h[r * width + j];
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  std::vector<double> right(width);
  pairwise_sum(h, width, lo, mid, out);
  pairwise_sum(h, width, mid, hi, right.data());
  for (int j = 0; j < width; ++j) out[j] += right[j];
}

void check_finite(std::span<const double> v, int layer, int dim) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw NumericError("non-finite activation at layer " + std::to_string(layer) +
                             ", dimension " + std::to_string(dim),
                         layer, dim);
    }
  }
}

void check_shape(const DenseLayer &L, int in, int out, const char *what) {
  if (L.in != in || L.out != out ||
      L.weight.size() != static_cast<std::size_t>(in) * out ||
      L.bias.size() != static_cast<std::size_t>(out))
    throw ShapeError(std::string("parameter shape mismatch in ") + what);
}

}  // namespace

NetworkParams NetworkParams::make(std::uint64_t seed, const Architecture &arch) {
  if (arch.layers < 0 || arch.max_dim < 0 || arch.hidden_dim <= 0 || arch.embed_dim <= 0)
    throw ShapeError("architecture sizes must be positive");
  const int d = arch.hidden_dim;
  NetworkParams p;
  p.seed = seed;
  p.arch = arch;
  p.blocks.resize(arch.layers);
  for (int t = 0; t < arch.layers; ++t) {
    for (int dim = 0; dim <= arch.max_dim; ++dim) {
      BlockParams b;
      b.boundary = make_dense(seed, t, dim, kBoundary, d, d);
      b.upper = make_dense(seed, t, dim, kUpper, d, d);
      b.message = make_dense(seed, t, dim, kMessage, arch.use_coboundary ? 2 * d : d, d);
      b.update = make_dense(seed, t, dim, kUpdate, 2 * d, d);
      p.blocks[t].push_back(std::move(b));
    }
  }
  for (int dim = 0; dim <= arch.max_dim; ++dim)
    p.pool.push_back(make_dense(seed, kNoIndex, dim, kPool, d, d));
  p.proj_hidden = make_dense(seed, kNoIndex, kNoIndex, kProjHidden, d, d);
  p.proj_out = make_dense(seed, kNoIndex, kNoIndex, kProjOut, d, arch.embed_dim);
  return p;
}

FeatureState init_features(const HigherOrderComplex &c, FeatureAggregation mode,
                           BaseFeature base, int width) {
  if (width <= 0) throw ShapeError("feature width must be positive");
  FeatureState f;
  f.width = width;
  f.values.assign(c.member_count() * static_cast<std::size_t>(width), 0.0);
  for (int p = 0; p <= c.max_dim(); ++p) {
    for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
      auto row = f.row(id);
      if (p == 0) {
        const double v = base == BaseFeature::ones
                             ? 1.0
                             : static_cast<double>(c.source().degree(c.carrier(id)[0]));
        std::fill(row.begin(), row.end(), v);
        continue;
      }
      const auto bnd = c.boundary(id);
      for (MemberId b : bnd) {
        const auto src = f.row(b);
        for (int j = 0; j < width; ++j) row[j] += src[j];
      }
      if (mode == FeatureAggregation::mean && !bnd.empty())
        for (double &x : row) x /= static_cast<double>(bnd.size());
    }
  }
  return f;
}

std::vector<std::vector<double>> forward_depths(const HigherOrderComplex &c,
                                                const FeatureState &features,
                                                const NetworkParams &params,
                                                std::span<const int> depths) {
  const auto &arch = params.arch;
  const int d = arch.hidden_dim;
  if (arch.max_dim != c.max_dim())
    throw ShapeError("network built for max_dim " + std::to_string(arch.max_dim) +
                     " but complex has max_dim " + std::to_string(c.max_dim()));
  if (features.width != d ||
      features.values.size() != c.member_count() * static_cast<std::size_t>(d))
    throw ShapeError("feature rows do not match the hidden dimension or member count");
  if (static_cast<int>(params.blocks.size()) != arch.layers ||
      static_cast<int>(params.pool.size()) != arch.max_dim + 1)
    throw ShapeError("parameter block counts do not match the architecture");
  for (const auto &layer : params.blocks) {
    if (static_cast<int>(layer.size()) != arch.max_dim + 1)
      throw ShapeError("parameter block counts do not match the architecture");
    for (const auto &b : layer) {
      check_shape(b.boundary, d, d, "MLP_B");
      check_shape(b.upper, d, d, "MLP_up");
      check_shape(b.message, arch.use_coboundary ? 2 * d : d, d, "MLP_M");
      check_shape(b.update, 2 * d, d, "MLP_UP");
    }
  }
  for (const auto &pl : params.pool) check_shape(pl, d, d, "pooling");
  check_shape(params.proj_hidden, d, d, "MLP_proj");
  check_shape(params.proj_out, d, arch.embed_dim, "MLP_proj");
  int deepest = 0;
  for (int t : depths) {
    if (t < 0 || t > arch.layers) throw ShapeError("requested depth outside 0..layers");
    deepest = std::max(deepest, t);
  }

  for (int p = 0; p <= c.max_dim(); ++p)
    check_finite({features.values.data() + c.first_id(p) * d, c.count(p) * d}, 0, p);

  const std::size_t m = c.member_count();
  std::vector<double> h = features.values;
  std::vector<double> next(h.size());
  std::vector<double> tau_part(m * d);  // W_tau h_tau per member
  std::vector<double> delta_part(m * d);  // W_delta h_delta + b per member
  std::vector<double> acc(d), mb(d), mu(d), cat(2 * d), tmp(d);

  auto readout = [&]() {
    std::vector<double> r(d, 0.0), pooled(d), z(d);
    for (int p = 0; p <= c.max_dim(); ++p) {
      if (c.count(p) == 0) continue;
      pairwise_sum(h, d, c.first_id(p), c.end_id(p), pooled.data());
      affine(params.pool[p], pooled, 0, true, z.data());
      for (int j = 0; j < d; ++j) r[j] += elu(z[j]);
    }
    std::vector<double> hidden(d), out(arch.embed_dim);
    affine(params.proj_hidden, r, 0, true, hidden.data());
    for (double &x : hidden) x = elu(x);
    affine(params.proj_out, hidden, 0, true, out.data());
    check_finite(out, -1, -1);
    return out;
  };

  std::vector<std::vector<double>> results(depths.size());
  auto emit = [&](int t) {
    std::vector<double> e;
    for (std::size_t i = 0; i < depths.size(); ++i) {
      if (depths[i] != t) continue;
      if (e.empty()) e = readout();
      results[i] = e;
    }
  };
  emit(0);

  for (int t = 0; t < deepest; ++t) {
    const auto &blocks = params.blocks[t];
    // Precompute the two halves of MLP_M's pre-activation.
    for (int p = 0; p <= c.max_dim(); ++p) {
      const auto &msg = blocks[p].message;
      for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
        const std::span<const double> hs(h.data() + id * d, d);
        affine(msg, hs, 0, false, tau_part.data() + id * d);
      }
      if (p > 0 && arch.use_coboundary) {
        // Members of dim p act as co-boundaries for dim p-1.
        const auto &below = blocks[p - 1].message;
        for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
          const std::span<const double> hs(h.data() + id * d, d);
          affine(below, hs, d, true, delta_part.data() + id * d);
        }
      }
    }

    for (int p = 0; p <= c.max_dim(); ++p) {
      const auto &blk = blocks[p];
      const auto &msg_bias = blk.message.bias;
      for (MemberId id = c.first_id(p); id < c.end_id(p); ++id) {
        const double *hs = h.data() + id * d;
        // Boundary message.
        for (int j = 0; j < d; ++j) acc[j] = (1.0 + arch.eps_boundary) * hs[j];
        for (MemberId b : c.boundary(id))
          for (int j = 0; j < d; ++j) acc[j] += h[b * d + j];
        affine(blk.boundary, acc, 0, true, mb.data());
        for (double &x : mb) x = elu(x);
        // Upper-adjacency message.
        for (int j = 0; j < d; ++j) acc[j] = (1.0 + arch.eps_upper) * hs[j];
        c.for_each_upper(id, [&](MemberId tau, MemberId delta) {
          const double *a = tau_part.data() + tau * d;
          if (arch.use_coboundary) {
            const double *b = delta_part.data() + delta * d;
            for (int j = 0; j < d; ++j) acc[j] += elu(a[j] + b[j]);
          } else {
            for (int j = 0; j < d; ++j) acc[j] += elu(a[j] + msg_bias[j]);
          }
        });
        affine(blk.upper, acc, 0, true, mu.data());
        for (double &x : mu) x = elu(x);
        // Update.
        std::copy(mb.begin(), mb.end(), cat.begin());
        std::copy(mu.begin(), mu.end(), cat.begin() + d);
        double *out = next.data() + id * d;
        affine(blk.update, cat, 0, true, out);
        for (int j = 0; j < d; ++j) out[j] = elu(out[j]);
      }
      check_finite({next.data() + c.first_id(p) * d, c.count(p) * d}, t + 1, p);
    }
    std::swap(h, next);
    emit(t + 1);
  }
  return results;
}

std::vector<double> forward(const HigherOrderComplex &c, const FeatureState &features,
                            const NetworkParams &params) {
  const int depth[] = {params.arch.layers};
  return std::move(forward_depths(c, features, params, depth).front());
}

double embedding_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("embedding lengths differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

}  // namespace pathwl
