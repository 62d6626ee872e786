// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathwl/complex.hpp"

namespace pathwl {

/// Dense row-major layer y = W x + b with W of shape (out, in).
struct DenseLayer {
  int in = 0;
  int out = 0;
  std::vector<double> weight;
  std::vector<double> bias;

  friend bool operator==(const DenseLayer &, const DenseLayer &) = default;
};

struct Architecture {
  int layers = 4;
  int max_dim = 3;
  int hidden_dim = 16;
  int embed_dim = 32;
  double eps_boundary = 0.0;
  double eps_upper = 0.0;
  /// Upper messages use MLP_M(h_tau || h_delta); when false the co-boundary
  /// feature is dropped and MLP_M sees h_tau only.
  bool use_coboundary = true;

  friend bool operator==(const Architecture &, const Architecture &) = default;
};

/// Weights for one (layer, dimension) block.
struct BlockParams {
  DenseLayer boundary;  // MLP_B
  DenseLayer upper;     // MLP_up
  DenseLayer message;   // MLP_M, input h_tau || h_delta
  DenseLayer update;    // MLP_UP, input m_B || m_up

  friend bool operator==(const BlockParams &, const BlockParams &) = default;
};

/// Frozen random weights of the message-passing network.
///
/// Every tensor is drawn from uniform[-a, a], a = sqrt(1 / fan_in), using a
/// mt19937_64 stream seeded from (seed, layer, dim, role) through splitmix64
/// and converted with the top 53 bits, so values are identical on every
/// platform. Because a block's stream does not depend on the total depth or
/// dimension, the first L layers of a deeper network equal an L-layer network
/// with the same seed; read-outs at several depths share one pass.
struct NetworkParams {
  std::uint64_t seed = 0;
  Architecture arch;
  std::vector<std::vector<BlockParams>> blocks;  // [layer][dim]
  std::vector<DenseLayer> pool;                  // [dim], d -> d
  DenseLayer proj_hidden;                        // d -> d
  DenseLayer proj_out;                           // d -> embed_dim

  static NetworkParams make(std::uint64_t seed, const Architecture &arch);

  friend bool operator==(const NetworkParams &, const NetworkParams &) = default;
};

enum class FeatureAggregation : std::uint8_t { sum, mean };
enum class BaseFeature : std::uint8_t { ones, degree };

/// Per-member feature rows of width `width`, indexed by member id.
struct FeatureState {
  int width = 0;
  std::vector<double> values;

  std::span<double> row(MemberId id) {
    return {values.data() + static_cast<std::size_t>(id) * width, static_cast<std::size_t>(width)};
  }
  std::span<const double> row(MemberId id) const {
    return {values.data() + static_cast<std::size_t>(id) * width, static_cast<std::size_t>(width)};
  }
};

/// Dimension 0 gets the base vector (all ones, or the vertex degree in every
/// slot); each higher member is the sum or mean of its boundary rows,
/// computed bottom-up. Members with an empty boundary above dimension 0 get
/// zeros.
FeatureState init_features(const HigherOrderComplex &c, FeatureAggregation mode,
                           BaseFeature base, int width);

/// Runs the network and returns one embedding per requested depth (each in
/// 0..arch.layers). Throws ShapeError if the parameters do not match the
/// complex or the features, and NumericError on a non-finite value.
std::vector<std::vector<double>> forward_depths(const HigherOrderComplex &c,
                                                const FeatureState &features,
                                                const NetworkParams &params,
                                                std::span<const int> depths);

/// Embedding after all arch.layers layers.
std::vector<double> forward(const HigherOrderComplex &c, const FeatureState &features,
                            const NetworkParams &params);

/// Euclidean distance. Throws ShapeError on a length mismatch.
double embedding_distance(std::span<const double> a, std::span<const double> b);

}  // namespace pathwl
