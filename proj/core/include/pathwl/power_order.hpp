// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pathwl/complex.hpp"
#include "pathwl/graph.hpp"
#include "pathwl/refine.hpp"

namespace pathwl {

struct GraphPair {
  std::string label;
  SimpleGraph a;
  SimpleGraph b;
};

struct PowerOrderConfig {
  int pwl_dim = 2;
  int swl_dim = 2;
  int cwl_ring = 3;
  UpdateRule rule = UpdateRule::reduced;
  LiftOptions lift;
};

struct PairVerdicts {
  std::string label;
  bool wl = false;
  bool swl = false;
  bool cwl = false;
  bool pwl = false;
};

struct PowerOrderReport {
  PowerOrderConfig config;
  std::vector<PairVerdicts> pairs;
  /// One line per ordering violation, e.g. "C6|2K3: SWL separates, PWL does not".
  std::vector<std::string> violations;
  /// Pairs 1-WL fails on but PWL separates.
  std::size_t strict_over_wl = 0;
  bool swl_checked = false;
  bool cwl_checked = false;

  bool ok() const { return violations.empty(); }
};

/// Runs 1-WL, SWL (clique lift), CWL (ring lift) and PWL (path lift) on
/// every pair and records where a baseline separates a pair PWL does not.
/// The SWL check is active when pwl_dim >= swl_dim and the CWL check when
/// pwl_dim >= cwl_ring - 1.
PowerOrderReport power_order_check(const std::vector<GraphPair> &corpus,
                                   const PowerOrderConfig &config = {});

}  // namespace pathwl
