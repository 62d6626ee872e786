// SPDX-License-Identifier: Apache-2.0
#include "pathwl/power_order.hpp"

#include "pathwl/lift.hpp"

namespace pathwl {

PowerOrderReport power_order_check(const std::vector<GraphPair> &corpus,
                                   const PowerOrderConfig &config) {
  PowerOrderReport report;
  report.config = config;
  report.swl_checked = config.pwl_dim >= config.swl_dim;
  report.cwl_checked = config.pwl_dim >= config.cwl_ring - 1;
  const RefineOptions opts{config.rule, std::nullopt, 1};

  for (const auto &pair : corpus) {
    PairVerdicts v;
    v.label = pair.label;
    v.wl = wl1_refine_pair(pair.a, pair.b).distinguished();
    v.swl = refine_pair(lift_clique_complex(pair.a, config.swl_dim, config.lift),
                        lift_clique_complex(pair.b, config.swl_dim, config.lift), opts)
                .distinguished();
    v.cwl = refine_pair(lift_ring_complex(pair.a, config.cwl_ring, config.lift),
                        lift_ring_complex(pair.b, config.cwl_ring, config.lift), opts)
                .distinguished();
    v.pwl = refine_pair(lift_path_complex(pair.a, config.pwl_dim, config.lift),
                        lift_path_complex(pair.b, config.pwl_dim, config.lift), opts)
                .distinguished();

    if (v.wl && !v.pwl) report.violations.push_back(v.label + ": WL separates, PWL does not");
    if (report.swl_checked && v.swl && !v.pwl)
      report.violations.push_back(v.label + ": SWL separates, PWL does not");
    if (report.cwl_checked && v.cwl && !v.pwl)
      report.violations.push_back(v.label + ": CWL separates, PWL does not");
    if (!v.wl && v.pwl) ++report.strict_over_wl;
    report.pairs.push_back(std::move(v));
  }
  return report;
}

}  // namespace pathwl
