// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathwl/srg_bench.hpp"

namespace pathwl {

/// One row per (report, layers, seed) with the header
/// family,method,max_dim,layers,seed,failure_rate,pairs,indistinguishable,lift_ms,forward_ms.
/// Deterministic methods leave `seed` empty and use layers 0; skipped or
/// errored cells produce no rows. `max_dim` holds max_ring for ring methods.
void write_csv(std::ostream &out, const std::vector<FailureReport> &reports);

/// JSON document described in docs/report-schema.md.
std::string reports_to_json(const std::vector<FailureReport> &reports,
                            const EnvironmentFingerprint &env);

/// Family x method matrix of mean failure rates for humans.
void write_text_matrix(std::ostream &out, const std::vector<FailureReport> &reports);

std::string timings_to_json(const std::vector<LiftTiming> &timings,
                            const EnvironmentFingerprint &env);
void write_timings_csv(std::ostream &out, const std::vector<LiftTiming> &timings);
void write_timings_text(std::ostream &out, const std::vector<LiftTiming> &timings,
                        const EnvironmentFingerprint &env);

/// Short label such as "pcn(dim=3)" or "cwn(ring=4)".
std::string method_label(const RunConfig &config);

}  // namespace pathwl
