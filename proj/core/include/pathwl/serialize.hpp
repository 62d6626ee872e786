// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pathwl/complex.hpp"

namespace pathwl {

/// Writes the PCX v1 text format:
///
///   PCX v1 kind=<path|simplex|cell> n=<n> maxdim=<P>
///   dim <p> count <m>
///   <id>: v0 v1 ... vp
///   ...
///   boundaries
///   <id>: b1 b2 ...
///
/// Ids are global member ids in ascending order. The source graph's edge set
/// is implied by the dimension-1 members, so it is only recoverable when
/// maxdim >= 1.
void write_complex(std::ostream &out, const HigherOrderComplex &c);
std::string serialize_complex(const HigherOrderComplex &c);

/// Parses PCX v1. Throws ParseError (with a 1-based line number) on a version
/// mismatch, malformed lines, non-canonical carriers or dangling boundary ids.
HigherOrderComplex read_complex(std::istream &in);
HigherOrderComplex deserialize_complex(std::string_view text);

void save_complex(const std::filesystem::path &path, const HigherOrderComplex &c);
HigherOrderComplex load_complex(const std::filesystem::path &path);

}  // namespace pathwl
