// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pathwl/graph.hpp"

namespace pathwl {

/// Formal integer combination of vertex sequences. Terms need not be allowed
/// or simple paths. Zero coefficients are never stored.
class SignedChain {
 public:
  using Term = std::vector<Vertex>;

  SignedChain() = default;
  SignedChain(std::initializer_list<std::pair<Term, std::int64_t>> terms);

  void add(const Term &seq, std::int64_t coeff);
  SignedChain &operator+=(const SignedChain &other);
  SignedChain operator-() const;
  friend SignedChain operator+(SignedChain a, const SignedChain &b) { return a += b; }
  friend SignedChain operator-(SignedChain a, const SignedChain &b) { return a += -b; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::int64_t coefficient(const Term &seq) const;
  const std::map<Term, std::int64_t> &terms() const noexcept { return terms_; }

  friend bool operator==(const SignedChain &, const SignedChain &) = default;

 private:
  std::map<Term, std::int64_t> terms_;
};

/// Single-term chain e_{seq}.
SignedChain elementary(std::span<const Vertex> seq);

/// d e_{i0..ip} = sum_q (-1)^q e_{i0..^iq..ip}. The boundary of a single
/// vertex is the empty chain. Throws InputError on an empty sequence.
SignedChain signed_boundary(std::span<const Vertex> seq);
SignedChain signed_boundary(const SignedChain &chain);

/// True when consecutive vertices of `seq` are adjacent and distinct.
bool is_allowed(std::span<const Vertex> seq, const SimpleGraph &g);

/// Checks whether the boundary of `chain` consists of allowed paths only.
/// Throws InputError if a term of `chain` itself is not allowed in `g`.
bool is_boundary_invariant(const SignedChain &chain, const SimpleGraph &g);

/// Human-readable form such as "e12 + e01 - e32 - e03"; multi-digit vertices
/// are comma-separated ("e10,11").
std::string to_string(const SignedChain &chain);

}  // namespace pathwl
