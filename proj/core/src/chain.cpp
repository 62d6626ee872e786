// SPDX-License-Identifier: Apache-2.0
#include "pathwl/chain.hpp"

#include "pathwl/errors.hpp"

namespace pathwl {

SignedChain::SignedChain(std::initializer_list<std::pair<Term, std::int64_t>> terms) {
  for (const auto &[seq, coeff] : terms) add(seq, coeff);
}

void SignedChain::add(const Term &seq, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(seq, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SignedChain &SignedChain::operator+=(const SignedChain &other) {
  for (const auto &[seq, coeff] : other.terms_) add(seq, coeff);
  return *this;
}

SignedChain SignedChain::operator-() const {
  SignedChain out = *this;
  for (auto &[seq, coeff] : out.terms_) coeff = -coeff;
  return out;
}

std::int64_t SignedChain::coefficient(const Term &seq) const {
  auto it = terms_.find(seq);
  return it == terms_.end() ? 0 : it->second;
}

SignedChain elementary(std::span<const Vertex> seq) {
  SignedChain c;
  c.add({seq.begin(), seq.end()}, 1);
  return c;
}

SignedChain signed_boundary(std::span<const Vertex> seq) {
  if (seq.empty()) throw InputError("signed_boundary of an empty sequence");
  SignedChain out;
  if (seq.size() == 1) return out;
  std::vector<Vertex> face;
  for (std::size_t q = 0; q < seq.size(); ++q) {
    face.clear();
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (i != q) face.push_back(seq[i]);
    out.add(face, q % 2 == 0 ? 1 : -1);
  }
  return out;
}

SignedChain signed_boundary(const SignedChain &chain) {
  SignedChain out;
  for (const auto &[seq, coeff] : chain.terms()) {
    const auto faces = signed_boundary(std::span<const Vertex>(seq));
    for (const auto &[face, sign] : faces.terms()) out.add(face, sign * coeff);
  }
  return out;
}

bool is_allowed(std::span<const Vertex> seq, const SimpleGraph &g) {
  if (seq.empty()) return false;
  for (Vertex v : seq)
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  return true;
}

bool is_boundary_invariant(const SignedChain &chain, const SimpleGraph &g) {
  for (const auto &[seq, coeff] : chain.terms()) {
    if (!is_allowed(seq, g))
      throw InputError("chain term " + to_string(elementary(seq)) + " is not an allowed path");
  }
  const auto boundary = signed_boundary(chain);
  for (const auto &[seq, coeff] : boundary.terms())
    if (!is_allowed(seq, g)) return false;
  return true;
}

std::string to_string(const SignedChain &chain) {
  if (chain.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[seq, coeff] : chain.terms()) {
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    const auto mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += "e";
    bool wide = false;
    for (Vertex v : seq) wide = wide || v > 9;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (wide && i > 0) out += ",";
      out += std::to_string(seq[i]);
    }
  }
  return out;
}

}  // namespace pathwl
