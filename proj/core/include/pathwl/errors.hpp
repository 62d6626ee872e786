// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathwl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists, PCX files, manifests).
/// `position()` is a byte offset or a 1-based line number depending on the
/// format; `what()` always says which.
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, std::size_t position)
      : Error(msg), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input that parses but violates a precondition (bad permutation length,
/// non-allowed chain term, kind mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A lifting would exceed the configured member-count cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string &msg, std::size_t cap)
      : Error(msg), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Tensor or parameter shapes do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A forward pass produced NaN or Inf.
class NumericError : public Error {
 public:
  NumericError(const std::string &msg, int layer, int dim)
      : Error(msg), layer_(layer), dim_(dim) {}

  int layer() const noexcept { return layer_; }
  int dim() const noexcept { return dim_; }

 private:
  int layer_;
  int dim_;
};

}  // namespace pathwl
