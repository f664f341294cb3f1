/* Copyright 2026 The symlie Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A free symbol of an expression has no binding in the assignment.
class UnboundSymbolError : public Error {
 public:
  using Error::Error;
};

/// ln of a non-positive value, negative power of zero, non-finite result.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A total derivative or on-shell substitution needs a jet coordinate
/// outside the truncated jet space.
class JetOrderError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input falls outside the cases handled (repeated indicial roots,
/// u-dependent coefficients in the linear solver, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An expression is not polynomial in the requested jet coordinates.
class NonPolynomialError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Evaluation failed at one sample of a randomized check.
class SampleError : public Error {
 public:
  SampleError(const std::string& what, std::size_t index) : Error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace symlie
