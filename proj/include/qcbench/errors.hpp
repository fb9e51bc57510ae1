// Copyright 2026 The qcbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception hierarchy shared by every qcbench module.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcb {

/// Root of all qcbench errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

class GridError : public Error {
  public:
    using Error::Error;
};

class ZeroVectorError : public Error {
  public:
    using Error::Error;
};

class DegenerateSetError : public Error {
  public:
    using Error::Error;
};

class SamplingError : public Error {
  public:
    using Error::Error;
};

class StateError : public Error {
  public:
    using Error::Error;
};

class InputError : public Error {
  public:
    using Error::Error;
};

class FunctionDomainError : public Error {
  public:
    using Error::Error;
};

class DegreeError : public Error {
  public:
    using Error::Error;
};

class TruncationError : public Error {
  public:
    using Error::Error;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

class DegenerateSpectrumError : public Error {
  public:
    using Error::Error;
};

/// Raised when an operator fails the hermiticity certificate.
class NotHermitianError : public Error {
  public:
    NotHermitianError(const std::string &what, double deviation)
        : Error(what), deviation_(deviation) {}
    [[nodiscard]] double deviation() const noexcept { return deviation_; }

  private:
    double deviation_;
};

/// Raised by the LAPACK backend; carries the routine's info code.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, long iterations)
        : Error(what), iterations_(iterations) {}
    [[nodiscard]] long iterations() const noexcept { return iterations_; }

  private:
    long iterations_;
};

/// Reports the worst offending pair of a non-commuting family.
class NotCommutingError : public Error {
  public:
    NotCommutingError(const std::string &what, std::size_t first,
                      std::size_t second, double norm)
        : Error(what), first_(first), second_(second), norm_(norm) {}
    [[nodiscard]] std::size_t first() const noexcept { return first_; }
    [[nodiscard]] std::size_t second() const noexcept { return second_; }
    [[nodiscard]] double norm() const noexcept { return norm_; }

  private:
    std::size_t first_;
    std::size_t second_;
    double norm_;
};

// Workbench-level errors; both map to exit code 2.
class UsageError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

// Unreadable config or unwritable output; exit code 3.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace qcb
