// Copyright 2026 The ccd Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ccd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not conform (or are not a power of two where required).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds the dense size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An input violates an operation precondition (unitarity, symmetry, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver did not reach its target residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Intermediate quantities that must agree in exact arithmetic do not.
class NumericalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Raised by structure checks (dimension counts, rank) that fail.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// No entangler exists for an odd number of qubits.
class EntanglerNonexistent : public Error {
 public:
  using Error::Error;
};

class FinaglerArgumentError : public Error {
 public:
  using Error::Error;
};

/// The operation is only defined for one parity of the qubit count.
class UnsupportedParity : public Error {
 public:
  using Error::Error;
};

/// No square-root branch of the diagonal core produced a real orthogonal factor.
class BranchSelectionError : public Error {
 public:
  BranchSelectionError(const std::string& what, double imaginary_mass)
      : Error(what + " (imaginary mass " + std::to_string(imaginary_mass) + ")"),
        imaginary_mass_(imaginary_mass) {}
  double imaginary_mass() const noexcept { return imaginary_mass_; }

 private:
  double imaginary_mass_;
};

class OptimizationError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccd
