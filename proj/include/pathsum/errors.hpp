// Copyright 2026 The Pathsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathsum {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Substitution target occurs in the replacement polynomial.
struct SubstitutionCycle : Error {
    using Error::Error;
};

/// Evaluation hit a variable the assignment does not cover.
struct UnboundVariable : Error {
    using Error::Error;
};

/// Lifting a Boolean polynomial exceeded the configured size budget.
struct LiftBlowup : Error {
    using Error::Error;
};

/// Gate construction with invalid parameters (e.g. rotation level k < 1).
struct InvalidGate : Error {
    using Error::Error;
};

/// Sequential composition of sums with different qubit counts.
struct ArityMismatch : Error {
    using Error::Error;
};

/// A constant input coordinate was composed with a non-matching output.
struct IncompatibleSignature : Error {
    IncompatibleSignature(std::size_t coordinate, const std::string& what)
        : Error(what), coordinate(coordinate) {}
    std::size_t coordinate;
};

/// A rewrite rule was applied to a sum that does not match its pattern.
struct NotApplicable : Error {
    using Error::Error;
};

/// decideClifford called on a sum outside the Clifford fragment.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// Dense-matrix oracle request beyond the supported size.
struct TooLarge : Error {
    using Error::Error;
};

/// Dense-matrix comparison of differently shaped operators.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// Structured parse failure with source position.
struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Gate line mentions a qubit that was never declared.
struct UndeclaredQubit : ParseError {
    using ParseError::ParseError;
};

/// The same qubit name is declared twice.
struct DuplicateQubit : ParseError {
    using ParseError::ParseError;
};

/// Benchmark generator called with an unsupported size.
struct InvalidSize : Error {
    using Error::Error;
};

/// Symbolic specification exceeded the polynomial size cap.
struct SpecBlowup : Error {
    using Error::Error;
};

/// Mutation of a circuit without gates.
struct EmptyCircuit : Error {
    using Error::Error;
};

/// A verification job ran past its deadline.
struct TimeoutExpired : Error {
    using Error::Error;
};

}  // namespace pathsum
