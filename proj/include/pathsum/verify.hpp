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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathsum/circuit.hpp"
#include "pathsum/path_sum.hpp"
#include "pathsum/rewrite.hpp"

namespace pathsum {

struct VerifyOptions {
    bool eagerReduction = true;       // normalize after every composed gate
    bool isometryRestriction = true;  // solve outputs against the signature first
    bool assumeWellFormedSpec = true;
    int bruteForceFallbackMaxQubits = 10;  // dense fallback bound (and m <= 22)
    std::int64_t timeoutMs = 0;            // 0 = no deadline; expiry yields Unknown
    LiftLimits lift;
};

enum class Outcome { Equal, EqualUpToGlobalPhase, NotEqual, Unknown };

std::string outcomeName(Outcome o);

struct VerifyStats {
    std::size_t qubits = 0;
    std::size_t pathVariables = 0;  // total allocated across the miter
    double timeMs = 0;
};

/// The result of one verification job. Equal / EqualUpToGlobalPhase are
/// claimed only from an exact classification of the reduced miter; NotEqual
/// carries a machine-checkable reason (an input assignment witnessing the
/// difference when one is derivable). Unknown is an honest outcome: the
/// normal forms of the calculus are not unique.
struct Verdict {
    Outcome outcome = Outcome::Unknown;
    Dyadic globalPhase;                 // for EqualUpToGlobalPhase
    std::optional<Assignment> witness;  // for NotEqual, when derivable
    std::string reason;
    std::vector<RuleApplication> trace;
    VerifyStats stats;

    bool positive() const {
        return outcome == Outcome::Equal || outcome == Outcome::EqualUpToGlobalPhase;
    }
    /// One-line report, e.g. "VERDICT equal qubits=97 pathvars=190 time_ms=1084.2".
    std::string reportLine() const;
};

/// Checks that the circuit implements the specification by reducing the
/// miter: the spec composed with the inverse circuit, one gate at a time.
/// Throws ArityMismatch when qubit counts differ.
Verdict verifyAgainstSpec(const Circuit& c, const PathSum& spec, const VerifyOptions& opts = {});

/// Circuit-circuit equivalence via the miter of c1 with the inverse of c2.
/// Requires identical qubit declarations.
Verdict verifyCircuits(const Circuit& c1, const Circuit& c2, const VerifyOptions& opts = {});

}  // namespace pathsum
