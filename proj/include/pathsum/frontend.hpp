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

#include <string>
#include <string_view>

#include "pathsum/circuit.hpp"
#include "pathsum/path_sum.hpp"

namespace pathsum {

/// Circuit file dialect (UTF-8, line oriented, '#' comments):
///
///   .v a b c        # declared qubits, in index order
///   .i a b          # primary inputs; omitted qubits start in |0>
///   BEGIN
///   H c
///   tof a b c       # n-ary, last operand is the target
///   T* b
///   Rk(4) a
///   END
///
/// Mnemonics: H X Y Z S S* T T* cnot cz swap tof Rk(k) Rk*(k). A `tof` with
/// one operand is X, with two operands cnot. Without a `.i` line every
/// declared qubit is a primary input.
Circuit parseCircuit(std::string_view text);
std::string printCircuit(const Circuit& c);

/// Path-sum specification format:
///
///   qubits: 3
///   inputs: x1 x2 0
///   paths: y1
///   amp: 1
///   phase: 1/2*x1*y1
///   out: x1, x2, y1
///
/// Polynomials are sums of terms; a term multiplies integer or a/2^b dyadic
/// coefficients, variables x<k>/y<k> and parenthesized subexpressions with
/// `*`. The phase is reduced mod 1 at parse time; output polynomials are
/// Boolean (coefficients mod 2).
PathSum parsePathSumSpec(std::string_view text);
std::string printPathSum(const PathSum& s);

}  // namespace pathsum
