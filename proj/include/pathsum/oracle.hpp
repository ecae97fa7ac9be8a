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

#include <Eigen/Dense>
#include <complex>

#include "pathsum/circuit.hpp"
#include "pathsum/path_sum.hpp"

namespace pathsum {

/// Dense complex operator on up to 12 qubits. Qubit 0 is the most
/// significant index bit, so a ket string |x1 x2 ... xn> reads off the basis
/// index left to right. This module is the independent desk-scale reference
/// the symbolic engine is validated against.
using DenseOperator = Eigen::MatrixXcd;

/// Product of the embedded gate matrices in circuit order. Ancilla
/// initialization is the caller's concern (restrict columns as needed).
DenseOperator circuitToMatrix(const Circuit& c);

/// The associated operator: for every valid input column, sums the 2^m path
/// contributions 2^{-s/2} e^{2 pi i P}. Columns whose bits contradict a
/// constant signature entry are zero, embedding partial isometries as
/// rectangular operators padded with zero columns.
DenseOperator pathSumToMatrix(const PathSum& s);

/// The circuit matrix with the columns outside the spec's input domain
/// zeroed, comparable shape-for-shape with pathSumToMatrix(spec).
DenseOperator circuitToMatrixOnDomain(const Circuit& c, const PathSum& spec);

/// Max-entry distance at most tol, optionally after rotating b by the phase
/// difference at a's largest-magnitude entry.
bool approxEqual(const DenseOperator& a, const DenseOperator& b, double tol,
                 bool upToGlobalPhase = false);

}  // namespace pathsum
