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

#include "pathsum/circuit.hpp"
#include "pathsum/path_sum.hpp"

namespace pathsum {

/// A generated benchmark: a Clifford+T (or Clifford+R_k) circuit together
/// with its path-sum specification. Generation is deterministic in the
/// parameters and seed.
struct GeneratedBench {
    Circuit circuit;
    PathSum spec;
};

/// n-controlled NOT via the standard chain of 2(n-3)+1 Toffoli gates over
/// n-3 clean ancillas, each Toffoli expanded to the 7-T Clifford+T
/// decomposition. Spec: x_n ^= x_1 x_2 ... x_{n-1}. Requires n >= 3.
GeneratedBench genToffoliN(std::size_t n);

/// Out-of-place ripple-carry adder |x>|y>|0> -> |x>|y>|x+y> with the full
/// (n+1)-bit sum, n-1 carry ancillas and 4(n-1) Toffoli gates expanded to
/// Clifford+T. The symbolic carry polynomials of the spec grow as 2^n;
/// beyond the cap this throws SpecBlowup.
GeneratedBench genAdderN(std::size_t n, const LiftLimits& limits = {});

/// Quantum Fourier transform: Hadamard plus controlled-R_k ladder (each
/// controlled rotation decomposed over {R_{k+1}, CNOT}) and a final swap
/// reversal. Spec phase: int(x) int(y) / 2^n expanded to multilinear form,
/// with coordinate 1 the least significant bit.
GeneratedBench genQftN(std::size_t n);

/// Hidden-shift instance over Maiorana-McFarland bent functions
/// f(x, y) = (-1)^{g(x) + x.y} with random degree-3 g built from
/// `gatesPerRound` random Z/CZ gates plus one CCZ per alternation (CCZ
/// expanded to Clifford+T without Hadamards). The fixed variant maps
/// |0..0> to the shift |s>; the symbolic variant adds an n-qubit shift
/// register and maps |0>|s> to |s>|s>. Requires n even, n >= 2, A >= 1.
GeneratedBench genHiddenShift(std::size_t n, std::size_t alternations, std::uint64_t seed,
                              bool symbolic, std::size_t gatesPerRound = 200);

/// Seeded uniform circuits over {H, S, S*, CNOT, CZ, X, Z}.
Circuit genRandomClifford(std::size_t n, std::size_t depth, std::uint64_t seed);
/// Same with tCount of the depth slots replaced by T/T* gates.
Circuit genRandomCliffordT(std::size_t n, std::size_t depth, std::size_t tCount,
                           std::uint64_t seed);

/// Deletes one uniformly chosen gate. Throws EmptyCircuit.
Circuit mutate(const Circuit& c, std::uint64_t seed);

/// Appends the 7-T Clifford+T expansion of a doubly-controlled NOT / Z.
void appendToffoli(Circuit& c, std::uint32_t a, std::uint32_t b, std::uint32_t target);
void appendCcz(Circuit& c, std::uint32_t a, std::uint32_t b, std::uint32_t cq);

}  // namespace pathsum
