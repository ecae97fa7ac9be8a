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
#include <string>
#include <vector>

#include "pathsum/errors.hpp"

namespace pathsum {

/// A named-qubit gate over the supported set. Operands are qubit indices;
/// for Tof the last operand is the target, all others are controls.
struct Gate {
    enum class Kind : std::uint8_t {
        H,
        X,
        Y,
        Z,
        S,
        Sdg,
        T,
        Tdg,
        Rk,
        Rkdg,
        Cnot,
        Cz,
        Swap,
        Tof,
    };

    Kind kind = Kind::H;
    int level = 0;  // rotation level k, only meaningful for Rk / Rkdg
    std::vector<std::uint32_t> qubits;

    static Gate h(std::uint32_t q) { return {Kind::H, 0, {q}}; }
    static Gate x(std::uint32_t q) { return {Kind::X, 0, {q}}; }
    static Gate y(std::uint32_t q) { return {Kind::Y, 0, {q}}; }
    static Gate z(std::uint32_t q) { return {Kind::Z, 0, {q}}; }
    static Gate s(std::uint32_t q) { return {Kind::S, 0, {q}}; }
    static Gate sdg(std::uint32_t q) { return {Kind::Sdg, 0, {q}}; }
    static Gate t(std::uint32_t q) { return {Kind::T, 0, {q}}; }
    static Gate tdg(std::uint32_t q) { return {Kind::Tdg, 0, {q}}; }
    static Gate rk(int k, std::uint32_t q) { return {Kind::Rk, k, {q}}; }
    static Gate rkdg(int k, std::uint32_t q) { return {Kind::Rkdg, k, {q}}; }
    static Gate cnot(std::uint32_t control, std::uint32_t target) {
        return {Kind::Cnot, 0, {control, target}};
    }
    static Gate cz(std::uint32_t a, std::uint32_t b) { return {Kind::Cz, 0, {a, b}}; }
    static Gate swap(std::uint32_t a, std::uint32_t b) { return {Kind::Swap, 0, {a, b}}; }
    static Gate tof(std::vector<std::uint32_t> controlsThenTarget) {
        return {Kind::Tof, 0, std::move(controlsThenTarget)};
    }

    /// Inverse gate: self-inverse for H/X/Y/Z/Cnot/Cz/Swap/Tof, dagger swap
    /// for the rotations.
    Gate inverse() const;

    /// Checks arity and operand distinctness; throws InvalidGate.
    void validate(std::size_t qubitCount) const;

    bool operator==(const Gate&) const = default;
};

/// A circuit over declared named qubits. Qubits outside the primary-input set
/// start in the |0> state.
struct Circuit {
    std::vector<std::string> qubitNames;
    std::vector<bool> primaryInput;  // one flag per declared qubit
    std::vector<Gate> gates;

    std::size_t qubitCount() const { return qubitNames.size(); }

    /// Declares n qubits named q1..qn, all primary.
    static Circuit withQubits(std::size_t n);

    std::uint32_t addQubit(const std::string& name, bool primary);
    void add(Gate g) {
        g.validate(qubitCount());
        gates.push_back(std::move(g));
    }

    void validate() const;

    bool operator==(const Circuit&) const = default;
};

/// Reversed gate list with every gate inverted.
Circuit inverse(const Circuit& c);

}  // namespace pathsum
