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

#include "pathsum/circuit.hpp"

#include <algorithm>
#include <set>

namespace pathsum {

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case Kind::S:
            g.kind = Kind::Sdg;
            break;
        case Kind::Sdg:
            g.kind = Kind::S;
            break;
        case Kind::T:
            g.kind = Kind::Tdg;
            break;
        case Kind::Tdg:
            g.kind = Kind::T;
            break;
        case Kind::Rk:
            g.kind = Kind::Rkdg;
            break;
        case Kind::Rkdg:
            g.kind = Kind::Rk;
            break;
        default:
            break;  // self-inverse
    }
    return g;
}

void Gate::validate(std::size_t qubitCount) const {
    std::size_t arity = 0;
    switch (kind) {
        case Kind::H:
        case Kind::X:
        case Kind::Y:
        case Kind::Z:
        case Kind::S:
        case Kind::Sdg:
        case Kind::T:
        case Kind::Tdg:
        case Kind::Rk:
        case Kind::Rkdg:
            arity = 1;
            break;
        case Kind::Cnot:
        case Kind::Cz:
        case Kind::Swap:
            arity = 2;
            break;
        case Kind::Tof:
            arity = qubits.size();
            if (arity < 3) {
                throw InvalidGate("tof requires at least 2 controls and a target");
            }
            break;
    }
    if (qubits.size() != arity) {
        throw InvalidGate("wrong operand count for gate");
    }
    if ((kind == Kind::Rk || kind == Kind::Rkdg) && level < 1) {
        throw InvalidGate("rotation level must be at least 1");
    }
    std::set<std::uint32_t> distinct(qubits.begin(), qubits.end());
    if (distinct.size() != qubits.size()) {
        throw InvalidGate("gate operands must be distinct");
    }
    for (std::uint32_t q : qubits) {
        if (q >= qubitCount) {
            throw InvalidGate("gate operand outside the declared qubits");
        }
    }
}

Circuit Circuit::withQubits(std::size_t n) {
    Circuit c;
    for (std::size_t i = 0; i < n; ++i) {
        c.addQubit("q" + std::to_string(i + 1), true);
    }
    return c;
}

std::uint32_t Circuit::addQubit(const std::string& name, bool primary) {
    qubitNames.push_back(name);
    primaryInput.push_back(primary);
    return static_cast<std::uint32_t>(qubitNames.size() - 1);
}

void Circuit::validate() const {
    std::set<std::string> names(qubitNames.begin(), qubitNames.end());
    if (names.size() != qubitNames.size()) {
        throw InvalidGate("duplicate qubit names");
    }
    if (primaryInput.size() != qubitNames.size()) {
        throw InvalidGate("primary-input flags out of sync with declarations");
    }
    for (const Gate& g : gates) {
        g.validate(qubitCount());
    }
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.qubitNames = c.qubitNames;
    out.primaryInput = c.primaryInput;
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        out.gates.push_back(it->inverse());
    }
    return out;
}

}  // namespace pathsum
