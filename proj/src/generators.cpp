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

#include "pathsum/generators.hpp"

#include <random>
#include <string>

namespace pathsum {

namespace {

std::uint32_t randBelow(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(rng() % bound);
}

}  // namespace

void appendToffoli(Circuit& c, std::uint32_t a, std::uint32_t b, std::uint32_t target) {
    c.add(Gate::h(target));
    c.add(Gate::cnot(b, target));
    c.add(Gate::tdg(target));
    c.add(Gate::cnot(a, target));
    c.add(Gate::t(target));
    c.add(Gate::cnot(b, target));
    c.add(Gate::tdg(target));
    c.add(Gate::cnot(a, target));
    c.add(Gate::t(b));
    c.add(Gate::t(target));
    c.add(Gate::h(target));
    c.add(Gate::cnot(a, b));
    c.add(Gate::tdg(b));
    c.add(Gate::cnot(a, b));
    c.add(Gate::t(a));
}

void appendCcz(Circuit& c, std::uint32_t a, std::uint32_t b, std::uint32_t cq) {
    c.add(Gate::cnot(b, cq));
    c.add(Gate::tdg(cq));
    c.add(Gate::cnot(a, cq));
    c.add(Gate::t(cq));
    c.add(Gate::cnot(b, cq));
    c.add(Gate::tdg(cq));
    c.add(Gate::cnot(a, cq));
    c.add(Gate::t(b));
    c.add(Gate::t(cq));
    c.add(Gate::cnot(a, b));
    c.add(Gate::tdg(b));
    c.add(Gate::cnot(a, b));
    c.add(Gate::t(a));
}

GeneratedBench genToffoliN(std::size_t n) {
    if (n < 3) {
        throw InvalidSize("generalized Toffoli needs n >= 3");
    }
    Circuit c;
    for (std::size_t i = 0; i < n; ++i) {
        c.addQubit("x" + std::to_string(i + 1), true);
    }
    std::vector<std::uint32_t> ancilla;
    for (std::size_t i = 0; i + 3 < n; ++i) {
        ancilla.push_back(c.addQubit("a" + std::to_string(i + 1), false));
    }

    // Chain of products into the ancillas, apply, then uncompute.
    std::vector<std::array<std::uint32_t, 3>> compute;
    for (std::size_t i = 0; i + 3 < n; ++i) {
        std::uint32_t left = i == 0 ? 0 : ancilla[i - 1];
        std::uint32_t right = i == 0 ? 1 : static_cast<std::uint32_t>(i + 1);
        compute.push_back({left, right, ancilla[i]});
    }
    for (const auto& [a, b, t] : compute) {
        appendToffoli(c, a, b, t);
    }
    if (n == 3) {
        appendToffoli(c, 0, 1, 2);
    } else {
        appendToffoli(c, static_cast<std::uint32_t>(n - 2), ancilla.back(),
                      static_cast<std::uint32_t>(n - 1));
    }
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
        appendToffoli(c, (*it)[0], (*it)[1], (*it)[2]);
    }

    // Spec: x_n ^= product of the first n-1 inputs; ancillas stay clean.
    std::vector<SignatureEntry> signature;
    std::vector<BoolPoly> outputs;
    std::vector<VarId> controls;
    for (std::size_t i = 0; i < n; ++i) {
        VarId v = VarId::input(static_cast<std::uint32_t>(i));
        signature.push_back(SignatureEntry::var(v));
        outputs.push_back(BoolPoly::var(v));
        if (i + 1 < n) {
            controls.push_back(v);
        }
    }
    outputs[n - 1] =
        outputs[n - 1] + BoolPoly::monomial(Monomial::of(std::move(controls)));
    for (std::size_t i = 0; i + 3 < n; ++i) {
        signature.push_back(SignatureEntry::constant(false));
        outputs.push_back(BoolPoly::zero());
    }
    PathSum spec = PathSum::fromParts(std::move(signature), {}, 0, PhasePoly::zero(),
                                      std::move(outputs));
    return {std::move(c), std::move(spec)};
}

GeneratedBench genAdderN(std::size_t n, const LiftLimits& limits) {
    if (n < 1) {
        throw InvalidSize("adder needs n >= 1");
    }
    Circuit c;
    std::vector<std::uint32_t> xq, yq, sq, cq;
    for (std::size_t i = 0; i < n; ++i) {
        xq.push_back(c.addQubit("x" + std::to_string(i + 1), true));
    }
    for (std::size_t i = 0; i < n; ++i) {
        yq.push_back(c.addQubit("y" + std::to_string(i + 1), true));
    }
    for (std::size_t i = 0; i < n + 1; ++i) {
        sq.push_back(c.addQubit("s" + std::to_string(i + 1), false));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cq.push_back(c.addQubit("c" + std::to_string(i + 2), false));  // holds carry c_{i+2}
    }

    // carry recurrence: c_{i+1} = x_i y_i ^ (x_i ^ y_i) c_i, two Toffolis per
    // step with the x^y parity staged in place on the y wire.
    std::vector<Gate> carryCompute;
    {
        Circuit stage;
        stage.qubitNames = c.qubitNames;
        stage.primaryInput = c.primaryInput;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            appendToffoli(stage, xq[i], yq[i], cq[i]);
            if (i > 0) {
                stage.add(Gate::cnot(xq[i], yq[i]));
                appendToffoli(stage, yq[i], cq[i - 1], cq[i]);
                stage.add(Gate::cnot(xq[i], yq[i]));
            }
        }
        carryCompute = stage.gates;
    }
    for (const Gate& g : carryCompute) {
        c.gates.push_back(g);
    }
    // Top sum bit s_{n+1} = carry out of position n.
    if (n >= 2) {
        appendToffoli(c, xq[n - 1], yq[n - 1], sq[n]);
        c.add(Gate::cnot(xq[n - 1], yq[n - 1]));
        appendToffoli(c, yq[n - 1], cq[n - 2], sq[n]);
        c.add(Gate::cnot(xq[n - 1], yq[n - 1]));
    } else {
        appendToffoli(c, xq[0], yq[0], sq[1]);
    }
    // Sum bits s_i = x_i ^ y_i ^ c_i.
    for (std::size_t i = 0; i < n; ++i) {
        c.add(Gate::cnot(xq[i], sq[i]));
        c.add(Gate::cnot(yq[i], sq[i]));
        if (i > 0) {
            c.add(Gate::cnot(cq[i - 1], sq[i]));
        }
    }
    for (auto it = carryCompute.rbegin(); it != carryCompute.rend(); ++it) {
        c.gates.push_back(it->inverse());
    }

    // Symbolic spec by the same recurrence.
    std::vector<BoolPoly> carries;  // carries[i] = c_{i+1} as a polynomial
    BoolPoly carry = BoolPoly::zero();
    for (std::size_t i = 0; i < n; ++i) {
        BoolPoly xi = BoolPoly::var(VarId::input(static_cast<std::uint32_t>(i)));
        BoolPoly yi = BoolPoly::var(VarId::input(static_cast<std::uint32_t>(n + i)));
        carry = xi * yi + (xi + yi) * carry;
        if (carry.size() > limits.monomialCap) {
            throw SpecBlowup("carry polynomial for bit " + std::to_string(i + 2) + " has " +
                             std::to_string(carry.size()) + " monomials (cap " +
                             std::to_string(limits.monomialCap) + ")");
        }
        carries.push_back(carry);
    }
    std::vector<SignatureEntry> signature;
    std::vector<BoolPoly> outputs;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        VarId v = VarId::input(static_cast<std::uint32_t>(i));
        signature.push_back(SignatureEntry::var(v));
        outputs.push_back(BoolPoly::var(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
        BoolPoly sum = BoolPoly::var(VarId::input(static_cast<std::uint32_t>(i))) +
                       BoolPoly::var(VarId::input(static_cast<std::uint32_t>(n + i)));
        if (i > 0) {
            sum = sum + carries[i - 1];
        }
        signature.push_back(SignatureEntry::constant(false));
        outputs.push_back(sum);
    }
    signature.push_back(SignatureEntry::constant(false));
    outputs.push_back(carries[n - 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        signature.push_back(SignatureEntry::constant(false));
        outputs.push_back(BoolPoly::zero());
    }
    PathSum spec = PathSum::fromParts(std::move(signature), {}, 0, PhasePoly::zero(),
                                      std::move(outputs));
    return {std::move(c), std::move(spec)};
}

GeneratedBench genQftN(std::size_t n) {
    if (n < 1) {
        throw InvalidSize("QFT needs n >= 1");
    }
    Circuit c;
    for (std::size_t i = 0; i < n; ++i) {
        c.addQubit("q" + std::to_string(i + 1), true);
    }
    // Coordinate 1 carries the least significant bit, so the ladder runs
    // from the top wire down. Controlled rotations are expanded as
    // R_{k+1} (x) R_{k+1} CNOT R_{k+1}^dagger CNOT.
    for (std::size_t ii = n; ii-- > 0;) {
        std::uint32_t target = static_cast<std::uint32_t>(ii);
        c.add(Gate::h(target));
        for (std::size_t jj = ii; jj-- > 0;) {
            std::uint32_t control = static_cast<std::uint32_t>(jj);
            int k = static_cast<int>(ii - jj) + 1;
            c.add(Gate::rk(k + 1, control));
            c.add(Gate::rk(k + 1, target));
            c.add(Gate::cnot(control, target));
            c.add(Gate::rkdg(k + 1, target));
            c.add(Gate::cnot(control, target));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        c.add(Gate::swap(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n - 1 - i)));
    }

    // Spec phase: int(x) int(y) / 2^n with int(v) = sum_i 2^{i-1} v_i.
    PhasePoly phase;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t e = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(i + j);
            if (e <= 0) {
                continue;  // integer multiple, vanishes mod 1
            }
            phase.addTermMod1(
                Monomial::of({VarId::input(static_cast<std::uint32_t>(i)),
                              VarId::path(static_cast<std::uint32_t>(j))}),
                Dyadic(1, e));
        }
    }
    std::vector<SignatureEntry> signature;
    std::vector<BoolPoly> outputs;
    std::vector<std::uint32_t> paths;
    for (std::size_t i = 0; i < n; ++i) {
        signature.push_back(SignatureEntry::var(VarId::input(static_cast<std::uint32_t>(i))));
        outputs.push_back(BoolPoly::var(VarId::path(static_cast<std::uint32_t>(i))));
        paths.push_back(static_cast<std::uint32_t>(i));
    }
    PathSum spec = PathSum::fromParts(std::move(signature), std::move(paths),
                                      static_cast<std::int64_t>(n), std::move(phase),
                                      std::move(outputs));
    return {std::move(c), std::move(spec)};
}

GeneratedBench genHiddenShift(std::size_t n, std::size_t alternations, std::uint64_t seed,
                              bool symbolic, std::size_t gatesPerRound) {
    if (n < 2 || n % 2 != 0) {
        throw InvalidSize("hidden shift needs an even n >= 2");
    }
    if (alternations < 1) {
        throw InvalidSize("hidden shift needs at least one alternation");
    }
    const std::size_t half = n / 2;
    std::mt19937_64 rng(seed);

    std::vector<bool> shift(n);
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = (rng() & 1) != 0;
    }

    // Oracle for the random degree-3 g on one half-register, as abstract
    // gates over half-local indices; instantiated on either half below.
    struct OracleGate {
        std::uint8_t arity;  // 1 = Z, 2 = CZ, 3 = CCZ
        std::uint32_t q[3];
    };
    std::vector<OracleGate> oracle;
    for (std::size_t round = 0; round < alternations; ++round) {
        for (std::size_t g = 0; g < gatesPerRound; ++g) {
            if (rng() % 2 == 0 || half < 2) {
                oracle.push_back({1, {randBelow(rng, half), 0, 0}});
            } else {
                std::uint32_t a = randBelow(rng, half);
                std::uint32_t b = randBelow(rng, half - 1);
                if (b >= a) {
                    ++b;
                }
                oracle.push_back({2, {a, b, 0}});
            }
        }
        if (half >= 3) {
            std::uint32_t a = randBelow(rng, half);
            std::uint32_t b = randBelow(rng, half - 1);
            if (b >= a) {
                ++b;
            }
            std::uint32_t cc = randBelow(rng, half - 2);
            for (std::uint32_t used : {std::min(a, b), std::max(a, b)}) {
                if (cc >= used) {
                    ++cc;
                }
            }
            oracle.push_back({3, {a, b, cc}});
        }
    }

    Circuit c;
    std::vector<std::uint32_t> main;
    for (std::size_t i = 0; i < n; ++i) {
        main.push_back(c.addQubit("m" + std::to_string(i + 1), false));
    }
    std::vector<std::uint32_t> shiftReg;
    if (symbolic) {
        for (std::size_t i = 0; i < n; ++i) {
            shiftReg.push_back(c.addQubit("s" + std::to_string(i + 1), true));
        }
    }

    auto hadamards = [&] {
        for (std::uint32_t q : main) {
            c.add(Gate::h(q));
        }
    };
    auto applyShift = [&] {
        if (symbolic) {
            for (std::size_t i = 0; i < n; ++i) {
                c.add(Gate::cnot(shiftReg[i], main[i]));
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (shift[i]) {
                    c.add(Gate::x(main[i]));
                }
            }
        }
    };
    auto pairCouplings = [&] {
        for (std::size_t i = 0; i < half; ++i) {
            c.add(Gate::cz(main[i], main[half + i]));
        }
    };
    auto applyOracle = [&](std::size_t offset) {
        for (const OracleGate& og : oracle) {
            switch (og.arity) {
                case 1:
                    c.add(Gate::z(main[offset + og.q[0]]));
                    break;
                case 2:
                    c.add(Gate::cz(main[offset + og.q[0]], main[offset + og.q[1]]));
                    break;
                default:
                    appendCcz(c, main[offset + og.q[0]], main[offset + og.q[1]],
                              main[offset + og.q[2]]);
                    break;
            }
        }
    };

    hadamards();
    applyShift();
    pairCouplings();
    applyOracle(0);
    applyShift();
    hadamards();
    pairCouplings();
    applyOracle(half);
    hadamards();

    std::vector<SignatureEntry> signature;
    std::vector<BoolPoly> outputs;
    if (symbolic) {
        for (std::size_t i = 0; i < n; ++i) {
            signature.push_back(SignatureEntry::constant(false));
            outputs.push_back(BoolPoly::var(VarId::input(static_cast<std::uint32_t>(i))));
        }
        for (std::size_t i = 0; i < n; ++i) {
            VarId v = VarId::input(static_cast<std::uint32_t>(i));
            signature.push_back(SignatureEntry::var(v));
            outputs.push_back(BoolPoly::var(v));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            signature.push_back(SignatureEntry::constant(false));
            outputs.push_back(BoolPoly::constant(shift[i]));
        }
    }
    PathSum spec = PathSum::fromParts(std::move(signature), {}, 0, PhasePoly::zero(),
                                      std::move(outputs));
    return {std::move(c), std::move(spec)};
}

namespace {

Circuit randomCircuit(std::size_t n, std::size_t depth, std::size_t tCount, std::uint64_t seed) {
    if (n < 1) {
        throw InvalidSize("random circuits need at least one qubit");
    }
    if (tCount > depth) {
        throw InvalidSize("tCount exceeds depth");
    }
    std::mt19937_64 rng(seed);
    std::vector<bool> tSlot(depth, false);
    {
        std::vector<std::size_t> idx(depth);
        for (std::size_t i = 0; i < depth; ++i) {
            idx[i] = i;
        }
        for (std::size_t i = 0; i < tCount; ++i) {
            std::size_t j = i + rng() % (depth - i);
            std::swap(idx[i], idx[j]);
            tSlot[idx[i]] = true;
        }
    }
    Circuit c = Circuit::withQubits(n);
    for (std::size_t step = 0; step < depth; ++step) {
        if (tSlot[step]) {
            std::uint32_t q = randBelow(rng, static_cast<std::uint32_t>(n));
            c.add(rng() % 2 == 0 ? Gate::t(q) : Gate::tdg(q));
            continue;
        }
        const int kinds = n >= 2 ? 7 : 5;
        int kind = static_cast<int>(rng() % kinds);
        std::uint32_t a = randBelow(rng, static_cast<std::uint32_t>(n));
        switch (kind) {
            case 0:
                c.add(Gate::h(a));
                break;
            case 1:
                c.add(Gate::s(a));
                break;
            case 2:
                c.add(Gate::sdg(a));
                break;
            case 3:
                c.add(Gate::x(a));
                break;
            case 4:
                c.add(Gate::z(a));
                break;
            default: {
                std::uint32_t b = randBelow(rng, static_cast<std::uint32_t>(n - 1));
                if (b >= a) {
                    ++b;
                }
                c.add(kind == 5 ? Gate::cnot(a, b) : Gate::cz(a, b));
                break;
            }
        }
    }
    return c;
}

}  // namespace

Circuit genRandomClifford(std::size_t n, std::size_t depth, std::uint64_t seed) {
    return randomCircuit(n, depth, 0, seed);
}

Circuit genRandomCliffordT(std::size_t n, std::size_t depth, std::size_t tCount,
                           std::uint64_t seed) {
    return randomCircuit(n, depth, tCount, seed);
}

Circuit mutate(const Circuit& c, std::uint64_t seed) {
    if (c.gates.empty()) {
        throw EmptyCircuit("cannot mutate a circuit without gates");
    }
    std::mt19937_64 rng(seed);
    Circuit out = c;
    out.gates.erase(out.gates.begin() +
                    static_cast<std::ptrdiff_t>(rng() % out.gates.size()));
    return out;
}

}  // namespace pathsum
