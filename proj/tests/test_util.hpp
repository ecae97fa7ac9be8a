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

#include <random>
#include <vector>

#include "pathsum/circuit.hpp"
#include "pathsum/polynomial.hpp"

namespace pathsum::testutil {

inline std::uint32_t below(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(rng() % bound);
}

/// Random multilinear Boolean polynomial over the given variables.
inline BoolPoly randomBoolPoly(std::mt19937_64& rng, const std::vector<VarId>& vars,
                               std::size_t maxMonomials, std::size_t maxDegree) {
    std::vector<Monomial> monos;
    std::size_t count = rng() % (maxMonomials + 1);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<VarId> pick;
        std::size_t degree = rng() % (maxDegree + 1);
        for (std::size_t d = 0; d < degree && !vars.empty(); ++d) {
            pick.push_back(vars[below(rng, static_cast<std::uint32_t>(vars.size()))]);
        }
        monos.push_back(Monomial::of(std::move(pick)));
    }
    return BoolPoly::fromMonomials(std::move(monos));
}

/// Random phase polynomial with denominators up to 2^maxExp, reduced mod 1.
inline PhasePoly randomPhasePoly(std::mt19937_64& rng, const std::vector<VarId>& vars,
                                 std::size_t maxTerms, std::size_t maxDegree,
                                 std::int64_t maxExp) {
    PhasePoly p;
    std::size_t count = rng() % (maxTerms + 1);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<VarId> pick;
        std::size_t degree = rng() % (maxDegree + 1);
        for (std::size_t d = 0; d < degree && !vars.empty(); ++d) {
            pick.push_back(vars[below(rng, static_cast<std::uint32_t>(vars.size()))]);
        }
        std::int64_t exp = 1 + static_cast<std::int64_t>(rng() % maxExp);
        BigInt num = BigInt(rng() % ((std::uint64_t{1} << std::min<std::int64_t>(exp, 20)) + 1));
        p.addTermMod1(Monomial::of(std::move(pick)), Dyadic(num, exp));
    }
    return p;
}

inline Assignment randomAssignment(std::mt19937_64& rng, const std::vector<VarId>& vars) {
    Assignment a;
    for (VarId v : vars) {
        a[v] = (rng() & 1) != 0;
    }
    return a;
}

/// Random circuit over the full gate set with a bounded Hadamard budget
/// (keeps the dense path-sum expansion tractable).
inline Circuit randomFullCircuit(std::mt19937_64& rng, std::size_t n, std::size_t gateCount,
                                 std::size_t maxHadamards) {
    Circuit c = Circuit::withQubits(n);
    std::size_t hUsed = 0;
    for (std::size_t i = 0; i < gateCount; ++i) {
        int kind = static_cast<int>(rng() % 14);
        std::uint32_t a = below(rng, static_cast<std::uint32_t>(n));
        std::uint32_t b = 0;
        if (n >= 2) {
            b = below(rng, static_cast<std::uint32_t>(n - 1));
            if (b >= a) {
                ++b;
            }
        }
        switch (kind) {
            case 0:
                if (hUsed < maxHadamards) {
                    ++hUsed;
                    c.add(Gate::h(a));
                } else {
                    c.add(Gate::t(a));
                }
                break;
            case 1:
                c.add(Gate::x(a));
                break;
            case 2:
                c.add(Gate::y(a));
                break;
            case 3:
                c.add(Gate::z(a));
                break;
            case 4:
                c.add(Gate::s(a));
                break;
            case 5:
                c.add(Gate::sdg(a));
                break;
            case 6:
                c.add(Gate::t(a));
                break;
            case 7:
                c.add(Gate::tdg(a));
                break;
            case 8:
                c.add(Gate::rk(1 + static_cast<int>(rng() % 5), a));
                break;
            case 9:
                c.add(Gate::rkdg(1 + static_cast<int>(rng() % 5), a));
                break;
            case 10:
                if (n >= 2) {
                    c.add(Gate::cnot(a, b));
                }
                break;
            case 11:
                if (n >= 2) {
                    c.add(Gate::cz(a, b));
                }
                break;
            case 12:
                if (n >= 2) {
                    c.add(Gate::swap(a, b));
                }
                break;
            default:
                if (n >= 3) {
                    std::uint32_t t = below(rng, static_cast<std::uint32_t>(n));
                    while (t == a || t == b) {
                        t = below(rng, static_cast<std::uint32_t>(n));
                    }
                    c.add(Gate::tof({a, b, t}));
                }
                break;
        }
    }
    return c;
}

}  // namespace pathsum::testutil
