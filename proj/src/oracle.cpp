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

#include "pathsum/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace pathsum {

namespace {

using Complex = std::complex<double>;

constexpr std::size_t kMaxQubits = 12;
constexpr std::size_t kMaxPathVars = 22;

// Bit of qubit q in a basis index (qubit 0 most significant).
inline std::size_t qubitBit(std::size_t n, std::uint32_t q) {
    return n - 1 - q;
}

Complex phaseFactor(double turns) {
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

void applyGateToColumn(std::vector<Complex>& v, const Gate& g, std::size_t n) {
    const std::size_t dim = v.size();
    auto bit = [&](std::uint32_t q) { return std::size_t{1} << qubitBit(n, q); };
    switch (g.kind) {
        case Gate::Kind::H: {
            const std::size_t b = bit(g.qubits[0]);
            const double invSqrt2 = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b) == 0) {
                    Complex lo = v[i], hi = v[i | b];
                    v[i] = (lo + hi) * invSqrt2;
                    v[i | b] = (lo - hi) * invSqrt2;
                }
            }
            break;
        }
        case Gate::Kind::X: {
            const std::size_t b = bit(g.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b) == 0) {
                    std::swap(v[i], v[i | b]);
                }
            }
            break;
        }
        case Gate::Kind::Y: {
            const std::size_t b = bit(g.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b) == 0) {
                    Complex lo = v[i], hi = v[i | b];
                    v[i] = Complex(0, -1) * hi;
                    v[i | b] = Complex(0, 1) * lo;
                }
            }
            break;
        }
        case Gate::Kind::Z:
        case Gate::Kind::S:
        case Gate::Kind::Sdg:
        case Gate::Kind::T:
        case Gate::Kind::Tdg:
        case Gate::Kind::Rk:
        case Gate::Kind::Rkdg: {
            double turns = 0;
            switch (g.kind) {
                case Gate::Kind::Z:
                    turns = 0.5;
                    break;
                case Gate::Kind::S:
                    turns = 0.25;
                    break;
                case Gate::Kind::Sdg:
                    turns = -0.25;
                    break;
                case Gate::Kind::T:
                    turns = 0.125;
                    break;
                case Gate::Kind::Tdg:
                    turns = -0.125;
                    break;
                case Gate::Kind::Rk:
                    turns = std::exp2(-double(g.level));
                    break;
                case Gate::Kind::Rkdg:
                    turns = -std::exp2(-double(g.level));
                    break;
                default:
                    break;
            }
            const Complex f = phaseFactor(turns);
            const std::size_t b = bit(g.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b) != 0) {
                    v[i] *= f;
                }
            }
            break;
        }
        case Gate::Kind::Cnot: {
            const std::size_t c = bit(g.qubits[0]), t = bit(g.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & c) != 0 && (i & t) == 0) {
                    std::swap(v[i], v[i | t]);
                }
            }
            break;
        }
        case Gate::Kind::Cz: {
            const std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & a) != 0 && (i & b) != 0) {
                    v[i] = -v[i];
                }
            }
            break;
        }
        case Gate::Kind::Swap: {
            const std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                bool ba = (i & a) != 0, bb = (i & b) != 0;
                if (ba && !bb) {
                    std::swap(v[i], v[(i ^ a) | b]);
                }
            }
            break;
        }
        case Gate::Kind::Tof: {
            std::size_t controls = 0;
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
                controls |= bit(g.qubits[i]);
            }
            const std::size_t t = bit(g.qubits.back());
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & controls) == controls && (i & t) == 0) {
                    std::swap(v[i], v[i | t]);
                }
            }
            break;
        }
    }
}

}  // namespace

DenseOperator circuitToMatrix(const Circuit& c) {
    const std::size_t n = c.qubitCount();
    if (n > kMaxQubits) {
        throw TooLarge("dense simulation limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    c.validate();
    const std::size_t dim = std::size_t{1} << n;
    DenseOperator out(dim, dim);
    std::vector<Complex> column(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::fill(column.begin(), column.end(), Complex(0));
        column[col] = Complex(1);
        for (const Gate& g : c.gates) {
            applyGateToColumn(column, g, n);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            out(row, col) = column[row];
        }
    }
    return out;
}

DenseOperator pathSumToMatrix(const PathSum& s) {
    const std::size_t n = s.qubitCount();
    if (n > kMaxQubits) {
        throw TooLarge("dense expansion limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    if (s.pathVarCount() > kMaxPathVars) {
        throw TooLarge("dense expansion limited to " + std::to_string(kMaxPathVars) +
                       " path variables");
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t paths = std::size_t{1} << s.pathVarCount();
    DenseOperator out = DenseOperator::Zero(dim, dim);

    // Precompute masks: input variables read column bits at their signature
    // coordinate, path variables enumerate 0..2^m-1.
    std::map<VarId, std::size_t> inputBit;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.signature()[i].isVar()) {
            inputBit[s.signature()[i].variable()] = std::size_t{1} << qubitBit(n, i);
        }
    }
    std::map<VarId, std::size_t> pathBit;
    for (std::size_t j = 0; j < s.pathVarCount(); ++j) {
        pathBit[VarId::path(s.pathVars()[j])] = std::size_t{1} << j;
    }
    auto masksOf = [&](const Monomial& m) {
        std::pair<std::size_t, std::size_t> masks{0, 0};
        for (VarId v : m.vars()) {
            if (v.isInput()) {
                masks.first |= inputBit.at(v);
            } else {
                masks.second |= pathBit.at(v);
            }
        }
        return masks;
    };

    struct PhaseTerm {
        std::size_t inMask, pathMask;
        double turns;
    };
    std::vector<PhaseTerm> phaseTerms;
    for (const auto& [mono, coeff] : s.phase().terms()) {
        auto [im, pm] = masksOf(mono);
        phaseTerms.push_back({im, pm, coeff.toDouble()});
    }
    struct OutTerm {
        std::size_t inMask, pathMask;
    };
    std::vector<std::vector<OutTerm>> outTerms(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const Monomial& mono : s.outputs()[i].monomials()) {
            auto [im, pm] = masksOf(mono);
            outTerms[i].push_back({im, pm});
        }
    }

    const double amplitude = std::exp2(-double(s.ampExponent()) / 2.0);
    for (std::size_t col = 0; col < dim; ++col) {
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i) {
            if (!s.signature()[i].isVar()) {
                bool bitSet = (col & (std::size_t{1} << qubitBit(n, i))) != 0;
                valid = bitSet == s.signature()[i].constantValue();
            }
        }
        if (!valid) {
            continue;
        }
        for (std::size_t y = 0; y < paths; ++y) {
            double turns = 0;
            for (const PhaseTerm& t : phaseTerms) {
                if ((col & t.inMask) == t.inMask && (y & t.pathMask) == t.pathMask) {
                    turns += t.turns;
                }
            }
            std::size_t row = 0;
            for (std::size_t i = 0; i < n; ++i) {
                bool bitValue = false;
                for (const OutTerm& t : outTerms[i]) {
                    if ((col & t.inMask) == t.inMask && (y & t.pathMask) == t.pathMask) {
                        bitValue = !bitValue;
                    }
                }
                if (bitValue) {
                    row |= std::size_t{1} << qubitBit(n, i);
                }
            }
            out(row, col) += amplitude * phaseFactor(turns);
        }
    }
    return out;
}

DenseOperator circuitToMatrixOnDomain(const Circuit& c, const PathSum& spec) {
    DenseOperator m = circuitToMatrix(c);
    const std::size_t n = spec.qubitCount();
    if (static_cast<std::size_t>(m.cols()) != (std::size_t{1} << n)) {
        throw ShapeMismatch("circuit and spec disagree on the qubit count");
    }
    for (std::size_t col = 0; col < (std::size_t{1} << n); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!spec.signature()[i].isVar()) {
                bool bitSet = (col & (std::size_t{1} << qubitBit(n, i))) != 0;
                if (bitSet != spec.signature()[i].constantValue()) {
                    m.col(col).setZero();
                    break;
                }
            }
        }
    }
    return m;
}

bool approxEqual(const DenseOperator& a, const DenseOperator& b, double tol,
                 bool upToGlobalPhase) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch("comparing operators of different shapes");
    }
    DenseOperator bAdj = b;
    if (upToGlobalPhase) {
        Eigen::Index r = 0, c = 0;
        a.cwiseAbs().maxCoeff(&r, &c);
        if (std::abs(a(r, c)) > 0 && std::abs(b(r, c)) > 0) {
            bAdj *= (a(r, c) / std::abs(a(r, c))) / (b(r, c) / std::abs(b(r, c)));
        }
    }
    return (a - bAdj).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace pathsum
