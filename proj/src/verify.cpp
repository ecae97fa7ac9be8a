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

#include "pathsum/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pathsum/oracle.hpp"

namespace pathsum {

std::string outcomeName(Outcome o) {
    switch (o) {
        case Outcome::Equal:
            return "equal";
        case Outcome::EqualUpToGlobalPhase:
            return "equal-up-to-global-phase";
        case Outcome::NotEqual:
            return "not-equal";
        case Outcome::Unknown:
            return "unknown";
    }
    return "?";
}

std::string Verdict::reportLine() const {
    std::ostringstream out;
    out << "VERDICT " << outcomeName(outcome) << " qubits=" << stats.qubits
        << " pathvars=" << stats.pathVariables << " time_ms=" << stats.timeMs;
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at{};
    bool active = false;

    static Deadline in(std::int64_t ms) {
        Deadline d;
        if (ms > 0) {
            d.active = true;
            d.at = Clock::now() + std::chrono::milliseconds(ms);
        }
        return d;
    }
    void check() const {
        if (active && Clock::now() > at) {
            throw TimeoutExpired("verification deadline exceeded");
        }
    }
};

bool cliffordEligible(const PathSum& s) {
    for (const BoolPoly& f : s.outputs()) {
        if (f.degree() > 1) {
            return false;
        }
    }
    return s.phase().order() <= 2;
}

// Snaps a phase in turns onto the dyadic grid of the sum's coefficients.
std::optional<Dyadic> snapTurns(double turns, std::int64_t maxExp) {
    turns -= std::floor(turns);
    const std::int64_t exp = std::min<std::int64_t>(std::max<std::int64_t>(maxExp, 3), 40);
    double scaled = turns * std::exp2(double(exp));
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-6 * std::exp2(double(exp))) {
        return std::nullopt;
    }
    auto num = static_cast<long long>(rounded);
    return Dyadic(BigInt(num), exp).reducedMod1();
}

// Dense expansion of whatever survived reduction, compared against the
// identity on the signature's domain.
Verdict bruteForceFallback(const PathSum& residual, Verdict v) {
    DenseOperator m = pathSumToMatrix(residual);
    const std::size_t n = residual.qubitCount();
    const std::size_t dim = std::size_t{1} << n;
    DenseOperator expected = DenseOperator::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i) {
            if (!residual.signature()[i].isVar()) {
                bool bit = (col & (std::size_t{1} << (n - 1 - i))) != 0;
                valid = bit == residual.signature()[i].constantValue();
            }
        }
        if (valid) {
            expected(col, col) = 1.0;
        }
    }
    if (approxEqual(m, expected, 1e-9)) {
        v.outcome = Outcome::Equal;
        v.reason = "dense fallback: residual acts as the identity";
        return v;
    }
    if (approxEqual(m, expected, 1e-9, /*upToGlobalPhase=*/true)) {
        // Recover the dyadic global phase from any valid diagonal entry.
        for (std::size_t col = 0; col < dim; ++col) {
            if (expected(col, col) != 0.0 && std::abs(m(col, col)) > 0.5) {
                double turns = std::arg(m(col, col)) / (2.0 * std::numbers::pi);
                std::int64_t maxExp = 0;
                for (const auto& [mono, c] : residual.phase().terms()) {
                    maxExp = std::max(maxExp, c.exponent());
                }
                if (auto theta = snapTurns(turns, maxExp)) {
                    v.outcome = Outcome::EqualUpToGlobalPhase;
                    v.globalPhase = *theta;
                    v.reason = "dense fallback: identity up to a global phase";
                    return v;
                }
                break;
            }
        }
        v.outcome = Outcome::Unknown;
        v.reason = "dense fallback: global phase is not dyadic at the probed precision";
        return v;
    }
    // Find the worst column as a counterexample.
    std::size_t worst = 0;
    double worstErr = -1;
    for (std::size_t col = 0; col < dim; ++col) {
        double err = (m.col(col) - expected.col(col)).cwiseAbs().maxCoeff();
        if (err > worstErr) {
            worstErr = err;
            worst = col;
        }
    }
    Assignment witness;
    for (std::size_t i = 0; i < n; ++i) {
        if (residual.signature()[i].isVar()) {
            witness[residual.signature()[i].variable()] =
                (worst & (std::size_t{1} << (n - 1 - i))) != 0;
        }
    }
    v.outcome = Outcome::NotEqual;
    v.witness = std::move(witness);
    v.reason = "dense fallback: column " + std::to_string(worst) + " deviates by " +
               std::to_string(worstErr);
    return v;
}

Verdict runMiter(PathSum acc, const std::vector<Gate>& gates, const VerifyOptions& opts) {
    const auto start = Clock::now();
    Deadline deadline = Deadline::in(opts.timeoutMs);
    Verdict v;
    v.stats.qubits = acc.qubitCount();

    try {
        for (const Gate& g : gates) {
            deadline.check();
            acc.applyGate(g, opts.lift);
            if (opts.eagerReduction) {
                normalizeInPlace(acc, &v.trace, opts.lift);
            }
        }
        v.stats.pathVariables = acc.pathVarsAllocated();
        if (opts.isometryRestriction && opts.assumeWellFormedSpec) {
            deadline.check();
            restrictToIdentityInPlace(acc, &v.trace, opts.lift);
        }
        deadline.check();
        normalizeInPlace(acc, &v.trace, opts.lift);
        deadline.check();

        Classification cls = classify(acc);
        if (cls.kind == Classification::Kind::Inconclusive && cliffordEligible(acc)) {
            cls = decideClifford(acc, &v.trace, opts.lift);
        }
        switch (cls.kind) {
            case Classification::Kind::IdentityExact:
                v.outcome = Outcome::Equal;
                break;
            case Classification::Kind::IdentityGlobalPhase:
                v.outcome = Outcome::EqualUpToGlobalPhase;
                v.globalPhase = cls.globalPhase;
                break;
            case Classification::Kind::NotIdentity:
                v.outcome = Outcome::NotEqual;
                v.witness = cls.witness;
                v.reason = cls.note;
                break;
            case Classification::Kind::Inconclusive: {
                deadline.check();
                const PathSum& residual = cls.residual ? *cls.residual : acc;
                if (residual.qubitCount() <=
                        static_cast<std::size_t>(opts.bruteForceFallbackMaxQubits) &&
                    residual.pathVarCount() <= 22) {
                    v = bruteForceFallback(residual, std::move(v));
                } else {
                    v.outcome = Outcome::Unknown;
                    v.reason = "irreducible residual: " + residual.str();
                }
                break;
            }
        }
    } catch (const TimeoutExpired& e) {
        v.outcome = Outcome::Unknown;
        v.reason = e.what();
    } catch (const LiftBlowup& e) {
        v.outcome = Outcome::Unknown;
        v.reason = e.what();
    }
    v.stats.timeMs =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - start)
            .count();
    return v;
}

}  // namespace

Verdict verifyAgainstSpec(const Circuit& c, const PathSum& spec, const VerifyOptions& opts) {
    if (c.qubitCount() != spec.qubitCount()) {
        throw ArityMismatch("circuit has " + std::to_string(c.qubitCount()) +
                            " qubits, spec has " + std::to_string(spec.qubitCount()));
    }
    c.validate();
    return runMiter(spec, inverse(c).gates, opts);
}

Verdict verifyCircuits(const Circuit& c1, const Circuit& c2, const VerifyOptions& opts) {
    if (c1.qubitNames != c2.qubitNames || c1.primaryInput != c2.primaryInput) {
        throw ArityMismatch("circuits must declare the same qubits and primary inputs");
    }
    c1.validate();
    c2.validate();
    Circuit shell = c1;
    shell.gates.clear();
    PathSum acc = interpretCircuit(shell);
    std::vector<Gate> gates = c1.gates;
    Circuit inv = inverse(c2);
    gates.insert(gates.end(), inv.gates.begin(), inv.gates.end());
    return runMiter(std::move(acc), gates, opts);
}

}  // namespace pathsum
