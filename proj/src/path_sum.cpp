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

#include "pathsum/path_sum.hpp"

#include <algorithm>
#include <set>

#include "pathsum/rewrite.hpp"

namespace pathsum {

namespace {

// Temporary input-variable indices used while composing two sums whose
// variable universes overlap. No real input index reaches this range.
constexpr std::uint32_t kTempInputBase = 1u << 30;

}  // namespace

PathSum PathSum::identity(std::size_t n) {
    PathSum s;
    s.signature_.reserve(n);
    s.outputs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        VarId v = VarId::input(static_cast<std::uint32_t>(i));
        s.signature_.push_back(SignatureEntry::var(v));
        s.outputs_.push_back(BoolPoly::var(v));
    }
    return s;
}

PathSum PathSum::ofGate(const Gate& g) {
    Gate local = g;
    for (std::size_t i = 0; i < local.qubits.size(); ++i) {
        local.qubits[i] = static_cast<std::uint32_t>(i);
    }
    PathSum s = identity(local.qubits.size());
    s.applyGate(local);
    return s;
}

PathSum PathSum::fromParts(std::vector<SignatureEntry> signature,
                           std::vector<std::uint32_t> pathVars, std::int64_t ampExp,
                           PhasePoly phase, std::vector<BoolPoly> outputs) {
    if (outputs.size() != signature.size()) {
        throw ArityMismatch("output count differs from the qubit count");
    }
    PathSum s;
    s.signature_ = std::move(signature);
    std::sort(pathVars.begin(), pathVars.end());
    pathVars.erase(std::unique(pathVars.begin(), pathVars.end()), pathVars.end());
    s.pathVars_ = std::move(pathVars);
    s.ampExp_ = ampExp;
    s.phase_ = phase.reducedMod1();
    s.outputs_ = std::move(outputs);
    s.nextPath_ = s.pathVars_.empty() ? 0 : s.pathVars_.back() + 1;
    s.checkInvariants();
    return s;
}

VarId PathSum::freshPathVar() {
    VarId v = VarId::path(nextPath_++);
    pathVars_.push_back(v.index());
    return v;
}

void PathSum::removePathVar(VarId v) {
    auto it = std::find(pathVars_.begin(), pathVars_.end(), v.index());
    if (it == pathVars_.end() || !v.isPath()) {
        throw NotApplicable(v.str() + " is not a live path variable");
    }
    pathVars_.erase(it);
}

void PathSum::substitute(VarId v, const BoolPoly& q, const LiftLimits& limits) {
    phase_ = phase_.substituted(v, q, limits);
    for (BoolPoly& f : outputs_) {
        if (f.containsVar(v)) {
            f = f.substituted(v, q);
        }
    }
}

void PathSum::applyGate(const Gate& g, const LiftLimits& limits) {
    g.validate(qubitCount());
    auto diagonal = [&](const Dyadic& angle, const BoolPoly& f) {
        phase_.addMod1(scaledLift(angle, f, limits));
    };
    switch (g.kind) {
        case Gate::Kind::H: {
            BoolPoly& out = outputs_[g.qubits[0]];
            VarId y = freshPathVar();
            // 1/2 * lift(f) * y mod 1 keeps exactly f's monomials at weight 1/2.
            for (const Monomial& m : out.monomials()) {
                phase_.addTermMod1(m.times(Monomial::var(y)), Dyadic::half());
            }
            out = BoolPoly::var(y);
            ampExp_ += 1;
            break;
        }
        case Gate::Kind::X:
            outputs_[g.qubits[0]] = outputs_[g.qubits[0]] + BoolPoly::one();
            break;
        case Gate::Kind::Y:
            phase_.addTermMod1(Monomial::one(), Dyadic::quarter());
            diagonal(Dyadic::half(), outputs_[g.qubits[0]]);
            outputs_[g.qubits[0]] = outputs_[g.qubits[0]] + BoolPoly::one();
            break;
        case Gate::Kind::Z:
            diagonal(Dyadic::half(), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::S:
            diagonal(Dyadic::quarter(), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::Sdg:
            diagonal(Dyadic::threeQuarters(), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::T:
            diagonal(Dyadic::eighth(), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::Tdg:
            diagonal(Dyadic(7, 3), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::Rk:
            diagonal(Dyadic(1, g.level), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::Rkdg:
            diagonal(Dyadic((BigInt(1) << g.level) - 1, g.level), outputs_[g.qubits[0]]);
            break;
        case Gate::Kind::Cnot:
            outputs_[g.qubits[1]] = outputs_[g.qubits[1]] + outputs_[g.qubits[0]];
            break;
        case Gate::Kind::Cz:
            diagonal(Dyadic::half(), outputs_[g.qubits[0]] * outputs_[g.qubits[1]]);
            break;
        case Gate::Kind::Swap:
            std::swap(outputs_[g.qubits[0]], outputs_[g.qubits[1]]);
            break;
        case Gate::Kind::Tof: {
            BoolPoly product = BoolPoly::one();
            for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
                product = product * outputs_[g.qubits[i]];
            }
            BoolPoly& target = outputs_[g.qubits.back()];
            target = target + product;
            break;
        }
    }
}

PathSum PathSum::tensor(const PathSum& rhs) const {
    PathSum out = *this;
    // Fresh names for rhs variables on the new subsystem.
    std::uint32_t nextInput = 0;
    for (const SignatureEntry& e : signature_) {
        if (e.isVar()) {
            nextInput = std::max(nextInput, e.variable().index() + 1);
        }
    }
    std::map<VarId, VarId> renaming;
    for (const SignatureEntry& e : rhs.signature_) {
        if (e.isVar()) {
            renaming.emplace(e.variable(), VarId::input(nextInput++));
        }
    }
    for (std::uint32_t y : rhs.pathVars_) {
        renaming.emplace(VarId::path(y), out.freshPathVar());
    }
    for (std::size_t i = 0; i < rhs.signature_.size(); ++i) {
        const SignatureEntry& e = rhs.signature_[i];
        out.signature_.push_back(
            e.isVar() ? SignatureEntry::var(renaming.at(e.variable())) : e);
        out.outputs_.push_back(rhs.outputs_[i].renamed(renaming));
    }
    out.phase_.addMod1(rhs.phase_.renamed(renaming));
    out.ampExp_ += rhs.ampExp_;
    return out;
}

PathSum PathSum::composedWith(const PathSum& second, const LiftLimits& limits) const {
    if (second.qubitCount() != qubitCount()) {
        throw ArityMismatch("composing sums on " + std::to_string(qubitCount()) + " and " +
                            std::to_string(second.qubitCount()) + " qubits");
    }
    PathSum out = *this;

    // Rename second's variables away from ours: path variables become fresh,
    // input-signature variables become temporaries that are substituted below.
    std::map<VarId, VarId> renaming;
    for (std::uint32_t y : second.pathVars_) {
        renaming.emplace(VarId::path(y), out.freshPathVar());
    }
    std::vector<std::optional<VarId>> temp(second.qubitCount());
    for (std::size_t i = 0; i < second.qubitCount(); ++i) {
        const SignatureEntry& e = second.signature_[i];
        if (e.isVar()) {
            temp[i] = VarId::input(kTempInputBase + static_cast<std::uint32_t>(i));
            renaming.emplace(e.variable(), *temp[i]);
        } else {
            // Constant input coordinate: only compatible when our output is
            // that same constant (anything else would post-select).
            if (outputs_[i] != BoolPoly::constant(e.constantValue())) {
                throw IncompatibleSignature(
                    i, "coordinate " + std::to_string(i + 1) + ": constant input " +
                           (e.constantValue() ? "1" : "0") + " composed with output " +
                           outputs_[i].str());
            }
        }
    }

    PhasePoly phase = second.phase_.renamed(renaming);
    std::vector<BoolPoly> outputs;
    outputs.reserve(second.outputs_.size());
    for (const BoolPoly& f : second.outputs_) {
        outputs.push_back(f.renamed(renaming));
    }
    for (std::size_t i = 0; i < second.qubitCount(); ++i) {
        if (!temp[i]) {
            continue;
        }
        phase = phase.substituted(*temp[i], outputs_[i], limits);
        for (BoolPoly& f : outputs) {
            if (f.containsVar(*temp[i])) {
                f = f.substituted(*temp[i], outputs_[i]);
            }
        }
    }

    out.phase_.addMod1(phase);
    out.outputs_ = std::move(outputs);
    out.ampExp_ += second.ampExp_;
    return out;
}

PathSum PathSum::canonicalized() const {
    std::map<VarId, VarId> renaming;
    std::uint32_t next = 0;
    auto visit = [&](VarId v) {
        if (v.isPath() && !renaming.contains(v)) {
            renaming.emplace(v, VarId::path(next++));
        }
    };
    for (const auto& [m, c] : phase_.terms()) {
        for (VarId v : m.vars()) {
            visit(v);
        }
    }
    for (const BoolPoly& f : outputs_) {
        for (const Monomial& m : f.monomials()) {
            for (VarId v : m.vars()) {
                visit(v);
            }
        }
    }
    for (std::uint32_t y : pathVars_) {
        visit(VarId::path(y));
    }

    PathSum out = *this;
    out.phase_ = phase_.renamed(renaming);
    for (BoolPoly& f : out.outputs_) {
        f = f.renamed(renaming);
    }
    out.pathVars_.clear();
    for (std::uint32_t i = 0; i < next; ++i) {
        out.pathVars_.push_back(i);
    }
    out.nextPath_ = next;
    return out;
}

std::vector<VarId> PathSum::internalVars() const {
    std::vector<VarId> out;
    for (std::uint32_t y : pathVars_) {
        VarId v = VarId::path(y);
        if (isInternal(v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool PathSum::isInternal(VarId v) const {
    for (const BoolPoly& f : outputs_) {
        if (f.containsVar(v)) {
            return false;
        }
    }
    return true;
}

std::vector<VarId> PathSum::inputVars() const {
    std::vector<VarId> out;
    for (const SignatureEntry& e : signature_) {
        if (e.isVar()) {
            out.push_back(e.variable());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool PathSum::outputsMatchSignature() const {
    for (std::size_t i = 0; i < signature_.size(); ++i) {
        if (outputs_[i] != signature_[i].asPoly()) {
            return false;
        }
    }
    return true;
}

std::string PathSum::str() const {
    auto ketPoly = [](const BoolPoly& f) {
        std::string s;
        const auto& ms = f.monomials();
        if (ms.empty()) {
            return std::string("0");
        }
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (i > 0) {
                s += "+";
            }
            s += ms[i].str();
        }
        if (ms.size() > 1) {
            s = "(" + s + ")";
        }
        return s;
    };

    std::string in = "|";
    for (std::size_t i = 0; i < signature_.size(); ++i) {
        if (i > 0) {
            in += " ";
        }
        in += signature_[i].isVar() ? signature_[i].variable().str()
                                    : (signature_[i].constantValue() ? "1" : "0");
    }
    in += ">";

    std::string mid;
    if (ampExp_ != 0) {
        mid += "1/sqrt(2^" + std::to_string(ampExp_) + ") ";
    }
    if (!pathVars_.empty()) {
        mid += "sum[";
        for (std::size_t i = 0; i < pathVars_.size(); ++i) {
            if (i > 0) {
                mid += " ";
            }
            mid += VarId::path(pathVars_[i]).str();
        }
        mid += "] ";
    }
    if (!phase_.isZero()) {
        mid += "e^{2pi i (" + phase_.str() + ")} ";
    }

    std::string outKet = "|";
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
        if (i > 0) {
            outKet += " ";
        }
        outKet += ketPoly(outputs_[i]);
    }
    outKet += ">";

    return in + " -> " + mid + outKet;
}

void PathSum::checkInvariants() const {
    if (ampExp_ < 0) {
        throw Error("negative amplitude exponent");
    }
    if (!phase_.isReducedMod1()) {
        throw Error("phase polynomial not reduced mod 1");
    }
    std::set<VarId> declared;
    std::set<VarId> sigVars;
    for (const SignatureEntry& e : signature_) {
        if (e.isVar()) {
            if (!sigVars.insert(e.variable()).second) {
                throw Error("repeated signature variable " + e.variable().str());
            }
            declared.insert(e.variable());
        }
    }
    for (std::uint32_t y : pathVars_) {
        declared.insert(VarId::path(y));
    }
    std::vector<VarId> used;
    phase_.collectVars(used);
    for (const BoolPoly& f : outputs_) {
        f.collectVars(used);
    }
    for (VarId v : used) {
        if (!declared.contains(v)) {
            throw Error("undeclared variable " + v.str() + " in phase or outputs");
        }
    }
}

PathSum interpretCircuit(const Circuit& c, bool reduceEagerly, const LiftLimits& limits,
                         std::vector<RuleApplication>* trace) {
    c.validate();
    PathSum s = [&] {
        PathSum base = PathSum::identity(0);
        std::vector<SignatureEntry> signature;
        std::vector<BoolPoly> outputs;
        std::uint32_t nextInput = 0;
        for (std::size_t i = 0; i < c.qubitCount(); ++i) {
            if (c.primaryInput[i]) {
                VarId v = VarId::input(nextInput++);
                signature.push_back(SignatureEntry::var(v));
                outputs.push_back(BoolPoly::var(v));
            } else {
                signature.push_back(SignatureEntry::constant(false));
                outputs.push_back(BoolPoly::zero());
            }
        }
        return PathSum::fromParts(std::move(signature), {}, 0, PhasePoly::zero(),
                                  std::move(outputs));
    }();
    for (const Gate& g : c.gates) {
        s.applyGate(g, limits);
        if (reduceEagerly) {
            normalizeInPlace(s, trace, limits);
        }
    }
    return s;
}

}  // namespace pathsum
