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
#include <optional>
#include <string>
#include <vector>

#include "pathsum/circuit.hpp"
#include "pathsum/polynomial.hpp"

namespace pathsum {

/// One coordinate of an input signature: a distinct input variable or a
/// Boolean constant (constants model qubits initialized to a known state).
class SignatureEntry {
  public:
    static SignatureEntry var(VarId v) { return SignatureEntry(v, false); }
    static SignatureEntry constant(bool b) { return SignatureEntry(std::nullopt, b); }

    bool isVar() const { return var_.has_value(); }
    VarId variable() const { return *var_; }
    bool constantValue() const { return const_; }

    /// The entry as an output polynomial (x_i, 0 or 1).
    BoolPoly asPoly() const {
        return isVar() ? BoolPoly::var(*var_) : BoolPoly::constant(const_);
    }

    bool operator==(const SignatureEntry&) const = default;

  private:
    SignatureEntry(std::optional<VarId> v, bool b) : var_(v), const_(b) {}
    std::optional<VarId> var_;
    bool const_ = false;
};

/// A path sum: the operator
///
///   |x> -> 2^{-s/2} * sum over path variables y of e^{2 pi i P(x,y)} |f(x,y)>
///
/// with input signature x (variables or constants), phase polynomial P over
/// the dyadics mod 1, and one Boolean output polynomial per qubit. The
/// amplitude exponent s is tracked independently of the path-variable count m
/// because the rewrite rules move them at different rates; freshly interpreted
/// circuits satisfy s = m.
///
/// Values are plain value types: operations either return new sums or mutate
/// a locally owned copy. There is no shared or global state, so distinct sums
/// may be used freely across threads.
class PathSum {
  public:
    /// |x1..xn> -> |x1..xn>.
    static PathSum identity(std::size_t n);
    /// The primitive sum of a single gate on its own qubits (arity inferred).
    static PathSum ofGate(const Gate& g);
    /// Assembles a sum from parsed parts (used by the spec-file frontend).
    static PathSum fromParts(std::vector<SignatureEntry> signature,
                             std::vector<std::uint32_t> pathVars, std::int64_t ampExp,
                             PhasePoly phase, std::vector<BoolPoly> outputs);

    std::size_t qubitCount() const { return signature_.size(); }
    const std::vector<SignatureEntry>& signature() const { return signature_; }
    const std::vector<std::uint32_t>& pathVars() const { return pathVars_; }
    std::size_t pathVarCount() const { return pathVars_.size(); }
    std::int64_t ampExponent() const { return ampExp_; }
    const PhasePoly& phase() const { return phase_; }
    const std::vector<BoolPoly>& outputs() const { return outputs_; }
    /// Total path variables ever allocated (not decreased by rewrites).
    std::uint32_t pathVarsAllocated() const { return nextPath_; }

    /// Applies a gate at its operand coordinates, as if composing with the
    /// gate's sum embedded in identity wires. Mutates this value.
    void applyGate(const Gate& g, const LiftLimits& limits = {});

    /// Parallel composition on a distinct subsystem; rhs variables are
    /// renamed fresh.
    PathSum tensor(const PathSum& rhs) const;

    /// Sequential composition: the operator of the result is
    /// U_second * U_this. Signatures must be compatible: each constant input
    /// coordinate of `second` requires this sum's output polynomial to be the
    /// same constant. Throws ArityMismatch / IncompatibleSignature.
    PathSum composedWith(const PathSum& second, const LiftLimits& limits = {}) const;

    /// Renumbers path variables in first-occurrence order (phase terms in
    /// canonical monomial order, then outputs left to right); idempotent.
    PathSum canonicalized() const;

    /// Path variables absent from every output polynomial.
    std::vector<VarId> internalVars() const;
    bool isInternal(VarId v) const;

    /// All input variables mentioned by the signature, ascending.
    std::vector<VarId> inputVars() const;

    /// Outputs equal the signature coordinate-wise.
    bool outputsMatchSignature() const;

    /// Pretty form, e.g.
    /// |x1 x2> -> 1/sqrt(2^2) sum[y1 y2] e^{2pi i (1/2*x1*y1)} |x1 (x1+x2)>.
    std::string str() const;

    bool operator==(const PathSum&) const = default;

    // --- engine entry points (used by the rewrite module) ---

    void removePathVar(VarId v);
    void adjustAmpExponent(std::int64_t delta) { ampExp_ += delta; }
    /// Substitutes v := q in phase and outputs (v itself is kept declared).
    void substitute(VarId v, const BoolPoly& q, const LiftLimits& limits = {});
    void setPhase(PhasePoly p) { phase_ = std::move(p); }
    void setOutput(std::size_t i, BoolPoly p) { outputs_[i] = std::move(p); }

    /// Debug check: declared-variable closure, s >= 0, phase reduced mod 1.
    void checkInvariants() const;

  private:
    PathSum() = default;
    VarId freshPathVar();

    std::vector<SignatureEntry> signature_;
    std::vector<std::uint32_t> pathVars_;  // sorted, live path-variable indices
    std::int64_t ampExp_ = 0;              // s: global amplitude 2^{-s/2}
    PhasePoly phase_;
    std::vector<BoolPoly> outputs_;
    std::uint32_t nextPath_ = 0;
};

/// Interprets a circuit gate by gate. Qubits outside the primary-input set
/// get constant-0 signature entries. With reduceEagerly set, the sum is
/// normalized by the rewrite engine after every gate; traces are appended to
/// `trace` when given. Without eager reduction the result is the canonical
/// sum with s = m = number of Hadamard gates.
struct RuleApplication;  // rewrite.hpp
PathSum interpretCircuit(const Circuit& c, bool reduceEagerly = false,
                         const LiftLimits& limits = {},
                         std::vector<RuleApplication>* trace = nullptr);

}  // namespace pathsum
