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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathsum/path_sum.hpp"

namespace pathsum {

/// The reduction rules. Every application strictly decreases the number of
/// live path variables, so normalization terminates in at most m steps.
///
///   Elim  — a path variable absent from phase and outputs sums to a factor 2.
///   HH    — an internal variable with cofactor (1/2)(yi + Q) forces yi = Q
///           by interference; yi is substituted away.
///   Omega — an internal variable with cofactor 1/4 + (1/2)Q contributes a
///           1/8 phase and a scaled lift of Q.
///   Case  — two internal variables matching complementary patterns on an
///           input variable x split the sum into the x = 0 / x = 1 branches.
///
/// Restrict tags the isometry-restriction substitutions (solving an output
/// coordinate for a path variable), which also remove one variable each.
enum class RuleKind { Elim, HH, Omega, Case, Restrict };

std::string ruleName(RuleKind rule);

/// One rewrite step, serializable to a line such as
/// "HH y1 y2; subst y2 <- x3 + x1*x2" for replayable reduction logs.
struct RuleApplication {
    RuleKind rule;
    std::vector<VarId> eliminated;
    std::vector<std::pair<VarId, BoolPoly>> substitutions;

    std::string str() const;
};

/// A matched rule instance. y0 is the variable summed out (for Case: yi),
/// partner is HH's yi / Case's yj, caseInput is Case's input variable x.
struct RuleMatch {
    RuleKind rule;
    VarId y0;
    VarId partner{};
    VarId caseInput{};
};

/// Deterministic search in priority order Elim > HH > Omega > Case; within a
/// rule, candidates are scanned in ascending variable order, and HH picks the
/// least eligible yi in the cofactor.
std::optional<RuleMatch> findMatch(const PathSum& sum);

// Rule applications. Each validates its pattern and throws NotApplicable
// (with the reason) on a mismatch. HH is the fused form "remove y0,
// substitute yi, remove yi, s -= 2": the printed rule leaves a dead variable
// behind, and fusing the cleanup keeps s = m on canonical inputs.
PathSum applyElim(const PathSum& sum, VarId y0);
PathSum applyHH(const PathSum& sum, VarId y0, VarId yi, const LiftLimits& limits = {});
PathSum applyOmega(const PathSum& sum, VarId y0, const LiftLimits& limits = {});
PathSum applyCase(const PathSum& sum, VarId yi, VarId yj, const LiftLimits& limits = {});

/// Applies findMatch to a fixpoint; at most m rule applications.
void normalizeInPlace(PathSum& sum, std::vector<RuleApplication>* trace = nullptr,
                      const LiftLimits& limits = {});
std::pair<PathSum, std::vector<RuleApplication>> normalize(const PathSum& sum,
                                                           const LiftLimits& limits = {});

/// Isometry restriction: for every coordinate whose output has the form
/// y ^ Q with y not in Q, substitutes y so the output becomes the coordinate'
/// s own input (variable or constant) and drops y; s is unchanged.
/// Coordinates that cannot be reified are skipped. Sound for identity
/// checking only when the caller asserts the sum is well-formed.
void restrictToIdentityInPlace(PathSum& sum, std::vector<RuleApplication>* trace = nullptr,
                               const LiftLimits& limits = {});
PathSum restrictToIdentity(const PathSum& sum, const LiftLimits& limits = {});

/// Searches for an internal variable whose cofactor is (1/2)Q with Q a
/// non-zero Boolean polynomial over input variables only. Such a sum
/// annihilates every input with Q(x) = 1, so it cannot be the identity;
/// returns an input assignment with Q = 1 (all-zeros when Q has a constant
/// term, else the variables of an inclusion-minimal monomial).
std::optional<Assignment> negativityWitness(const PathSum& sum);

/// Verdict for "is this (already normalized) sum the identity?".
struct Classification {
    enum class Kind { IdentityExact, IdentityGlobalPhase, NotIdentity, Inconclusive };

    Kind kind = Kind::Inconclusive;
    Dyadic globalPhase;                 // nonzero for IdentityGlobalPhase
    std::optional<Assignment> witness;  // for NotIdentity, when derivable
    std::string note;
    std::optional<PathSum> residual;  // for Inconclusive

    static Classification identityExact();
    static Classification identityGlobalPhase(Dyadic theta);
    static Classification notIdentity(std::optional<Assignment> witness, std::string note);
    static Classification inconclusive(PathSum residual);
};

Classification classify(const PathSum& sum);

/// Complete decision procedure for sums with linear outputs and phase order
/// at most 2 (canonical Clifford miters): solves outputs = signature for the
/// path variables by Gaussian elimination over GF(2), substitutes the
/// solution, then normalizes and classifies. Never returns Inconclusive on
/// its domain. Throws PreconditionViolated outside it.
Classification decideClifford(const PathSum& sum, std::vector<RuleApplication>* trace = nullptr,
                              const LiftLimits& limits = {});

}  // namespace pathsum
