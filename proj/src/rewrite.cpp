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

#include "pathsum/rewrite.hpp"

#include <algorithm>
#include <map>

namespace pathsum {

std::string ruleName(RuleKind rule) {
    switch (rule) {
        case RuleKind::Elim:
            return "Elim";
        case RuleKind::HH:
            return "HH";
        case RuleKind::Omega:
            return "Omega";
        case RuleKind::Case:
            return "Case";
        case RuleKind::Restrict:
            return "Restrict";
    }
    return "?";
}

std::string RuleApplication::str() const {
    std::string out = ruleName(rule);
    for (VarId v : eliminated) {
        out += " " + v.str();
    }
    for (const auto& [v, q] : substitutions) {
        out += "; subst " + v.str() + " <- " + q.str();
    }
    return out;
}

namespace {

const Dyadic kHalf = Dyadic::half();
const Dyadic kQuarter = Dyadic::quarter();
const Dyadic kThreeQuarters = Dyadic::threeQuarters();

bool isQuarterish(const Dyadic& c) {
    return c == kQuarter || c == kThreeQuarters;
}

// Per-path-variable facts gathered in one pass over the phase polynomial.
struct VarScan {
    bool inOutputs = false;
    bool inPhase = false;
    bool allHalf = true;       // every cofactor coefficient equals 1/2
    bool omegaShape = true;    // every non-constant cofactor coefficient equals 1/2
    bool quarterPair = false;  // some {y, x} term with an input x at 1/4 or 3/4
    Dyadic selfCoeff;          // coefficient of the bare monomial {y}
};

std::map<std::uint32_t, VarScan> scanVars(const PathSum& sum) {
    std::map<std::uint32_t, VarScan> scan;
    for (std::uint32_t y : sum.pathVars()) {
        scan.emplace(y, VarScan{});
    }
    for (const BoolPoly& f : sum.outputs()) {
        std::vector<VarId> vars;
        f.collectVars(vars);
        for (VarId v : vars) {
            if (v.isPath()) {
                scan.at(v.index()).inOutputs = true;
            }
        }
    }
    for (const auto& [mono, coeff] : sum.phase().terms()) {
        bool half = coeff == kHalf;
        bool inputPathPair = mono.degree() == 2 && mono.vars()[0].isInput() &&
                             mono.vars()[1].isPath() && isQuarterish(coeff);
        for (VarId v : mono.vars()) {
            if (!v.isPath()) {
                continue;
            }
            VarScan& e = scan.at(v.index());
            e.inPhase = true;
            if (!half) {
                e.allHalf = false;
            }
            if (inputPathPair) {
                e.quarterPair = true;
            }
            if (mono.degree() == 1) {
                e.selfCoeff = coeff;  // cofactor constant
            } else if (!half) {
                e.omegaShape = false;
            }
        }
    }
    return scan;
}

// For HH: the least path variable appearing as a bare monomial {yi} of Q'
// and in no other monomial of Q'.
std::optional<VarId> leastIsolatedLinearPathVar(const PhasePoly& cofactor) {
    std::optional<VarId> best;
    for (const auto& [mono, coeff] : cofactor.terms()) {
        if (mono.degree() == 1 && mono.vars()[0].isPath()) {
            VarId v = mono.vars()[0];
            if (best && *best <= v) {
                continue;
            }
            bool isolated = true;
            for (const auto& [other, c2] : cofactor.terms()) {
                if (other != mono && other.contains(v)) {
                    isolated = false;
                    break;
                }
            }
            if (isolated) {
                best = v;
            }
        }
    }
    return best;
}

BoolPoly cofactorMonomials(const PhasePoly& cofactor) {
    std::vector<Monomial> monos;
    monos.reserve(cofactor.size());
    for (const auto& [mono, coeff] : cofactor.terms()) {
        monos.push_back(mono);
    }
    return BoolPoly::fromMonomials(std::move(monos));
}

// Case-rule shape of one cofactor: all coefficients 1/2 except a single
// non-half term, which must be a bare input variable at 1/4 or 3/4
// (yi side), or additionally the constant at 1/4 or 3/4 (yj side).
struct CaseShape {
    VarId x;                 // the distinguished input variable
    Dyadic xCoeff;           // its raw coefficient
    Dyadic constCoeff;       // raw constant coefficient (0, 1/4, 1/2 or 3/4)
    std::vector<Monomial> halfMonos;  // the 1/2-weight monomials
};

std::optional<CaseShape> matchCaseCofactor(const PhasePoly& cofactor, bool wantConstQuarter) {
    CaseShape shape;
    bool haveX = false;
    for (const auto& [mono, coeff] : cofactor.terms()) {
        if (coeff == kHalf) {
            if (mono.isOne()) {
                shape.constCoeff = kHalf;  // folded into the Boolean part
            }
            shape.halfMonos.push_back(mono);
            continue;
        }
        if (mono.isOne() && isQuarterish(coeff)) {
            shape.constCoeff = coeff;
            continue;
        }
        if (mono.degree() == 1 && mono.vars()[0].isInput() && isQuarterish(coeff)) {
            if (haveX) {
                return std::nullopt;  // two distinguished variables
            }
            haveX = true;
            shape.x = mono.vars()[0];
            shape.xCoeff = coeff;
            continue;
        }
        return std::nullopt;
    }
    if (!haveX) {
        return std::nullopt;
    }
    bool constQuarterish = isQuarterish(shape.constCoeff);
    if (wantConstQuarter != constQuarterish) {
        return std::nullopt;
    }
    return shape;
}

// Decomposes the yi-side cofactor 1/4*x + 1/2*yj + (1/2)Q. Returns Q given
// the already-identified partner yj; the merged coefficient on {x} decides
// whether x itself belongs to Q (1/4: no, 3/4: yes).
std::optional<BoolPoly> caseBooleanPart(const CaseShape& shape, VarId partner) {
    std::vector<Monomial> monos;
    bool sawPartner = false;
    for (const Monomial& m : shape.halfMonos) {
        if (m.degree() == 1 && m.vars()[0] == partner) {
            sawPartner = true;
            continue;
        }
        if (m.contains(partner)) {
            return std::nullopt;  // partner must occur only linearly
        }
        monos.push_back(m);
    }
    if (!sawPartner) {
        return std::nullopt;
    }
    if (shape.xCoeff == kThreeQuarters) {
        monos.push_back(Monomial::var(shape.x));  // 3/4 = 1/4 + 1/2: x in Q
    }
    return BoolPoly::fromMonomials(std::move(monos));
}

// The yj side also carries the 1/4*(1 - x) part: raw constant 1/4 or 3/4
// (3/4 when Q' contains 1), raw x coefficient 3/4 or 1/4 (1/4 when x in Q').
std::optional<BoolPoly> caseBooleanPartPrimed(const CaseShape& shape, VarId partner) {
    std::vector<Monomial> monos;
    bool sawPartner = false;
    for (const Monomial& m : shape.halfMonos) {
        if (m.degree() == 1 && m.vars()[0] == partner) {
            sawPartner = true;
            continue;
        }
        if (m.contains(partner)) {
            return std::nullopt;
        }
        monos.push_back(m);
    }
    if (!sawPartner) {
        return std::nullopt;
    }
    if (shape.constCoeff == kThreeQuarters) {
        monos.push_back(Monomial::one());  // 3/4 = 1/4 + 1/2: constant in Q'
    }
    if (shape.xCoeff == kQuarter) {
        monos.push_back(Monomial::var(shape.x));  // 3/4 + 1/2 = 1/4: x in Q'
    }
    return BoolPoly::fromMonomials(std::move(monos));
}

struct CaseMatch {
    VarId x;
    BoolPoly q;        // from the yi side
    BoolPoly qPrimed;  // from the yj side
};

std::optional<CaseMatch> matchCase(const PathSum& sum, VarId yi, VarId yj) {
    auto [ci, ri] = sum.phase().cofactor(yi);
    auto shapeI = matchCaseCofactor(ci, /*wantConstQuarter=*/false);
    if (!shapeI) {
        return std::nullopt;
    }
    auto q = caseBooleanPart(*shapeI, yj);
    if (!q) {
        return std::nullopt;
    }
    auto [cj, rj] = sum.phase().cofactor(yj);
    auto shapeJ = matchCaseCofactor(cj, /*wantConstQuarter=*/true);
    if (!shapeJ || shapeJ->x != shapeI->x) {
        return std::nullopt;
    }
    auto qPrimed = caseBooleanPartPrimed(*shapeJ, yi);
    if (!qPrimed) {
        return std::nullopt;
    }
    return CaseMatch{shapeI->x, std::move(*q), std::move(*qPrimed)};
}

void applyElimInPlace(PathSum& sum, VarId y0) {
    if (sum.phase().containsVar(y0)) {
        throw NotApplicable(y0.str() + " occurs in the phase polynomial");
    }
    if (!sum.isInternal(y0)) {
        throw NotApplicable(y0.str() + " occurs in the outputs");
    }
    if (sum.ampExponent() < 2) {
        throw NotApplicable("amplitude exponent below 2");
    }
    sum.removePathVar(y0);
    sum.adjustAmpExponent(-2);
}

void applyHHInPlace(PathSum& sum, VarId y0, VarId yi, const LiftLimits& limits,
                    RuleApplication* app) {
    if (!sum.isInternal(y0)) {
        throw NotApplicable(y0.str() + " is not internal");
    }
    if (sum.ampExponent() < 2) {
        throw NotApplicable("amplitude exponent below 2");
    }
    auto [cofactor, rest] = sum.phase().cofactor(y0);
    if (cofactor.isZero()) {
        throw NotApplicable(y0.str() + " does not occur in the phase");
    }
    for (const auto& [mono, coeff] : cofactor.terms()) {
        if (coeff != kHalf) {
            throw NotApplicable("cofactor of " + y0.str() + " has coefficient " + coeff.str());
        }
    }
    BoolPoly qPrimed = cofactorMonomials(cofactor);
    if (!yi.isPath() || !qPrimed.contains(Monomial::var(yi))) {
        throw NotApplicable(yi.str() + " is not a linear monomial of the cofactor");
    }
    BoolPoly q = qPrimed + BoolPoly::var(yi);
    if (q.containsVar(yi)) {
        throw NotApplicable(yi.str() + " occurs elsewhere in the cofactor");
    }
    sum.setPhase(rest);
    sum.removePathVar(y0);
    sum.substitute(yi, q, limits);
    sum.removePathVar(yi);
    sum.adjustAmpExponent(-2);
    if (app) {
        app->eliminated = {y0, yi};
        app->substitutions = {{yi, q}};
    }
}

void applyOmegaInPlace(PathSum& sum, VarId y0, const LiftLimits& limits, RuleApplication* app) {
    if (!sum.isInternal(y0)) {
        throw NotApplicable(y0.str() + " is not internal");
    }
    if (sum.ampExponent() < 1) {
        throw NotApplicable("amplitude exponent below 1");
    }
    auto [cofactor, rest] = sum.phase().cofactor(y0);
    Dyadic constCoeff = cofactor.constantTerm();
    if (!isQuarterish(constCoeff)) {
        throw NotApplicable("cofactor constant of " + y0.str() + " is " + constCoeff.str());
    }
    std::vector<Monomial> qMonos;
    for (const auto& [mono, coeff] : cofactor.terms()) {
        if (mono.isOne()) {
            continue;
        }
        if (coeff != kHalf) {
            throw NotApplicable("cofactor of " + y0.str() + " has coefficient " + coeff.str());
        }
        qMonos.push_back(mono);
    }
    BoolPoly q = BoolPoly::fromMonomials(std::move(qMonos));

    // sum over y0 of e^{2 pi i (1/4 + (1/2)Q) y0} = sqrt(2) e^{2 pi i (1/8 + (3/4) lift Q)},
    // and the 3/4 constant is the mirrored instance with Q complemented.
    PhasePoly phase = rest;
    if (constCoeff == kQuarter) {
        phase.addTermMod1(Monomial::one(), Dyadic::eighth());
        phase.addMod1(scaledLift(kThreeQuarters, q, limits));
    } else {
        phase.addTermMod1(Monomial::one(), Dyadic(7, 3));
        phase.addMod1(scaledLift(kQuarter, q, limits));
    }
    sum.setPhase(std::move(phase));
    sum.removePathVar(y0);
    sum.adjustAmpExponent(-1);
    if (app) {
        app->eliminated = {y0};
    }
}

void applyCaseInPlace(PathSum& sum, VarId yi, VarId yj, const LiftLimits& limits,
                      RuleApplication* app) {
    if (yi == yj || !yi.isPath() || !yj.isPath()) {
        throw NotApplicable("Case needs two distinct path variables");
    }
    if (!sum.isInternal(yi) || !sum.isInternal(yj)) {
        throw NotApplicable("Case variables must both be internal");
    }
    if (sum.ampExponent() < 2) {
        throw NotApplicable("amplitude exponent below 2");
    }
    auto match = matchCase(sum, yi, yj);
    if (!match) {
        throw NotApplicable("phase does not match the Case pattern for " + yi.str() + ", " +
                            yj.str());
    }
    PhasePoly r = sum.phase().cofactor(yi).second;
    PhasePoly rPrimed = sum.phase().cofactor(yj).second;
    PhasePoly branch0 = r.substituted(yj, match->q, limits);
    PhasePoly branch1 = rPrimed.substituted(yi, match->qPrimed, limits);

    // (1 - x) branch0 + x branch1, multiplied before the mod-1 reduction:
    // the integer coefficients of (1 - x) matter as multipliers.
    PhasePoly oneMinusX =
        PhasePoly::term(Monomial::one(), Dyadic(1)) + PhasePoly::term(Monomial::var(match->x), Dyadic(-1));
    PhasePoly xPoly = PhasePoly::term(Monomial::var(match->x), Dyadic(1));
    PhasePoly phase = oneMinusX.times(branch0) + xPoly.times(branch1);
    sum.setPhase(phase.reducedMod1());
    sum.removePathVar(yi);
    sum.removePathVar(yj);
    sum.adjustAmpExponent(-2);
    if (app) {
        app->eliminated = {yi, yj};
        app->substitutions = {{yj, match->q}, {yi, match->qPrimed}};
    }
}

void applyMatchInPlace(PathSum& sum, const RuleMatch& match, const LiftLimits& limits,
                       std::vector<RuleApplication>* trace) {
    RuleApplication app;
    app.rule = match.rule;
    switch (match.rule) {
        case RuleKind::Elim:
            applyElimInPlace(sum, match.y0);
            app.eliminated = {match.y0};
            break;
        case RuleKind::HH:
            applyHHInPlace(sum, match.y0, match.partner, limits, &app);
            break;
        case RuleKind::Omega:
            applyOmegaInPlace(sum, match.y0, limits, &app);
            break;
        case RuleKind::Case:
            applyCaseInPlace(sum, match.y0, match.partner, limits, &app);
            break;
        case RuleKind::Restrict:
            throw NotApplicable("Restrict is not a searchable rule");
    }
    if (trace) {
        trace->push_back(std::move(app));
    }
}

}  // namespace

std::optional<RuleMatch> findMatch(const PathSum& sum) {
    auto scan = scanVars(sum);
    const bool canPair = sum.ampExponent() >= 2;

    if (canPair) {
        for (const auto& [y, e] : scan) {
            if (!e.inPhase && !e.inOutputs) {
                return RuleMatch{RuleKind::Elim, VarId::path(y)};
            }
        }
        for (const auto& [y, e] : scan) {
            if (e.inOutputs || !e.inPhase || !e.allHalf) {
                continue;
            }
            VarId y0 = VarId::path(y);
            auto [cofactor, rest] = sum.phase().cofactor(y0);
            if (auto yi = leastIsolatedLinearPathVar(cofactor)) {
                return RuleMatch{RuleKind::HH, y0, *yi};
            }
        }
    }
    if (sum.ampExponent() >= 1) {
        for (const auto& [y, e] : scan) {
            if (!e.inOutputs && e.inPhase && e.omegaShape && isQuarterish(e.selfCoeff)) {
                return RuleMatch{RuleKind::Omega, VarId::path(y)};
            }
        }
    }
    if (canPair) {
        for (const auto& [yiIdx, ei] : scan) {
            // The yi-side pattern needs a 1/4-weight {yi, x} term, the
            // yj-side a 1/4-weight bare {yj} term; prefilter on both.
            if (ei.inOutputs || !ei.inPhase || !ei.quarterPair) {
                continue;
            }
            VarId yi = VarId::path(yiIdx);
            for (const auto& [yjIdx, ej] : scan) {
                if (yjIdx == yiIdx || ej.inOutputs || !ej.inPhase ||
                    !isQuarterish(ej.selfCoeff)) {
                    continue;
                }
                VarId yj = VarId::path(yjIdx);
                if (matchCase(sum, yi, yj)) {
                    return RuleMatch{RuleKind::Case, yi, yj};
                }
            }
        }
    }
    return std::nullopt;
}

PathSum applyElim(const PathSum& sum, VarId y0) {
    PathSum out = sum;
    applyElimInPlace(out, y0);
    return out;
}

PathSum applyHH(const PathSum& sum, VarId y0, VarId yi, const LiftLimits& limits) {
    PathSum out = sum;
    applyHHInPlace(out, y0, yi, limits, nullptr);
    return out;
}

PathSum applyOmega(const PathSum& sum, VarId y0, const LiftLimits& limits) {
    PathSum out = sum;
    applyOmegaInPlace(out, y0, limits, nullptr);
    return out;
}

PathSum applyCase(const PathSum& sum, VarId yi, VarId yj, const LiftLimits& limits) {
    PathSum out = sum;
    applyCaseInPlace(out, yi, yj, limits, nullptr);
    return out;
}

void normalizeInPlace(PathSum& sum, std::vector<RuleApplication>* trace,
                      const LiftLimits& limits) {
    while (auto match = findMatch(sum)) {
        applyMatchInPlace(sum, *match, limits, trace);
    }
}

std::pair<PathSum, std::vector<RuleApplication>> normalize(const PathSum& sum,
                                                           const LiftLimits& limits) {
    PathSum out = sum;
    std::vector<RuleApplication> trace;
    normalizeInPlace(out, &trace, limits);
    return {std::move(out), std::move(trace)};
}

void restrictToIdentityInPlace(PathSum& sum, std::vector<RuleApplication>* trace,
                               const LiftLimits& limits) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < sum.qubitCount(); ++i) {
            const BoolPoly& f = sum.outputs()[i];
            BoolPoly target = sum.signature()[i].asPoly();
            if (f == target) {
                continue;
            }
            // Look for f = y ^ Q with y linear and not in Q; solve y = target ^ Q.
            std::optional<VarId> chosen;
            for (const Monomial& m : f.monomials()) {
                if (m.degree() == 1 && m.vars()[0].isPath()) {
                    VarId y = m.vars()[0];
                    if (chosen && *chosen <= y) {
                        continue;
                    }
                    if (!(f + BoolPoly::var(y)).containsVar(y)) {
                        chosen = y;
                    }
                }
            }
            if (!chosen) {
                continue;
            }
            BoolPoly substBy = f + BoolPoly::var(*chosen) + target;
            sum.substitute(*chosen, substBy, limits);
            sum.removePathVar(*chosen);
            if (trace) {
                trace->push_back({RuleKind::Restrict, {*chosen}, {{*chosen, substBy}}});
            }
            changed = true;
        }
    }
}

PathSum restrictToIdentity(const PathSum& sum, const LiftLimits& limits) {
    PathSum out = sum;
    restrictToIdentityInPlace(out, nullptr, limits);
    return out;
}

namespace {

// An inclusion-minimal monomial: no other monomial of q is a strict subset.
Monomial minimalMonomial(const BoolPoly& q) {
    Monomial candidate = q.monomials().front();
    for (const Monomial& m : q.monomials()) {
        if (m.degree() < candidate.degree() &&
            std::includes(candidate.vars().begin(), candidate.vars().end(), m.vars().begin(),
                          m.vars().end())) {
            candidate = m;
        }
    }
    return candidate;
}

// Assignment over the sum's input variables: the chosen monomial's variables
// set to 1, everything else 0. Evaluates any Boolean polynomial whose
// monomials are exactly the supersets... (only used where this forces 1).
Assignment witnessFromMonomial(const PathSum& sum, const Monomial& m) {
    Assignment a;
    for (VarId v : sum.inputVars()) {
        a[v] = false;
    }
    for (VarId v : m.vars()) {
        a[v] = true;
    }
    return a;
}

Assignment witnessForNonzero(const PathSum& sum, const BoolPoly& q) {
    if (q.contains(Monomial::one())) {
        return witnessFromMonomial(sum, Monomial::one());
    }
    return witnessFromMonomial(sum, minimalMonomial(q));
}

}  // namespace

std::optional<Assignment> negativityWitness(const PathSum& sum) {
    for (std::uint32_t y : sum.pathVars()) {
        VarId y0 = VarId::path(y);
        if (!sum.isInternal(y0)) {
            continue;
        }
        auto [cofactor, rest] = sum.phase().cofactor(y0);
        if (cofactor.isZero()) {
            continue;
        }
        bool clean = true;
        std::vector<Monomial> monos;
        for (const auto& [mono, coeff] : cofactor.terms()) {
            if (coeff != kHalf) {
                clean = false;
                break;
            }
            for (VarId v : mono.vars()) {
                if (v.isPath()) {
                    clean = false;
                    break;
                }
            }
            if (!clean) {
                break;
            }
            monos.push_back(mono);
        }
        if (!clean || monos.empty()) {
            continue;
        }
        BoolPoly q = BoolPoly::fromMonomials(std::move(monos));
        return witnessForNonzero(sum, q);
    }
    return std::nullopt;
}

Classification Classification::identityExact() {
    Classification c;
    c.kind = Kind::IdentityExact;
    return c;
}

Classification Classification::identityGlobalPhase(Dyadic theta) {
    Classification c;
    c.kind = Kind::IdentityGlobalPhase;
    c.globalPhase = std::move(theta);
    return c;
}

Classification Classification::notIdentity(std::optional<Assignment> witness, std::string note) {
    Classification c;
    c.kind = Kind::NotIdentity;
    c.witness = std::move(witness);
    c.note = std::move(note);
    return c;
}

Classification Classification::inconclusive(PathSum residual) {
    Classification c;
    c.kind = Kind::Inconclusive;
    c.residual = std::move(residual);
    return c;
}

Classification classify(const PathSum& sum) {
    if (sum.pathVarCount() == 0) {
        if (sum.ampExponent() != 0) {
            return Classification::notIdentity(
                std::nullopt, "no path variables left but amplitude exponent is " +
                                  std::to_string(sum.ampExponent()) +
                                  " (non-isometric scaling)");
        }
        for (std::size_t i = 0; i < sum.qubitCount(); ++i) {
            BoolPoly diff = sum.outputs()[i] + sum.signature()[i].asPoly();
            if (!diff.isZero()) {
                return Classification::notIdentity(
                    witnessForNonzero(sum, diff),
                    "output " + std::to_string(i + 1) + " differs from the input signature");
            }
        }
        if (sum.phase().isZero()) {
            return Classification::identityExact();
        }
        if (sum.phase().isConstant()) {
            return Classification::identityGlobalPhase(sum.phase().constantTerm());
        }
        // Diagonal but not constant: some input sees a non-trivial phase.
        const Dyadic constant = sum.phase().constantTerm();
        std::vector<Monomial> nonConst;
        for (const auto& [mono, coeff] : sum.phase().terms()) {
            if (!mono.isOne()) {
                nonConst.push_back(mono);
            }
        }
        Assignment witness;
        if (!constant.isZero()) {
            witness = witnessFromMonomial(sum, Monomial::one());
        } else {
            witness = witnessFromMonomial(sum, minimalMonomial(BoolPoly::fromMonomials(nonConst)));
        }
        return Classification::notIdentity(witness, "non-constant diagonal phase");
    }
    if (auto witness = negativityWitness(sum)) {
        return Classification::notIdentity(std::move(witness),
                                           "destructive interference on a residual variable");
    }
    return Classification::inconclusive(sum);
}

Classification decideClifford(const PathSum& sum, std::vector<RuleApplication>* trace,
                              const LiftLimits& limits) {
    for (const BoolPoly& f : sum.outputs()) {
        if (f.degree() > 1) {
            throw PreconditionViolated("outputs are not linear");
        }
    }
    if (sum.phase().order() > 2) {
        throw PreconditionViolated("phase polynomial has order above 2");
    }

    PathSum work = sum;
    const std::vector<std::uint32_t> vars = work.pathVars();
    const std::size_t m = vars.size();
    std::map<std::uint32_t, std::size_t> column;
    for (std::size_t j = 0; j < m; ++j) {
        column.emplace(vars[j], j);
    }

    // One GF(2) equation per coordinate: (path part of f_i) = f_i's input
    // part ^ target. Solve for the path variables; no solution at some input
    // means the target basis state is never produced there.
    struct Row {
        std::vector<std::uint8_t> lhs;
        BoolPoly rhs;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < work.qubitCount(); ++i) {
        Row row{std::vector<std::uint8_t>(m, 0), work.signature()[i].asPoly()};
        for (const Monomial& mono : work.outputs()[i].monomials()) {
            if (mono.degree() == 1 && mono.vars()[0].isPath()) {
                row.lhs[column.at(mono.vars()[0].index())] ^= 1;
            } else {
                row.rhs = row.rhs + BoolPoly::monomial(mono);
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::optional<std::size_t>> pivotRow(m);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r].lhs[col] == 0) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[rank]);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other != rank && rows[other].lhs[col] != 0) {
                for (std::size_t j = 0; j < m; ++j) {
                    rows[other].lhs[j] ^= rows[rank].lhs[j];
                }
                rows[other].rhs = rows[other].rhs + rows[rank].rhs;
            }
        }
        pivotRow[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (!rows[r].rhs.isZero()) {
            // 0 = rhs(x): every input with rhs = 1 misses the target state.
            return Classification::notIdentity(witnessForNonzero(work, rows[r].rhs),
                                               "output system has no solution");
        }
    }

    for (std::size_t col = 0; col < m; ++col) {
        if (!pivotRow[col]) {
            continue;
        }
        const Row& row = rows[*pivotRow[col]];
        BoolPoly expr = row.rhs;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != col && row.lhs[j] != 0) {
                expr = expr + BoolPoly::var(VarId::path(vars[j]));
            }
        }
        VarId y = VarId::path(vars[col]);
        work.substitute(y, expr, limits);
        work.removePathVar(y);
        if (trace) {
            trace->push_back({RuleKind::Restrict, {y}, {{y, expr}}});
        }
    }

    normalizeInPlace(work, trace, limits);
    return classify(work);
}

}  // namespace pathsum
