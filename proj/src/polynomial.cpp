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

#include "pathsum/polynomial.hpp"

#include <algorithm>

namespace pathsum {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::vector<VarId> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return Monomial(std::move(vars));
}

bool Monomial::contains(VarId v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

Monomial Monomial::times(const Monomial& rhs) const {
    std::vector<VarId> merged;
    merged.reserve(vars_.size() + rhs.vars_.size());
    std::set_union(vars_.begin(), vars_.end(), rhs.vars_.begin(), rhs.vars_.end(),
                   std::back_inserter(merged));
    return Monomial(std::move(merged));
}

Monomial Monomial::without(VarId v) const {
    std::vector<VarId> kept;
    kept.reserve(vars_.size());
    for (VarId w : vars_) {
        if (w != v) {
            kept.push_back(w);
        }
    }
    return Monomial(std::move(kept));
}

std::string Monomial::str(const std::string& sep) const {
    if (vars_.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += vars_[i].str();
    }
    return out;
}

// ---------------------------------------------------------------- BoolPoly

BoolPoly BoolPoly::monomial(Monomial m) {
    BoolPoly p;
    p.monomials_.push_back(std::move(m));
    return p;
}

BoolPoly BoolPoly::fromMonomials(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    BoolPoly p;
    for (std::size_t i = 0; i < monomials.size();) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            p.monomials_.push_back(std::move(monomials[i]));
        }
        i = j;
    }
    return p;
}

std::optional<bool> BoolPoly::asConstant() const {
    if (isZero()) {
        return false;
    }
    if (isOne()) {
        return true;
    }
    return std::nullopt;
}

std::size_t BoolPoly::degree() const {
    std::size_t d = 0;
    for (const Monomial& m : monomials_) {
        d = std::max(d, m.degree());
    }
    return d;
}

bool BoolPoly::contains(const Monomial& m) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

bool BoolPoly::containsVar(VarId v) const {
    for (const Monomial& m : monomials_) {
        if (m.contains(v)) {
            return true;
        }
    }
    return false;
}

void BoolPoly::collectVars(std::vector<VarId>& out) const {
    for (const Monomial& m : monomials_) {
        out.insert(out.end(), m.vars().begin(), m.vars().end());
    }
}

BoolPoly BoolPoly::operator+(const BoolPoly& rhs) const {
    // Symmetric difference of two sorted monomial lists.
    BoolPoly out;
    out.monomials_.reserve(monomials_.size() + rhs.monomials_.size());
    auto a = monomials_.begin(), ae = monomials_.end();
    auto b = rhs.monomials_.begin(), be = rhs.monomials_.end();
    while (a != ae && b != be) {
        if (*a < *b) {
            out.monomials_.push_back(*a++);
        } else if (*b < *a) {
            out.monomials_.push_back(*b++);
        } else {
            ++a;
            ++b;
        }
    }
    out.monomials_.insert(out.monomials_.end(), a, ae);
    out.monomials_.insert(out.monomials_.end(), b, be);
    return out;
}

BoolPoly BoolPoly::operator*(const BoolPoly& rhs) const {
    std::vector<Monomial> products;
    products.reserve(monomials_.size() * rhs.monomials_.size());
    for (const Monomial& a : monomials_) {
        for (const Monomial& b : rhs.monomials_) {
            products.push_back(a.times(b));
        }
    }
    return fromMonomials(std::move(products));
}

std::pair<BoolPoly, BoolPoly> BoolPoly::cofactor(VarId v) const {
    std::vector<Monomial> quot, rem;
    for (const Monomial& m : monomials_) {
        if (m.contains(v)) {
            quot.push_back(m.without(v));
        } else {
            rem.push_back(m);
        }
    }
    return {fromMonomials(std::move(quot)), fromMonomials(std::move(rem))};
}

BoolPoly BoolPoly::substituted(VarId v, const BoolPoly& q) const {
    if (q.containsVar(v)) {
        throw SubstitutionCycle("substituting " + v.str() + " with a polynomial containing it");
    }
    auto [quot, rem] = cofactor(v);
    if (quot.isZero()) {
        return *this;
    }
    return rem + quot * q;
}

BoolPoly BoolPoly::renamed(const std::map<VarId, VarId>& renaming) const {
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (const Monomial& m : monomials_) {
        std::vector<VarId> vars = m.vars();
        for (VarId& v : vars) {
            if (auto it = renaming.find(v); it != renaming.end()) {
                v = it->second;
            }
        }
        out.push_back(Monomial::of(std::move(vars)));
    }
    return fromMonomials(std::move(out));
}

bool BoolPoly::eval(const Assignment& a) const {
    bool acc = false;
    for (const Monomial& m : monomials_) {
        bool value = true;
        for (VarId v : m.vars()) {
            auto it = a.find(v);
            if (it == a.end()) {
                throw UnboundVariable("no value for " + v.str());
            }
            value = value && it->second;
        }
        acc = acc != value;
    }
    return acc;
}

std::string BoolPoly::str() const {
    if (monomials_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (i > 0) {
            out += " + ";
        }
        out += monomials_[i].str();
    }
    return out;
}

// --------------------------------------------------------------- PhasePoly

PhasePoly PhasePoly::constant(const Dyadic& c) {
    return term(Monomial::one(), c);
}

PhasePoly PhasePoly::term(Monomial m, Dyadic c) {
    PhasePoly p;
    if (!c.isZero()) {
        p.terms_.emplace(std::move(m), std::move(c));
    }
    return p;
}

Dyadic PhasePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Dyadic() : it->second;
}

bool PhasePoly::containsVar(VarId v) const {
    for (const auto& [m, c] : terms_) {
        if (m.contains(v)) {
            return true;
        }
    }
    return false;
}

void PhasePoly::collectVars(std::vector<VarId>& out) const {
    for (const auto& [m, c] : terms_) {
        out.insert(out.end(), m.vars().begin(), m.vars().end());
    }
}

bool PhasePoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
}

PhasePoly PhasePoly::operator+(const PhasePoly& rhs) const {
    PhasePoly out = *this;
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.isZero()) {
                out.terms_.erase(it);
            }
        }
    }
    return out;
}

PhasePoly PhasePoly::operator-(const PhasePoly& rhs) const {
    return *this + rhs.scaled(Dyadic(-1));
}

PhasePoly PhasePoly::scaled(const Dyadic& c) const {
    PhasePoly out;
    if (c.isZero()) {
        return out;
    }
    for (const auto& [m, coeff] : terms_) {
        out.terms_.emplace(m, coeff * c);
    }
    return out;
}

PhasePoly PhasePoly::times(const PhasePoly& rhs) const {
    PhasePoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma.times(mb);
            Dyadic c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(m), c);
            if (!inserted) {
                it->second = it->second + c;
                if (it->second.isZero()) {
                    out.terms_.erase(it);
                }
            }
        }
    }
    return out;
}

void PhasePoly::addTermMod1(const Monomial& m, const Dyadic& c) {
    if (c.isZero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
    }
    it->second = it->second.reducedMod1();
    if (it->second.isZero()) {
        terms_.erase(it);
    }
}

void PhasePoly::addMod1(const PhasePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        addTermMod1(m, c);
    }
}

PhasePoly PhasePoly::reducedMod1() const {
    PhasePoly out;
    for (const auto& [m, c] : terms_) {
        Dyadic r = c.reducedMod1();
        if (!r.isZero()) {
            out.terms_.emplace(m, std::move(r));
        }
    }
    return out;
}

bool PhasePoly::isReducedMod1() const {
    for (const auto& [m, c] : terms_) {
        if (!c.isReducedMod1()) {
            return false;
        }
    }
    return true;
}

std::pair<PhasePoly, PhasePoly> PhasePoly::cofactor(VarId v) const {
    PhasePoly quot, rem;
    for (const auto& [m, c] : terms_) {
        if (m.contains(v)) {
            quot.terms_.emplace(m.without(v), c);
        } else {
            rem.terms_.emplace(m, c);
        }
    }
    return {std::move(quot), std::move(rem)};
}

PhasePoly PhasePoly::substituted(VarId v, const BoolPoly& q, const LiftLimits& limits) const {
    if (q.containsVar(v)) {
        throw SubstitutionCycle("substituting " + v.str() + " with a polynomial containing it");
    }
    auto [quot, rem] = cofactor(v);
    if (quot.isZero()) {
        return *this;
    }
    PhasePoly out = rem;
    for (const auto& [m, c] : quot.terms_) {
        PhasePoly lifted = scaledLift(c, q, limits);
        for (const auto& [lm, lc] : lifted.terms_) {
            out.addTermMod1(lm.times(m), lc);
        }
    }
    return out.reducedMod1();
}

PhasePoly PhasePoly::renamed(const std::map<VarId, VarId>& renaming) const {
    PhasePoly out;
    for (const auto& [m, c] : terms_) {
        std::vector<VarId> vars = m.vars();
        for (VarId& v : vars) {
            if (auto it = renaming.find(v); it != renaming.end()) {
                v = it->second;
            }
        }
        auto [it, inserted] = out.terms_.emplace(Monomial::of(std::move(vars)), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.isZero()) {
                out.terms_.erase(it);
            }
        }
    }
    return out;
}

Dyadic PhasePoly::evalExact(const Assignment& a) const {
    Dyadic acc;
    for (const auto& [m, c] : terms_) {
        bool value = true;
        for (VarId v : m.vars()) {
            auto it = a.find(v);
            if (it == a.end()) {
                throw UnboundVariable("no value for " + v.str());
            }
            value = value && it->second;
        }
        if (value) {
            acc = acc + c;
        }
    }
    return acc;
}

Dyadic PhasePoly::eval(const Assignment& a) const {
    return evalExact(a).reducedMod1();
}

std::int64_t PhasePoly::order() const {
    std::int64_t best = 0;
    for (const auto& [m, c] : terms_) {
        Dyadic r = c.reducedMod1();
        if (r.isZero()) {
            continue;
        }
        best = std::max(best, r.exponent() + std::int64_t(m.degree()) - 1);
    }
    return best;
}

std::string PhasePoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) {
            out += " + ";
        }
        first = false;
        if (m.isOne()) {
            out += c.str();
        } else if (c == Dyadic(1)) {
            out += m.str();
        } else {
            out += c.str() + "*" + m.str();
        }
    }
    return out;
}

// ----------------------------------------------------------------- lifting

namespace {

// Shared recursion for lift and scaledLift. Folds over the monomials of q:
//   lift(m + rest) = m + lift(rest) - 2 lift(m * rest)
// which at scale c emits c*m and recurses with c and -2c. Since coefficients
// are tracked exactly, passing stopAtMod1 prunes branches whose scale became
// an integer (they vanish mod 1); this bounds the depth by the exponent of c.
struct LiftWorker {
    const LiftLimits& limits;
    bool stopAtMod1;
    std::size_t work = 0;
    PhasePoly acc;

    void run(const Dyadic& c, const BoolPoly& q) {
        if (q.isZero() || c.isZero()) {
            return;
        }
        if (stopAtMod1 && c.exponent() == 0) {
            return;  // integer scale: contributes nothing mod 1
        }
        if (++work > limits.workBudget) {
            throw LiftBlowup("lift work budget exceeded (" +
                             std::to_string(limits.workBudget) + " terms)");
        }
        const Monomial& head = q.monomials().front();
        BoolPoly rest = BoolPoly::fromMonomials(
            std::vector<Monomial>(q.monomials().begin() + 1, q.monomials().end()));
        if (stopAtMod1) {
            acc.addTermMod1(head, c);
        } else {
            acc = acc + PhasePoly::term(head, c);
        }
        run(c, rest);
        run(c.timesPow2(1) * Dyadic(-1), BoolPoly::monomial(head) * rest);
    }
};

}  // namespace

PhasePoly lift(const BoolPoly& p, const LiftLimits& limits) {
    if (p.size() > limits.monomialCap) {
        throw LiftBlowup("lifting a polynomial with " + std::to_string(p.size()) +
                         " monomials exceeds the cap of " + std::to_string(limits.monomialCap));
    }
    LiftWorker worker{limits, /*stopAtMod1=*/false, 0, {}};
    worker.run(Dyadic(1), p);
    return worker.acc;
}

PhasePoly scaledLift(const Dyadic& c, const BoolPoly& q, const LiftLimits& limits) {
    if (q.size() > limits.monomialCap) {
        throw LiftBlowup("lifting a polynomial with " + std::to_string(q.size()) +
                         " monomials exceeds the cap of " + std::to_string(limits.monomialCap));
    }
    LiftWorker worker{limits, /*stopAtMod1=*/true, 0, {}};
    worker.run(c.reducedMod1(), q);
    return worker.acc.reducedMod1();
}

}  // namespace pathsum
