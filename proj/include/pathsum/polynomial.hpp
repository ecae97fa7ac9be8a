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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathsum/dyadic.hpp"
#include "pathsum/errors.hpp"

namespace pathsum {

/// A variable of a polynomial context: either a circuit input x_i or a path
/// variable y_j introduced by a Hadamard. All inputs order before all path
/// variables, then by index.
class VarId {
  public:
    enum class Kind : std::uint8_t { Input = 0, Path = 1 };

    constexpr VarId() : code_(0) {}

    static constexpr VarId input(std::uint32_t index) { return VarId(index); }
    static constexpr VarId path(std::uint32_t index) { return VarId(kPathBit | index); }

    constexpr Kind kind() const { return (code_ & kPathBit) != 0 ? Kind::Path : Kind::Input; }
    constexpr bool isPath() const { return kind() == Kind::Path; }
    constexpr bool isInput() const { return kind() == Kind::Input; }
    constexpr std::uint32_t index() const { return code_ & ~kPathBit; }

    auto operator<=>(const VarId&) const = default;

    /// "x3" / "y1" with 1-based display indices.
    std::string str() const {
        return (isPath() ? "y" : "x") + std::to_string(index() + 1);
    }

  private:
    static constexpr std::uint32_t kPathBit = 0x80000000u;
    explicit constexpr VarId(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

using Assignment = std::map<VarId, bool>;

/// A multilinear monomial: a finite set of distinct variables. The empty set
/// is the constant monomial 1. Ordered graded-lexicographically (degree first,
/// then the sorted variable list), which fixes the canonical term order used
/// for printing and rule matching.
class Monomial {
  public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v) { return Monomial(std::vector<VarId>{v}); }
    /// Builds from an arbitrary list; sorts and deduplicates (x^2 = x).
    static Monomial of(std::vector<VarId> vars);

    std::size_t degree() const { return vars_.size(); }
    bool isOne() const { return vars_.empty(); }
    bool contains(VarId v) const;
    const std::vector<VarId>& vars() const { return vars_; }

    /// Product in the multilinear quotient: set union.
    Monomial times(const Monomial& rhs) const;
    /// Copy with one variable removed (no-op if absent).
    Monomial without(VarId v) const;

    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& rhs) const {
        if (auto c = vars_.size() <=> rhs.vars_.size(); c != 0) {
            return c;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (auto c = vars_[i] <=> rhs.vars_[i]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

    std::string str(const std::string& sep = "*") const;

  private:
    explicit Monomial(std::vector<VarId> sorted) : vars_(std::move(sorted)) {}
    std::vector<VarId> vars_;  // strictly ascending
};

/// A Boolean polynomial in algebraic normal form: the XOR of a canonical set
/// of monomials. Structural equality coincides with functional equality.
class BoolPoly {
  public:
    BoolPoly() = default;
    static BoolPoly zero() { return BoolPoly(); }
    static BoolPoly one() { return BoolPoly::monomial(Monomial::one()); }
    static BoolPoly var(VarId v) { return BoolPoly::monomial(Monomial::var(v)); }
    static BoolPoly constant(bool b) { return b ? one() : zero(); }
    static BoolPoly monomial(Monomial m);
    /// XOR of an arbitrary monomial list (duplicates cancel mod 2).
    static BoolPoly fromMonomials(std::vector<Monomial> monomials);

    bool isZero() const { return monomials_.empty(); }
    bool isOne() const { return monomials_.size() == 1 && monomials_[0].isOne(); }
    std::optional<bool> asConstant() const;
    std::size_t size() const { return monomials_.size(); }
    std::size_t degree() const;
    bool isLinear() const { return degree() <= 1; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    bool contains(const Monomial& m) const;
    bool containsVar(VarId v) const;
    void collectVars(std::vector<VarId>& out) const;

    BoolPoly operator+(const BoolPoly& rhs) const;  // XOR
    BoolPoly operator*(const BoolPoly& rhs) const;

    /// Unique decomposition p = v * quotient + remainder with v absent from both.
    std::pair<BoolPoly, BoolPoly> cofactor(VarId v) const;
    /// p with v replaced by q; throws SubstitutionCycle if v occurs in q.
    BoolPoly substituted(VarId v, const BoolPoly& q) const;
    /// Renames variables through the map (absent keys are kept).
    BoolPoly renamed(const std::map<VarId, VarId>& renaming) const;

    bool eval(const Assignment& a) const;

    bool operator==(const BoolPoly&) const = default;
    auto operator<=>(const BoolPoly&) const = default;

    std::string str() const;

  private:
    std::vector<Monomial> monomials_;  // strictly ascending (graded-lex)
};

/// Size guards for lifting Boolean polynomials into the dyadic ring. Lifting
/// is exponential in the worst case; the caps turn a blow-up into a
/// predictable LiftBlowup error instead of an out-of-memory crash.
struct LiftLimits {
    std::size_t monomialCap = 256;       // max monomials in the lifted polynomial
    std::size_t workBudget = 16u << 20;  // max emitted terms across one lift
};

/// A multilinear polynomial with dyadic coefficients — the phase P of a path
/// sum, with e^{2 pi i P} the per-path weight. Inside path sums every
/// coefficient is kept reduced mod 1; lift() returns unreduced
/// integer-coefficient polynomials and is the one deliberate exception.
class PhasePoly {
  public:
    PhasePoly() = default;
    static PhasePoly zero() { return PhasePoly(); }
    static PhasePoly constant(const Dyadic& c);
    static PhasePoly term(Monomial m, Dyadic c);

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Monomial, Dyadic>& terms() const { return terms_; }
    Dyadic coefficient(const Monomial& m) const;
    bool containsVar(VarId v) const;
    void collectVars(std::vector<VarId>& out) const;

    /// Constant term, and whether the polynomial is a bare constant.
    Dyadic constantTerm() const { return coefficient(Monomial::one()); }
    bool isConstant() const;

    PhasePoly operator+(const PhasePoly& rhs) const;
    PhasePoly operator-(const PhasePoly& rhs) const;
    PhasePoly scaled(const Dyadic& c) const;
    /// Full multilinear product (coefficients multiply exactly; reduce after).
    PhasePoly times(const PhasePoly& rhs) const;

    /// Adds c * m into this polynomial, reducing the touched coefficient mod 1.
    void addTermMod1(const Monomial& m, const Dyadic& c);
    /// Adds every term of rhs, reducing mod 1.
    void addMod1(const PhasePoly& rhs);

    PhasePoly reducedMod1() const;
    bool isReducedMod1() const;

    std::pair<PhasePoly, PhasePoly> cofactor(VarId v) const;
    /// Substitution via lifting: with p = v*C + R the result is lift(q)*C + R,
    /// coefficients reduced mod 1.
    PhasePoly substituted(VarId v, const BoolPoly& q, const LiftLimits& limits = {}) const;
    PhasePoly renamed(const std::map<VarId, VarId>& renaming) const;

    /// Pointwise evaluation, reduced mod 1.
    Dyadic eval(const Assignment& a) const;
    /// Exact evaluation without the mod-1 reduction (for lifted polynomials).
    Dyadic evalExact(const Assignment& a) const;

    /// Max over terms of exponent + degree - 1, with order(0) = 0 by
    /// convention. Expects coefficients reduced mod 1 (odd numerators).
    std::int64_t order() const;

    bool operator==(const PhasePoly&) const = default;

    std::string str() const;

  private:
    std::map<Monomial, Dyadic> terms_;  // no zero coefficients
};

/// The unique multilinear integer-coefficient polynomial agreeing with p on
/// all 0/1 assignments. Coefficients are NOT reduced mod 1 (they would all
/// vanish); scale the result or use scaledLift for phase arithmetic.
PhasePoly lift(const BoolPoly& p, const LiftLimits& limits = {});

/// (c * lift(q)) reduced mod 1, computed without materializing lift(q): with
/// c = a/2^b only monomial products of at most b factors survive mod 1, so the
/// cost is bounded by |q| choose <= b rather than 2^|q|.
PhasePoly scaledLift(const Dyadic& c, const BoolPoly& q, const LiftLimits& limits = {});

}  // namespace pathsum
