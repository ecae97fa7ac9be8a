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

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <string>

namespace pathsum {

using BigInt = boost::multiprecision::cpp_int;

/// An exact dyadic fraction num / 2^exp with an arbitrary-precision numerator.
///
/// Values are kept normalized with a minimal exponent: the numerator is odd
/// unless the value is 0/1. Phase-polynomial coefficients additionally live in
/// the dyadics mod 1 (a global phase of e^{2 pi i} is the identity); use
/// reducedMod1() to obtain the canonical representative 0 <= num < 2^exp.
class Dyadic {
  public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long value) : num_(value), exp_(0) {}  // NOLINT: implicit on purpose
    Dyadic(BigInt numerator, std::int64_t exponent) : num_(std::move(numerator)), exp_(exponent) {
        normalize();
    }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }
    static Dyadic half() { return Dyadic(1, 1); }
    static Dyadic quarter() { return Dyadic(1, 2); }
    static Dyadic threeQuarters() { return Dyadic(3, 2); }
    static Dyadic eighth() { return Dyadic(1, 3); }

    const BigInt& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return exp_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    Dyadic operator+(const Dyadic& rhs) const {
        if (exp_ >= rhs.exp_) {
            return Dyadic(num_ + (rhs.num_ << (exp_ - rhs.exp_)), exp_);
        }
        return Dyadic((num_ << (rhs.exp_ - exp_)) + rhs.num_, rhs.exp_);
    }

    Dyadic operator-(const Dyadic& rhs) const { return *this + (-rhs); }

    Dyadic operator*(const Dyadic& rhs) const { return Dyadic(num_ * rhs.num_, exp_ + rhs.exp_); }

    /// Multiplication by 2^k (k may be negative down to -exp without leaving the dyadics).
    Dyadic timesPow2(std::int64_t k) const {
        if (k >= 0) {
            return Dyadic(num_ << k, exp_);
        }
        return Dyadic(num_, exp_ - k);
    }

    /// Canonical representative mod 1: numerator reduced into [0, 2^exp).
    Dyadic reducedMod1() const {
        if (exp_ == 0) {
            return Dyadic();
        }
        BigInt modulus = BigInt(1) << exp_;
        BigInt r = num_ % modulus;
        if (r < 0) {
            r += modulus;
        }
        return Dyadic(std::move(r), exp_);
    }

    bool isReducedMod1() const {
        return num_ >= 0 && (exp_ == 0 ? num_ == 0 : num_ < (BigInt(1) << exp_));
    }

    bool operator==(const Dyadic& rhs) const = default;

    /// Value as a double; exact when the numerator fits the mantissa.
    double toDouble() const { return num_.convert_to<double>() * std::exp2(-double(exp_)); }

    /// Renders "3/8", "1", "0", "-5/4", ... (denominator written in full).
    std::string str() const {
        if (exp_ == 0) {
            return num_.str();
        }
        return num_.str() + "/" + (BigInt(1) << exp_).str();
    }

  private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_;
    std::int64_t exp_;  // >= 0
};

}  // namespace pathsum
