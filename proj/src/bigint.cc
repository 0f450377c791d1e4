// Copyright 2026 The pmlang Authors
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

#include "pmlang/bigint.h"

#include <cmath>
#include <stdexcept>

using namespace pmlang;

double pmlang::log2_big(const BigInt &x) {
    if (x <= 0) {
        throw std::domain_error("log2 of a non-positive integer");
    }
    size_t msb = boost::multiprecision::msb(x);
    if (msb < 63) {
        return std::log2(static_cast<double>(x.convert_to<uint64_t>()));
    }
    size_t shift = msb - 62;
    uint64_t top = static_cast<BigInt>(x >> shift).convert_to<uint64_t>();
    return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

size_t pmlang::ceil_log2(const BigInt &x) {
    if (x < 1) {
        throw std::domain_error("ceil_log2 requires x >= 1");
    }
    size_t msb = boost::multiprecision::msb(x);
    size_t lsb = boost::multiprecision::lsb(x);
    return msb == lsb ? msb : msb + 1;
}

double pmlang::ratio_to_double(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw std::domain_error("ratio with zero denominator");
    }
    if (num == 0) {
        return 0.0;
    }
    // Scale so the quotient carries at least 64 significant bits.
    long long shift = 64 + static_cast<long long>(boost::multiprecision::msb(den)) -
                      static_cast<long long>(boost::multiprecision::msb(num));
    if (shift < 0) {
        shift = 0;
    }
    BigInt q = (num << shift) / den;
    size_t msb = boost::multiprecision::msb(q);
    size_t drop = msb > 62 ? msb - 62 : 0;
    uint64_t top = static_cast<BigInt>(q >> drop).convert_to<uint64_t>();
    return std::ldexp(static_cast<double>(top), static_cast<int>(drop) - static_cast<int>(shift));
}

std::string pmlang::to_string(const BigInt &x) {
    return x.str();
}
