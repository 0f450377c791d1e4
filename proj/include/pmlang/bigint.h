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

#ifndef PMLANG_BIGINT_H
#define PMLANG_BIGINT_H

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmlang {

using BigInt = boost::multiprecision::cpp_int;

/// log2 of a positive integer, accurate to double precision at any magnitude.
double log2_big(const BigInt &x);

/// Smallest b with 2^b >= x, for x >= 1.
size_t ceil_log2(const BigInt &x);

/// num/den as a double, accurate to double precision at any magnitude.
double ratio_to_double(const BigInt &num, const BigInt &den);

std::string to_string(const BigInt &x);

}  // namespace pmlang

#endif
