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

// Runs every acceptance criterion with its default limits and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <iostream>

#include "pmlang/verify.h"

int main() {
    int failed = 0;
    for (int id = 1; id <= pmlang::NUM_CRITERIA; id++) {
        pmlang::CriterionResult r = pmlang::check_criterion(id);
        std::cout << pmlang::format_result(r) << std::flush;
        failed += !r.passed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
