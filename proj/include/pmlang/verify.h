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

#ifndef PMLANG_VERIFY_H
#define PMLANG_VERIFY_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pmlang {

/// Depth limits and sample sizes of the verification criteria.
struct VerifyOptions {
    size_t equivalence_length = 4;
    size_t random_words = 100000;
    size_t random_max_length = 12;
    size_t lemma_length = 5;
    size_t count_length = 1000;
    size_t count_spread_window = 100;
    double count_spread_tolerance = 1e-6;
    size_t hv_window_begin = 50;
    size_t hv_window_end = 200;
    size_t maga_length = 5;
    size_t mara_length = 4;
    size_t scaling_qubits = 64;
    size_t quantum_runs = 10000;
    size_t quantum_length = 12;
    size_t quantum_trials = 1000;
    uint64_t seed = 2026;
};

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::vector<std::string> details;
    double seconds;
};

constexpr int NUM_CRITERIA = 9;

/// Runs criterion `id` in 1..9. Throws std::out_of_range for other ids.
CriterionResult check_criterion(int id, const VerifyOptions &options = {});

/// Criteria covered by a suite name: grammar, semantics, automata, maga,
/// quantum or all. Throws std::invalid_argument for unknown names.
std::vector<int> criteria_of_suite(std::string_view suite);

/// `PASS [3] title (0.01 s)` followed by indented detail lines.
std::string format_result(const CriterionResult &r);

}  // namespace pmlang

#endif
