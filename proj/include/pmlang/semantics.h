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

#ifndef PMLANG_SEMANTICS_H
#define PMLANG_SEMANTICS_H

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmlang/alphabet.h"
#include "pmlang/word.h"

namespace pmlang {

/// What a history says about the next outcome of one observable.
enum class Prediction : int8_t { Minus = -1, Random = 0, Plus = 1 };

std::string_view name_of(Prediction p);

/// A fully determined context together with its member values (in member order).
struct ContextAssignment {
    const Context *context;
    std::array<int8_t, 3> values;
};

/// Number of distinct reachable determination states: the empty state, the 18
/// single-observable states and the 6 * 4 context assignments.
constexpr size_t NUM_SEMANTIC_CLASSES = 1 + NUM_SIGNED_SYMBOLS + NUM_CONTEXTS * 4;

/// The set of determined observables and their values after a history.
///
/// Reachable states determine nothing, a single observable, or exactly one
/// full context whose values multiply to the context sign.
class DeterminationState {
   public:
    DeterminationState() = default;

    /// +1 or -1 if determined, 0 otherwise.
    int8_t raw_value(Observable o) const {
        return values_[index_of(o)];
    }
    bool is_determined(Observable o) const {
        return raw_value(o) != 0;
    }
    size_t determined_count() const;
    bool empty() const {
        return determined_count() == 0;
    }

    /// Whether the state has one of the three reachable shapes.
    bool satisfies_invariants() const;

    /// Compact index in [0, NUM_SEMANTIC_CLASSES): 0 for empty, 1 + symbol
    /// index for a single determined observable, 19 + 4 * context id + value
    /// bits for a full context. Throws std::logic_error on invalid states.
    size_t class_id() const;
    static DeterminationState from_class_id(size_t id);

    /// `A=+1 B=+1 C=+1`, or `-` when nothing is determined.
    std::string describe() const;

    bool operator==(const DeterminationState &other) const = default;

   private:
    friend std::optional<DeterminationState> step(const DeterminationState &st, SignedSymbol m);
    std::array<int8_t, NUM_OBSERVABLES> values_{};
};

/// `Inconsistent` is represented by an empty optional.
using StepResult = std::optional<DeterminationState>;

DeterminationState initial_state();

/// Applies one measurement. Returns nothing when `m` contradicts the current
/// value of its observable. Otherwise observables incompatible with `m` are
/// dropped, `m` is recorded, and a context with two determined members gets its
/// third member filled in.
StepResult step(const DeterminationState &st, SignedSymbol m);

/// Final state of `w`, or nothing if some step is inconsistent.
StepResult run(std::span<const SignedSymbol> w);
/// Zero-based index of the first inconsistent measurement, if any.
std::optional<size_t> first_inconsistency(std::span<const SignedSymbol> w);

bool is_consistent(std::span<const SignedSymbol> w);
/// Parses then checks. Throws ParseError on malformed input.
bool is_consistent(std::string_view text);

Prediction predicted_value(const DeterminationState &st, Observable s);
std::optional<ContextAssignment> determined_context(const DeterminationState &st);

/// Both leave `s` undetermined or both determine it with the same value.
/// Throws std::domain_error if either word is inconsistent.
bool agree(std::span<const SignedSymbol> u, std::span<const SignedSymbol> v, Observable s);
bool agree(std::string_view u, std::string_view v, Observable s);

struct TraceRow {
    SignedSymbol measured;
    /// Set for consistent steps.
    std::optional<DeterminationState> after;
    /// For the inconsistent step: the value the observable was determined with.
    int8_t expected = 0;
};

/// Step-by-step evaluation, stopping after the first inconsistent step.
std::vector<TraceRow> trace(std::span<const SignedSymbol> w);

/// Human-readable trace table, one line per measurement.
std::string format_trace(std::span<const SignedSymbol> w);

/// Walks the prefix tree of consistent words of length <= max_length in
/// depth-first pre-order with children taken by alphabet index, calling `visit`
/// once per word including the empty word.
void for_each_consistent(
    size_t max_length,
    const std::function<void(std::span<const SignedSymbol>, const DeterminationState &)> &visit);

}  // namespace pmlang

#endif
