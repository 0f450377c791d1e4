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

#ifndef PMLANG_AUTOMATA_H
#define PMLANG_AUTOMATA_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmlang/alphabet.h"
#include "pmlang/bigint.h"
#include "pmlang/word.h"

namespace pmlang {

using StateId = uint32_t;

struct NfaTransition {
    StateId from;
    /// Empty for an epsilon move.
    std::optional<SignedSymbol> symbol;
    StateId to;
    /// Caller-defined tag, e.g. the grammar rule the move came from.
    uint32_t label = 0;
};

/// Nondeterministic automaton over the 18-symbol alphabet, with epsilon moves.
struct Nfa {
    size_t num_states = 0;
    StateId start = 0;
    std::vector<bool> accepting;
    std::vector<NfaTransition> transitions;

    /// Throws std::invalid_argument if a transition or the start state
    /// references an undeclared state.
    void validate() const;

    /// Epsilon closure of a sorted state set; result is sorted.
    std::vector<StateId> closure(std::vector<StateId> states) const;
    bool accepts(std::span<const SignedSymbol> w) const;
};

/// Complete deterministic automaton. A dead state, if any, is non-accepting and
/// absorbs every symbol; it is kept for totality and flagged in `dead`.
struct Dfa {
    std::vector<std::array<StateId, NUM_SIGNED_SYMBOLS>> delta;
    StateId start = 0;
    std::vector<bool> accepting;
    std::optional<StateId> dead;

    size_t num_states() const {
        return delta.size();
    }
    /// States excluding the dead state.
    size_t num_live_states() const {
        return delta.size() - (dead.has_value() ? 1 : 0);
    }
    StateId run(std::span<const SignedSymbol> w) const;
    StateId run_from(StateId from, std::span<const SignedSymbol> w) const;
    bool accepts(std::span<const SignedSymbol> w) const {
        return accepting[run(w)];
    }
};

/// Subset construction over reachable subsets. The empty subset becomes the
/// dead state.
Dfa determinize(const Nfa &a);

struct Minimization {
    Dfa dfa;
    /// Block of the minimal automaton that each reachable input state fell in;
    /// unreachable input states map to nothing.
    std::vector<std::optional<StateId>> block_of;
};

/// Hopcroft partition refinement after pruning unreachable states. States of
/// the result are numbered in breadth-first order from the start state, with
/// symbols taken by alphabet index, so isomorphic inputs give identical output.
Minimization minimize_with_partition(const Dfa &d);
Dfa minimize(const Dfa &d);

/// Exact word counts of a regular language.
struct CountReport {
    struct Ratio {
        size_t n;
        BigInt numerator;    // N(n+1)
        BigInt denominator;  // N(n)
        double value;
    };
    std::vector<BigInt> counts;
    std::vector<BigInt> cumulative;
    /// N(n+1)/N(n) for n_max/2 <= n < n_max with N(n) > 0.
    std::vector<Ratio> growth_ratios;
    /// The last growth ratio; NaN if there are none.
    double dominant_rate_estimate;
};

/// N(0..n_max) by dynamic programming over the transition function.
CountReport count_words(const Dfa &d, size_t n_max);

struct HvBitCurve {
    /// B(n) = ceil(log2(cumulative(n))); zero when the cumulative count is zero.
    std::vector<size_t> bits;
    /// B(n+1) - B(n).
    std::vector<long long> first_differences;
};

HvBitCurve hv_bits(const CountReport &c);

/// Graphviz rendering. `labels[q]` names state q; accepting states get double
/// circles. Parallel edges are merged into one edge listing their symbols.
std::string to_dot(const Dfa &d, const std::vector<std::string> &labels);

}  // namespace pmlang

#endif
