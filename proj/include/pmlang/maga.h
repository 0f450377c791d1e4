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

#ifndef PMLANG_MAGA_H
#define PMLANG_MAGA_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmlang/alphabet.h"
#include "pmlang/automata.h"
#include "pmlang/bigint.h"
#include "pmlang/semantics.h"
#include "pmlang/word.h"

namespace pmlang {

/// A determined context plus the values of its first two members. There are
/// 6 * 2 * 2 of them.
struct ClassTriple {
    const Context *context;
    int8_t v1;
    int8_t v2;

    /// 4 * context id + value bits; matches the context part of
    /// DeterminationState::class_id.
    size_t index() const;
    static ClassTriple at(size_t index);
    /// The third member's value implied by the context sign.
    int8_t v3() const {
        return static_cast<int8_t>(context->sign * v1 * v2);
    }
    /// `col2(+1,-1)`.
    std::string str() const;
    bool operator==(const ClassTriple &other) const {
        return index() == other.index();
    }
};

constexpr size_t NUM_CLASS_TRIPLES = NUM_CONTEXTS * 4;

/// The class of a word whose final state fully determines a context.
/// Throws std::domain_error for inconsistent words and for words that leave no
/// context determined.
ClassTriple classify(std::span<const SignedSymbol> w);

/// One length-2 word per class, measuring the first two members of the context
/// with the class values. Ordered by class index.
std::vector<Word> representatives();

struct DisagreementWitness {
    size_t i;
    size_t j;
    Observable s;
    Prediction left;
    Prediction right;
};

struct ClaimReport {
    std::vector<DisagreementWitness> witnesses;
    std::vector<std::pair<size_t, size_t>> missing;
    bool ok() const {
        return missing.empty() && witnesses.size() == NUM_CLASS_TRIPLES * (NUM_CLASS_TRIPLES - 1) / 2;
    }
};

/// For every pair of representatives, the first observable (canonical order)
/// on which they disagree.
ClaimReport verify_disagreement_claim();

/// A bounded set of words used as the finite domain of machine tables.
class WordUniverse {
   public:
    enum class Kind : uint8_t {
        /// Every consistent word.
        Consistent,
        /// Consistent words whose final state fully determines a context.
        ContextDetermined,
    };

    /// Throws std::invalid_argument for max_length > 14.
    static WordUniverse build(Kind kind, size_t max_length);

    Kind kind() const {
        return kind_;
    }
    size_t max_length() const {
        return max_length_;
    }
    size_t size() const {
        return codes_.size();
    }
    Word word(size_t index) const;
    std::optional<size_t> find(std::span<const SignedSymbol> w) const;

   private:
    Kind kind_ = Kind::Consistent;
    size_t max_length_ = 0;
    std::vector<uint64_t> codes_;
};

/// Raised when a machine violates the structural requirements on m0.
struct SpecError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when a recognizer rejects both signed extensions of a consistent word.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct MemoryCell {
    uint32_t state;
    Observable obs;
};

/// A memory-factoring predictor, tabulated over a finite word universe.
///
/// m0 maps (word, observable) to (memory state, observable); m1 maps
/// (memory state, observable) to +1, -1 or r. The composed output is
/// m1(m0(w, s)).
class MagaSpec {
   public:
    using M0 = std::function<MemoryCell(std::span<const SignedSymbol>, Observable)>;
    using M1Table = std::vector<std::array<Prediction, NUM_OBSERVABLES>>;

    /// Evaluates `m0` on every (word, observable) of `universe`. Throws
    /// SpecError if a memory state is out of range or `m1` has the wrong size.
    static MagaSpec tabulate(WordUniverse universe, size_t num_states, const M0 &m0, M1Table m1);

    size_t num_memory_states() const {
        return m1_.size();
    }
    const WordUniverse &universe() const {
        return universe_;
    }
    MemoryCell m0(size_t word_index, Observable s) const;
    Prediction m1(uint32_t state, Observable s) const {
        return m1_[state][index_of(s)];
    }
    Prediction output(size_t word_index, Observable s) const;

    /// Throws SpecError unless m0 leaves the observable coordinate unchanged.
    void check_projection() const;

    /// Whether the memory state m0 assigns to a word is the same for every
    /// observable.
    bool state_depends_on_word_only() const;

    /// Number of distinct memory states m0 reaches over the universe.
    size_t reached_states() const;

   private:
    WordUniverse universe_;
    // state * NUM_OBSERVABLES + observable, per word and queried observable.
    std::vector<uint32_t> m0_;
    M1Table m1_;
};

struct MagaMismatch {
    Word word;
    Observable s;
    Prediction expected;
    Prediction produced;
};

/// First (word, observable) where the machine output differs from the
/// semantics oracle, if any.
std::optional<MagaMismatch> find_mismatch(const MagaSpec &m);

struct PigeonholeContradiction {
    size_t i;
    size_t j;
    Word sigma_i;
    Word sigma_j;
    Observable s;
    uint32_t shared_state;
    Prediction required_i;
    Prediction required_j;
    Prediction produced;
};

struct LowerBoundVerdict {
    /// At least 24 distinct memory states among the representatives.
    bool certified;
    size_t distinct_states;
    std::optional<PigeonholeContradiction> contradiction;
};

/// Runs the pigeonhole argument on the representatives. Throws SpecError if m0
/// changes the observable or its memory state depends on the observable, and
/// std::invalid_argument if the universe lacks a representative.
LowerBoundVerdict lower_bound_check(const MagaSpec &m);

/// The 24-state machine for context-determining words: m0 is the class index
/// and m1 answers from the reconstructed context assignment.
MagaSpec reference_maga_plus(size_t max_length = 5);

/// The reference machine with class `drop` folded into class `keep`: 23 states.
MagaSpec merged_maga_plus(size_t keep, size_t drop, size_t max_length = 2);

/// A memory-factoring recognizer: m0 gives the memory state after reading the
/// word extended by one signed symbol; m1 answers membership from the state.
struct MaraSpec {
    size_t num_states;
    std::function<uint32_t(std::span<const SignedSymbol>, SignedSymbol)> m0;
    std::function<bool(uint32_t)> m1;
};

MaraSpec mara_from_dfa(const Dfa &d);

/// Pairs the recognizer states of both signed extensions. (YES, YES) maps to
/// r, (YES, NO) to +1, (NO, YES) to -1. Throws InvariantViolation if (NO, NO)
/// occurs on the universe.
MagaSpec mara_to_maga(const MaraSpec &recognizer, WordUniverse universe);

/// Smallest recognizer size whose pair construction can reach `maga_bound`
/// states: ceil(sqrt(maga_bound)).
size_t mara_lower_bound(size_t maga_bound);

struct ScalingReport {
    size_t n;
    BigInt contexts;
    BigInt context_size;
    BigInt lower_bound;
    BigInt simplified_bound;
    double density;
    double density_floor;

    double gap() const {
        return density - density_floor;
    }
    bool violates_holevo() const {
        return density > 1.0;
    }
};

/// Memory lower bound 2^n * prod_{k=1..n} (2^k + 1) for n qubits and the
/// corresponding bits-per-qubit density. Throws std::domain_error for n < 1.
ScalingReport scaling_report(size_t n);

}  // namespace pmlang

#endif
