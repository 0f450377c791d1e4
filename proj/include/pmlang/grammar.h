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

#ifndef PMLANG_GRAMMAR_H
#define PMLANG_GRAMMAR_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmlang/alphabet.h"
#include "pmlang/automata.h"
#include "pmlang/word.h"

namespace pmlang {

/// A nonterminal of the measurement grammar.
///
/// `<X>` means X is the next symbol to be emitted and nothing else is known.
/// `<X Y>` means X and Y (distinct, compatible) fix a context and Y is the next
/// symbol to be emitted.
struct GeneratingSymbol {
    enum class Form : uint8_t { Start, Single, Pair };

    Form form = Form::Start;
    SignedSymbol x{};
    SignedSymbol y{};

    static GeneratingSymbol start();
    static GeneratingSymbol single(SignedSymbol x);
    /// Throws std::invalid_argument unless x and y are distinct and compatible.
    static GeneratingSymbol pair(SignedSymbol x, SignedSymbol y);

    /// The next symbol to be emitted. Throws std::logic_error for the start symbol.
    SignedSymbol last() const;

    /// Dense index: 0 for the start symbol, 1..18 for singles, then pairs.
    size_t index() const;
    static GeneratingSymbol at(size_t index);

    /// `<S>`, `<~A>`, `<A ~B>`.
    std::string name() const;

    bool operator==(const GeneratingSymbol &other) const;
};

/// 1 start symbol + 18 singles + 144 ordered compatible pairs.
constexpr size_t NUM_GENERATING_SYMBOLS = 1 + 18 + 144;

/// Rule families. Side conditions filter which instances exist.
enum class Schema : uint8_t {
    StartEmpty,          // <S> -> lambda
    StartSingle,         // <S> -> <X>
    SingleEnd,           // <X> -> X
    SingleRepeat,        // <X> -> X <X>
    SingleIncompatible,  // <X> -> X <Z>, Z incompatible with X
    SingleCompatible,    // <X> -> X <X Y>, Y compatible with X, not equal
    PairEnd,             // <X Y> -> Y
    PairRepeat,          // <X Y> -> Y <X Y>
    PairSwap,            // <X Y> -> Y <Y X>
    PairPivotLast,       // <X Y> -> Y <Y Z>, Z compatible with Y, not equal, not with X
    PairThird,           // <X Y> -> Y <Y Z(XY)>
    PairPivotThird,      // <X Y> -> Y <Z(XY) U>, U compatible with Z(XY), not equal, not with X or Y
    PairPivotFirst,      // <X Y> -> Y <X U>, U compatible with X, not equal, not with Y
};

constexpr size_t NUM_SCHEMAS = 13;

std::string_view notation_of(Schema s);

enum class GrammarVariant : uint8_t {
    /// The twelve published rule families.
    AsPublished,
    /// The published families plus PairPivotFirst, which covers a measurement in
    /// the other context of the first member of a determined pair.
    Completed,
};

struct Rule {
    GeneratingSymbol lhs;
    /// Empty only for `<S> -> lambda` and the `<S> -> <X>` chain rules.
    std::optional<SignedSymbol> emitted;
    std::optional<GeneratingSymbol> rhs;
    Schema schema;

    /// `<A B> -> B <C c>`, `<S> -> lambda`.
    std::string str() const;
};

class Grammar {
   public:
    explicit Grammar(GrammarVariant variant);

    GrammarVariant variant() const {
        return variant_;
    }
    GeneratingSymbol start() const {
        return GeneratingSymbol::start();
    }
    const std::vector<GeneratingSymbol> &symbols() const {
        return symbols_;
    }
    /// Grouped by left-hand side index, then schema, then variable index.
    const std::vector<Rule> &rules() const {
        return rules_;
    }
    std::span<const Rule> rules_for(const GeneratingSymbol &lhs) const;

   private:
    GrammarVariant variant_;
    std::vector<GeneratingSymbol> symbols_;
    std::vector<Rule> rules_;
    std::vector<size_t> first_rule_;
};

Grammar build_grammar(GrammarVariant variant = GrammarVariant::Completed);

struct DerivationStep {
    Rule rule;
    /// Sentential form after applying `rule`.
    Word terminals;
    std::optional<GeneratingSymbol> pending;

    /// `A B <C c>`; a bare `lambda` for the empty form.
    std::string form() const;
};

struct Derivation {
    std::vector<DerivationStep> steps;
};

/// State layout of `to_nfa`: generating symbol k is state k; the accept state
/// is the last one. Transition labels are rule indices into `g.rules()`.
Nfa to_nfa(const Grammar &g);

/// Membership queries over the automaton image of a grammar. Derivations are
/// recovered from rule back-pointers, exploring rules in canonical order.
class GrammarRecognizer {
   public:
    explicit GrammarRecognizer(Grammar g);

    const Grammar &grammar() const {
        return grammar_;
    }
    const Nfa &nfa() const {
        return nfa_;
    }
    bool accepts(std::span<const SignedSymbol> w) const;
    std::optional<Derivation> derive(std::span<const SignedSymbol> w) const;

   private:
    std::span<const uint32_t> moves(StateId q, SignedSymbol s) const;

    Grammar grammar_;
    Nfa nfa_;
    std::vector<std::vector<uint32_t>> moves_;
    std::vector<std::vector<uint32_t>> epsilon_;
};

/// A witness derivation of `w`, or nothing if `w` is not generated.
std::optional<Derivation> derive_membership(const Grammar &g, std::span<const SignedSymbol> w);

/// Three-column table: string derived, rule instance, rule family.
std::string format_derivation(const Derivation &d);

}  // namespace pmlang

#endif
