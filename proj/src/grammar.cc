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

#include "pmlang/grammar.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

using namespace pmlang;

namespace {

constexpr size_t FIRST_PAIR_INDEX = 1 + NUM_SIGNED_SYMBOLS;

struct PairTable {
    std::array<std::array<int, NUM_SIGNED_SYMBOLS>, NUM_SIGNED_SYMBOLS> index{};
    std::vector<std::pair<SignedSymbol, SignedSymbol>> pairs;

    PairTable() {
        for (auto &row : index) {
            row.fill(-1);
        }
        for (SignedSymbol x : all_signed_symbols()) {
            for (SignedSymbol y : all_signed_symbols()) {
                if (x != y && compatible(x, y)) {
                    index[x.index()][y.index()] = static_cast<int>(pairs.size());
                    pairs.emplace_back(x, y);
                }
            }
        }
    }
};

const PairTable &pair_table() {
    static const PairTable table;
    return table;
}

/// Observable-level incompatibility: a different observable outside both contexts.
bool unrelated(SignedSymbol u, SignedSymbol x) {
    return u.obs != x.obs && !observables_compatible(u.obs, x.obs);
}

bool distinct_compatible(SignedSymbol u, SignedSymbol x) {
    return u != x && compatible(u, x);
}

}  // namespace

GeneratingSymbol GeneratingSymbol::start() {
    return GeneratingSymbol{};
}

GeneratingSymbol GeneratingSymbol::single(SignedSymbol x) {
    return GeneratingSymbol{Form::Single, x, {}};
}

GeneratingSymbol GeneratingSymbol::pair(SignedSymbol x, SignedSymbol y) {
    if (!distinct_compatible(x, y)) {
        throw std::invalid_argument("pair symbol needs distinct compatible symbols, got " + token_of(x) + " " + token_of(y));
    }
    return GeneratingSymbol{Form::Pair, x, y};
}

SignedSymbol GeneratingSymbol::last() const {
    switch (form) {
        case Form::Single:
            return x;
        case Form::Pair:
            return y;
        case Form::Start:
            break;
    }
    throw std::logic_error("the start symbol has no last symbol");
}

size_t GeneratingSymbol::index() const {
    switch (form) {
        case Form::Start:
            return 0;
        case Form::Single:
            return 1 + x.index();
        case Form::Pair:
            return FIRST_PAIR_INDEX + static_cast<size_t>(pair_table().index[x.index()][y.index()]);
    }
    return 0;
}

GeneratingSymbol GeneratingSymbol::at(size_t index) {
    if (index == 0) {
        return start();
    }
    if (index < FIRST_PAIR_INDEX) {
        return single(SignedSymbol::from_index(index - 1));
    }
    const auto &pairs = pair_table().pairs;
    if (index - FIRST_PAIR_INDEX >= pairs.size()) {
        throw std::out_of_range("generating symbol index " + std::to_string(index) + " out of range");
    }
    const auto &[x, y] = pairs[index - FIRST_PAIR_INDEX];
    return pair(x, y);
}

std::string GeneratingSymbol::name() const {
    switch (form) {
        case Form::Start:
            return "<S>";
        case Form::Single:
            return "<" + token_of(x) + ">";
        case Form::Pair:
            return "<" + token_of(x) + " " + token_of(y) + ">";
    }
    return "<?>";
}

bool GeneratingSymbol::operator==(const GeneratingSymbol &other) const {
    return index() == other.index();
}

std::string_view pmlang::notation_of(Schema s) {
    switch (s) {
        case Schema::StartEmpty:
            return "<S> -> lambda";
        case Schema::StartSingle:
            return "<S> -> <X>";
        case Schema::SingleEnd:
            return "<X> -> X";
        case Schema::SingleRepeat:
            return "<X> -> X <X>";
        case Schema::SingleIncompatible:
            return "<X> -> X <Z>  (Z incompatible with X)";
        case Schema::SingleCompatible:
            return "<X> -> X <X Y>  (Y compatible with X, not equal)";
        case Schema::PairEnd:
            return "<X Y> -> Y";
        case Schema::PairRepeat:
            return "<X Y> -> Y <X Y>";
        case Schema::PairSwap:
            return "<X Y> -> Y <Y X>";
        case Schema::PairPivotLast:
            return "<X Y> -> Y <Y Z>  (Z compatible with Y, not equal, not with X)";
        case Schema::PairThird:
            return "<X Y> -> Y <Y Z(XY)>";
        case Schema::PairPivotThird:
            return "<X Y> -> Y <Z(XY) U>  (U compatible with Z(XY), not equal, not with X or Y)";
        case Schema::PairPivotFirst:
            return "<X Y> -> Y <X U>  (U compatible with X, not equal, not with Y)";
    }
    return "?";
}

std::string Rule::str() const {
    std::string result = lhs.name() + " ->";
    if (!emitted.has_value() && !rhs.has_value()) {
        return result + " lambda";
    }
    if (emitted.has_value()) {
        result += " " + token_of(*emitted);
    }
    if (rhs.has_value()) {
        result += " " + rhs->name();
    }
    return result;
}

Grammar::Grammar(GrammarVariant variant) : variant_(variant) {
    for (size_t k = 0; k < NUM_GENERATING_SYMBOLS; k++) {
        symbols_.push_back(GeneratingSymbol::at(k));
    }
    const auto &sigma = all_signed_symbols();
    for (const GeneratingSymbol &lhs : symbols_) {
        first_rule_.push_back(rules_.size());
        auto add = [&](Schema schema, std::optional<SignedSymbol> emitted, std::optional<GeneratingSymbol> rhs) {
            rules_.push_back(Rule{lhs, emitted, rhs, schema});
        };
        switch (lhs.form) {
            case GeneratingSymbol::Form::Start:
                add(Schema::StartEmpty, std::nullopt, std::nullopt);
                for (SignedSymbol x : sigma) {
                    add(Schema::StartSingle, std::nullopt, GeneratingSymbol::single(x));
                }
                break;
            case GeneratingSymbol::Form::Single: {
                SignedSymbol x = lhs.x;
                add(Schema::SingleEnd, x, std::nullopt);
                add(Schema::SingleRepeat, x, lhs);
                for (SignedSymbol z : sigma) {
                    if (unrelated(z, x)) {
                        add(Schema::SingleIncompatible, x, GeneratingSymbol::single(z));
                    }
                }
                for (SignedSymbol y : sigma) {
                    if (distinct_compatible(y, x)) {
                        add(Schema::SingleCompatible, x, GeneratingSymbol::pair(x, y));
                    }
                }
                break;
            }
            case GeneratingSymbol::Form::Pair: {
                SignedSymbol x = lhs.x;
                SignedSymbol y = lhs.y;
                SignedSymbol third = third_value(x, y);
                add(Schema::PairEnd, y, std::nullopt);
                add(Schema::PairRepeat, y, lhs);
                add(Schema::PairSwap, y, GeneratingSymbol::pair(y, x));
                for (SignedSymbol z : sigma) {
                    if (distinct_compatible(z, y) && unrelated(z, x)) {
                        add(Schema::PairPivotLast, y, GeneratingSymbol::pair(y, z));
                    }
                }
                add(Schema::PairThird, y, GeneratingSymbol::pair(y, third));
                for (SignedSymbol u : sigma) {
                    if (distinct_compatible(u, third) && unrelated(u, x) && unrelated(u, y)) {
                        add(Schema::PairPivotThird, y, GeneratingSymbol::pair(third, u));
                    }
                }
                if (variant == GrammarVariant::Completed) {
                    for (SignedSymbol u : sigma) {
                        if (distinct_compatible(u, x) && unrelated(u, y)) {
                            add(Schema::PairPivotFirst, y, GeneratingSymbol::pair(x, u));
                        }
                    }
                }
                break;
            }
        }
    }
    first_rule_.push_back(rules_.size());
}

std::span<const Rule> Grammar::rules_for(const GeneratingSymbol &lhs) const {
    size_t k = lhs.index();
    return std::span<const Rule>(rules_).subspan(first_rule_[k], first_rule_[k + 1] - first_rule_[k]);
}

Grammar pmlang::build_grammar(GrammarVariant variant) {
    return Grammar(variant);
}

std::string DerivationStep::form() const {
    std::string result = format_word(terminals);
    if (pending.has_value()) {
        if (!result.empty()) {
            result += ' ';
        }
        result += pending->name();
    }
    return result.empty() ? "lambda" : result;
}

Nfa pmlang::to_nfa(const Grammar &g) {
    Nfa a;
    a.num_states = g.symbols().size() + 1;
    const StateId accept = static_cast<StateId>(g.symbols().size());
    a.start = static_cast<StateId>(g.start().index());
    a.accepting.assign(a.num_states, false);
    a.accepting[accept] = true;
    const auto &rules = g.rules();
    for (size_t k = 0; k < rules.size(); k++) {
        const Rule &r = rules[k];
        StateId from = static_cast<StateId>(r.lhs.index());
        if (!r.emitted.has_value() && !r.rhs.has_value()) {
            a.accepting[from] = true;
            continue;
        }
        StateId to = r.rhs.has_value() ? static_cast<StateId>(r.rhs->index()) : accept;
        a.transitions.push_back(NfaTransition{from, r.emitted, to, static_cast<uint32_t>(k)});
    }
    a.validate();
    return a;
}

GrammarRecognizer::GrammarRecognizer(Grammar g)
    : grammar_(std::move(g)), nfa_(to_nfa(grammar_)), moves_(nfa_.num_states * NUM_SIGNED_SYMBOLS),
      epsilon_(nfa_.num_states) {
    for (size_t k = 0; k < nfa_.transitions.size(); k++) {
        const auto &t = nfa_.transitions[k];
        if (t.symbol.has_value()) {
            moves_[t.from * NUM_SIGNED_SYMBOLS + t.symbol->index()].push_back(static_cast<uint32_t>(k));
        } else {
            epsilon_[t.from].push_back(static_cast<uint32_t>(k));
        }
    }
}

std::span<const uint32_t> GrammarRecognizer::moves(StateId q, SignedSymbol s) const {
    return moves_[q * NUM_SIGNED_SYMBOLS + s.index()];
}

namespace {

struct BackPointer {
    bool reached = false;
    StateId previous = 0;
    uint32_t transition = 0;
    bool has_previous = false;
};

}  // namespace

bool GrammarRecognizer::accepts(std::span<const SignedSymbol> w) const {
    return derive(w).has_value();
}

std::optional<Derivation> GrammarRecognizer::derive(std::span<const SignedSymbol> w) const {
    const size_t n_states = nfa_.num_states;
    std::vector<std::vector<BackPointer>> layers(w.size() + 1, std::vector<BackPointer>(n_states));
    std::vector<StateId> frontier;

    auto close = [&](size_t layer, std::vector<StateId> &states) {
        for (size_t k = 0; k < states.size(); k++) {
            for (uint32_t t : epsilon_[states[k]]) {
                StateId to = nfa_.transitions[t].to;
                auto &bp = layers[layer][to];
                if (!bp.reached) {
                    bp = BackPointer{true, states[k], t, true};
                    states.push_back(to);
                }
            }
        }
        std::sort(states.begin(), states.end());
    };

    layers[0][nfa_.start].reached = true;
    frontier.push_back(nfa_.start);
    close(0, frontier);
    for (size_t pos = 0; pos < w.size(); pos++) {
        std::vector<StateId> next;
        for (StateId q : frontier) {
            for (uint32_t t : moves(q, w[pos])) {
                StateId to = nfa_.transitions[t].to;
                auto &bp = layers[pos + 1][to];
                if (!bp.reached) {
                    bp = BackPointer{true, q, t, true};
                    next.push_back(to);
                }
            }
        }
        if (next.empty()) {
            return std::nullopt;
        }
        close(pos + 1, next);
        frontier = std::move(next);
    }

    auto final_state = std::find_if(frontier.begin(), frontier.end(), [&](StateId q) { return nfa_.accepting[q]; });
    if (final_state == frontier.end()) {
        return std::nullopt;
    }

    std::vector<const Rule *> applied;
    const auto &rules = grammar_.rules();
    StateId q = *final_state;
    if (q < grammar_.symbols().size()) {
        // Accepting generating symbol: finish with its lambda rule.
        for (const Rule &r : grammar_.rules_for(GeneratingSymbol::at(q))) {
            if (!r.emitted.has_value() && !r.rhs.has_value()) {
                applied.push_back(&r);
                break;
            }
        }
    }
    size_t layer = w.size();
    while (layers[layer][q].has_previous) {
        const auto &bp = layers[layer][q];
        const auto &t = nfa_.transitions[bp.transition];
        applied.push_back(&rules[t.label]);
        if (t.symbol.has_value()) {
            layer--;
        }
        q = bp.previous;
    }
    std::reverse(applied.begin(), applied.end());

    Derivation d;
    Word terminals;
    for (const Rule *r : applied) {
        if (r->emitted.has_value()) {
            terminals.push_back(*r->emitted);
        }
        d.steps.push_back(DerivationStep{*r, terminals, r->rhs});
    }
    return d;
}

std::optional<Derivation> pmlang::derive_membership(const Grammar &g, std::span<const SignedSymbol> w) {
    return GrammarRecognizer(g).derive(w);
}

std::string pmlang::format_derivation(const Derivation &d) {
    std::vector<std::array<std::string, 3>> rows;
    rows.push_back({"string derived", "rule instance", "rule family"});
    for (const auto &step : d.steps) {
        rows.push_back({step.form(), step.rule.str(), std::string(notation_of(step.rule.schema))});
    }
    size_t w0 = 0, w1 = 0;
    for (const auto &row : rows) {
        w0 = std::max(w0, row[0].size());
        w1 = std::max(w1, row[1].size());
    }
    std::ostringstream out;
    for (const auto &row : rows) {
        out << row[0] << std::string(w0 - row[0].size() + 2, ' ') << "| " << row[1]
            << std::string(w1 - row[1].size() + 2, ' ') << "| " << row[2] << '\n';
    }
    return out.str();
}
