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

#include "pmlang/language.h"

#include "pmlang/semantics.h"

using namespace pmlang;

LanguageAutomata pmlang::build_language_automata(GrammarVariant variant) {
    Grammar g = build_grammar(variant);
    Nfa nfa = to_nfa(g);
    Dfa subset = determinize(nfa);
    Minimization minimal = minimize_with_partition(subset);
    return LanguageAutomata{std::move(g), std::move(nfa), std::move(subset), std::move(minimal)};
}

Dfa pmlang::language_dfa() {
    return build_language_automata().minimal.dfa;
}

std::vector<std::optional<size_t>> pmlang::semantic_classes(const Dfa &d) {
    std::vector<std::optional<size_t>> result(d.num_states());
    std::vector<bool> seen(d.num_states(), false);
    std::vector<std::pair<StateId, StepResult>> queue{{d.start, initial_state()}};
    seen[d.start] = true;
    for (size_t k = 0; k < queue.size(); k++) {
        auto [q, st] = queue[k];
        if (st.has_value()) {
            result[q] = st->class_id();
        }
        for (SignedSymbol s : all_signed_symbols()) {
            StateId r = d.delta[q][s.index()];
            if (!seen[r]) {
                seen[r] = true;
                queue.emplace_back(r, st.has_value() ? step(*st, s) : std::nullopt);
            }
        }
    }
    return result;
}

std::vector<std::string> pmlang::semantic_labels(const Dfa &d) {
    std::vector<std::string> labels;
    for (const auto &cls : semantic_classes(d)) {
        if (!cls.has_value()) {
            labels.push_back("dead");
        } else if (*cls == 0) {
            labels.push_back("initial");
        } else {
            labels.push_back(DeterminationState::from_class_id(*cls).describe());
        }
    }
    return labels;
}
