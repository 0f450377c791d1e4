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

#ifndef PMLANG_LANGUAGE_H
#define PMLANG_LANGUAGE_H

#include <optional>
#include <string>
#include <vector>

#include "pmlang/automata.h"
#include "pmlang/grammar.h"

namespace pmlang {

/// The automata pipeline for the measurement language: grammar, its NFA image,
/// the subset automaton and the minimal automaton with its refinement partition.
struct LanguageAutomata {
    Grammar grammar;
    Nfa nfa;
    Dfa subset;
    Minimization minimal;
};

LanguageAutomata build_language_automata(GrammarVariant variant = GrammarVariant::Completed);

/// Minimal complete DFA of the measurement language.
Dfa language_dfa();

/// For each state of a DFA for the language, the semantic class (see
/// DeterminationState::class_id) reached by a shortest word leading there, or
/// nothing for states only reached by inconsistent words.
std::vector<std::optional<size_t>> semantic_classes(const Dfa &d);

/// DOT-friendly state labels derived from `semantic_classes`.
std::vector<std::string> semantic_labels(const Dfa &d);

}  // namespace pmlang

#endif
