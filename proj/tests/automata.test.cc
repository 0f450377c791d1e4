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

#include "pmlang/automata.h"

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "pmlang/language.h"
#include "pmlang/semantics.h"

using namespace pmlang;

namespace {

const LanguageAutomata &pipeline() {
    static const LanguageAutomata result = build_language_automata();
    return result;
}

void for_each_word(size_t max_length, const std::function<void(const Word &)> &visit) {
    Word w;
    std::function<void()> rec = [&]() {
        visit(w);
        if (w.size() == max_length) {
            return;
        }
        for (SignedSymbol s : all_signed_symbols()) {
            w.push_back(s);
            rec();
            w.pop_back();
        }
    };
    rec();
}

// Semantic states plus a dead sink, stepped by the semantics oracle.
constexpr size_t DEAD = NUM_SEMANTIC_CLASSES;
size_t semantic_step(size_t cls, SignedSymbol s) {
    if (cls == DEAD) {
        return DEAD;
    }
    auto next = step(DeterminationState::from_class_id(cls), s);
    return next.has_value() ? next->class_id() : DEAD;
}

// Nerode classes of the semantic states, distinguishing two states when some
// word of length <= depth is accepted from one and not the other.
size_t nerode_class_count(size_t depth) {
    const size_t n = NUM_SEMANTIC_CLASSES + 1;
    std::vector<std::array<size_t, NUM_SIGNED_SYMBOLS>> delta(n);
    for (size_t q = 0; q < n; q++) {
        for (SignedSymbol s : all_signed_symbols()) {
            delta[q][s.index()] = semantic_step(q, s);
        }
    }
    auto accepting = [](size_t q) { return q != DEAD; };
    std::function<bool(size_t, size_t, size_t)> distinguishable = [&](size_t p, size_t q, size_t d) {
        if (accepting(p) != accepting(q)) {
            return true;
        }
        if (d == 0 || p == q) {
            return false;
        }
        for (size_t s = 0; s < NUM_SIGNED_SYMBOLS; s++) {
            if (distinguishable(delta[p][s], delta[q][s], d - 1)) {
                return true;
            }
        }
        return false;
    };
    std::vector<size_t> representatives;
    for (size_t q = 0; q < n; q++) {
        bool fresh = true;
        for (size_t r : representatives) {
            if (!distinguishable(q, r, depth)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            representatives.push_back(q);
        }
    }
    return representatives.size();
}

Nfa all_words_nfa() {
    Nfa a;
    a.num_states = 1;
    a.start = 0;
    a.accepting = {true};
    for (SignedSymbol s : all_signed_symbols()) {
        a.transitions.push_back(NfaTransition{0, s, 0});
    }
    return a;
}

}  // namespace

TEST(automata, nfa_validation) {
    Nfa a = all_words_nfa();
    EXPECT_NO_THROW(a.validate());
    a.transitions.push_back(NfaTransition{0, std::nullopt, 3});
    EXPECT_THROW(a.validate(), std::invalid_argument);
}

TEST(automata, determinize_trivial) {
    Dfa d = determinize(all_words_nfa());
    EXPECT_EQ(d.num_states(), 1u);
    EXPECT_FALSE(d.dead.has_value());
    EXPECT_TRUE(d.accepts(parse_word("A ~A b")));
    EXPECT_EQ(minimize(d).num_states(), 1u);
}

TEST(automata, determinize_language) {
    const Dfa &d = pipeline().subset;
    EXPECT_TRUE(d.accepts(parse_word("A B c ~gamma")));
    EXPECT_FALSE(d.accepts(parse_word("A B c gamma")));
    EXPECT_TRUE(d.dead.has_value());
    size_t checked = 0;
    for_each_word(3, [&](const Word &w) {
        checked++;
        ASSERT_EQ(d.accepts(w), pipeline().nfa.accepts(w)) << format_word(w);
    });
    EXPECT_EQ(checked, 1u + 18u + 324u + 5832u);
}

TEST(automata, language_preserved_to_length_4) {
    const Dfa &d = pipeline().subset;
    const Dfa &m = pipeline().minimal.dfa;
    for_each_word(4, [&](const Word &w) {
        bool expected = is_consistent(w);
        ASSERT_EQ(d.accepts(w), expected) << format_word(w);
        ASSERT_EQ(m.accepts(w), expected) << format_word(w);
    });
}

TEST(automata, random_words_agree_with_semantics) {
    std::mt19937_64 rng(11);
    const Dfa &m = pipeline().minimal.dfa;
    for (int trial = 0; trial < 20000; trial++) {
        Word w(rng() % 13);
        for (auto &s : w) {
            s = SignedSymbol::from_index(rng() % NUM_SIGNED_SYMBOLS);
        }
        ASSERT_EQ(m.accepts(w), is_consistent(w)) << format_word(w);
        ASSERT_EQ(pipeline().subset.accepts(w), is_consistent(w)) << format_word(w);
    }
}

TEST(automata, minimal_size_matches_nerode_classes) {
    const Dfa &m = pipeline().minimal.dfa;
    size_t expected = nerode_class_count(5);
    EXPECT_EQ(m.num_states(), expected);
    ASSERT_TRUE(m.dead.has_value());
    EXPECT_EQ(m.num_live_states(), expected - 1);
    // Every semantic state is its own class.
    EXPECT_EQ(expected, NUM_SEMANTIC_CLASSES + 1);
}

TEST(automata, minimize_is_idempotent) {
    const Dfa &m = pipeline().minimal.dfa;
    Dfa again = minimize(m);
    EXPECT_EQ(again.num_states(), m.num_states());
    EXPECT_EQ(again.delta, m.delta);
    EXPECT_EQ(again.accepting, m.accepting);
    EXPECT_EQ(minimize(pipeline().subset).delta, m.delta);
}

TEST(automata, partition_maps_onto_semantic_classes) {
    const auto &p = pipeline();
    auto classes = semantic_classes(p.minimal.dfa);
    std::set<size_t> seen;
    for (size_t q = 0; q < classes.size(); q++) {
        if (classes[q].has_value()) {
            seen.insert(*classes[q]);
        } else {
            EXPECT_EQ(p.minimal.dfa.dead, q);
        }
    }
    EXPECT_EQ(seen.size(), NUM_SEMANTIC_CLASSES);
    // Every subset state lands in the block whose semantic class it realises.
    for (size_t k = 0; k < p.subset.num_states(); k++) {
        ASSERT_TRUE(p.minimal.block_of[k].has_value());
    }
    for_each_word(2, [&](const Word &w) {
        StateId sub = p.subset.run(w);
        StateId min = p.minimal.dfa.run(w);
        EXPECT_EQ(p.minimal.block_of[sub], min);
        auto st = run(w);
        EXPECT_EQ(classes[min], st.has_value() ? std::optional<size_t>(st->class_id()) : std::nullopt);
    });
}

TEST(automata, hopcroft_merges_equivalent_states) {
    // Accepts words of even length over the alphabet, with redundant copies.
    Dfa d;
    d.start = 0;
    d.delta.resize(4);
    d.accepting = {true, false, true, false};
    for (size_t s = 0; s < NUM_SIGNED_SYMBOLS; s++) {
        d.delta[0][s] = 1;
        d.delta[1][s] = 2;
        d.delta[2][s] = 3;
        d.delta[3][s] = 0;
    }
    Dfa m = minimize(d);
    EXPECT_EQ(m.num_states(), 2u);
    EXPECT_FALSE(m.dead.has_value());
    EXPECT_TRUE(m.accepts(parse_word("A B")));
    EXPECT_FALSE(m.accepts(parse_word("A")));
}

TEST(automata, counts_small_lengths_match_brute_force) {
    CountReport report = count_words(pipeline().minimal.dfa, 4);
    std::vector<BigInt> brute(5, 0);
    for_each_word(4, [&](const Word &w) {
        if (is_consistent(w)) {
            brute[w.size()] += 1;
        }
    });
    ASSERT_EQ(report.counts.size(), 5u);
    EXPECT_EQ(report.counts[0], 1);
    EXPECT_EQ(report.counts[1], 18);
    for (size_t n = 0; n <= 4; n++) {
        EXPECT_EQ(report.counts[n], brute[n]) << n;
    }
    EXPECT_EQ(report.cumulative[4], brute[0] + brute[1] + brute[2] + brute[3] + brute[4]);
    EXPECT_EQ(count_words(pipeline().subset, 4).counts, report.counts);
}

TEST(automata, counts_of_the_full_language) {
    CountReport report = count_words(determinize(all_words_nfa()), 30);
    BigInt expected = 1;
    for (size_t n = 0; n <= 30; n++) {
        EXPECT_EQ(report.counts[n], expected);
        expected *= 18;
    }
    ASSERT_FALSE(report.growth_ratios.empty());
    EXPECT_EQ(report.growth_ratios.front().n, 15u);
    EXPECT_DOUBLE_EQ(report.dominant_rate_estimate, 18.0);
    EXPECT_TRUE(std::isnan(count_words(determinize(all_words_nfa()), 0).dominant_rate_estimate));
}

TEST(automata, growth_rate_is_the_context_out_degree) {
    // Once a context is determined the walk stays among context states, each of
    // which admits the same number of consistent continuations.
    std::set<size_t> out_degrees;
    for (size_t cls = 1 + NUM_SIGNED_SYMBOLS; cls < NUM_SEMANTIC_CLASSES; cls++) {
        auto st = DeterminationState::from_class_id(cls);
        size_t degree = 0;
        for (SignedSymbol s : all_signed_symbols()) {
            auto next = step(st, s);
            if (next.has_value()) {
                degree++;
                EXPECT_TRUE(determined_context(*next).has_value());
            }
        }
        out_degrees.insert(degree);
    }
    ASSERT_EQ(out_degrees.size(), 1u);
    double rate = static_cast<double>(*out_degrees.begin());
    CountReport report = count_words(pipeline().minimal.dfa, 200);
    EXPECT_NEAR(report.dominant_rate_estimate, rate, 1e-9);
}

TEST(automata, hv_bit_curve) {
    CountReport report = count_words(pipeline().minimal.dfa, 60);
    HvBitCurve curve = hv_bits(report);
    ASSERT_EQ(curve.bits.size(), 61u);
    EXPECT_EQ(curve.bits[0], 0u);
    // 1 + 18 = 19 words up to length one needs five bits.
    EXPECT_EQ(curve.bits[1], 5u);
    for (long long d : curve.first_differences) {
        EXPECT_GE(d, 0);
    }
}

TEST(automata, dot_output) {
    const Dfa &m = pipeline().minimal.dfa;
    std::string dot = to_dot(m, semantic_labels(m));
    EXPECT_TRUE(dot.starts_with("digraph dfa {\n"));
    EXPECT_NE(dot.find("label=\"initial\", shape=doublecircle"), std::string::npos);
    EXPECT_NE(dot.find("label=\"A=+1 B=+1 C=+1\""), std::string::npos);
    EXPECT_NE(dot.find("label=\"dead\"]"), std::string::npos);
    EXPECT_TRUE(dot.ends_with("}\n"));
}
