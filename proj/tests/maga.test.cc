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

#include "pmlang/maga.h"

#include <cmath>
#include <functional>
#include <set>

#include "gtest/gtest.h"
#include "pmlang/language.h"

using namespace pmlang;

namespace {

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

// Number of observables the semantics leaves with a definite value; a word is
// in the context-determining fragment exactly when three are determined.
size_t determined_after(const Word &w) {
    auto st = run(w);
    return st.has_value() ? st->determined_count() : 0;
}

}  // namespace

TEST(maga, class_triple_indexing) {
    std::set<size_t> seen;
    for (size_t k = 0; k < NUM_CLASS_TRIPLES; k++) {
        ClassTriple t = ClassTriple::at(k);
        EXPECT_EQ(t.index(), k);
        EXPECT_EQ(t.v1 * t.v2 * t.v3(), t.context->sign);
        seen.insert(k);
    }
    EXPECT_EQ(seen.size(), 24u);
    EXPECT_THROW(ClassTriple::at(24), std::out_of_range);
    EXPECT_EQ(ClassTriple::at(0).str(), "row0(+1,+1)");
    EXPECT_EQ(ClassTriple::at(23).str(), "col2(-1,-1)");
}

TEST(maga, classify_examples) {
    ClassTriple ab = classify(parse_word("A B"));
    EXPECT_EQ(ab.context->id(), 0u);
    EXPECT_EQ(ab.v1, +1);
    EXPECT_EQ(ab.v2, +1);

    ClassTriple cg = classify(parse_word("C gamma"));
    EXPECT_EQ(cg.context->kind, ContextKind::Col);
    EXPECT_EQ(cg.context->index, 2);
    EXPECT_EQ(cg.v1, +1);
    EXPECT_EQ(cg.v2, -1);

    EXPECT_THROW(classify(parse_word("")), std::domain_error);
    EXPECT_THROW(classify(parse_word("A")), std::domain_error);
    EXPECT_THROW(classify(parse_word("A b")), std::domain_error);
    EXPECT_THROW(classify(parse_word("A ~A")), std::domain_error);
}

TEST(maga, classify_is_onto_over_short_words) {
    std::set<size_t> image;
    size_t in_fragment = 0;
    for_each_word(3, [&](const Word &w) {
        if (determined_after(w) == 3) {
            in_fragment++;
            ClassTriple t = classify(w);
            // The triple matches the determined values read off the state.
            auto st = *run(w);
            EXPECT_EQ(st.raw_value(t.context->members[0]), t.v1);
            EXPECT_EQ(st.raw_value(t.context->members[1]), t.v2);
            EXPECT_EQ(st.raw_value(t.context->members[2]), t.v3());
            image.insert(t.index());
        } else {
            EXPECT_THROW(classify(w), std::domain_error) << format_word(w);
        }
    });
    EXPECT_GT(in_fragment, 24u);
    EXPECT_EQ(image.size(), NUM_CLASS_TRIPLES);
}

TEST(maga, representatives) {
    auto reps = representatives();
    ASSERT_EQ(reps.size(), 24u);
    EXPECT_EQ(format_word(reps[0]), "A B");
    EXPECT_EQ(format_word(reps[23]), "~C ~c");
    std::set<std::string> distinct;
    for (size_t k = 0; k < reps.size(); k++) {
        EXPECT_EQ(reps[k].size(), 2u);
        EXPECT_TRUE(is_consistent(reps[k]));
        EXPECT_EQ(classify(reps[k]).index(), k);
        distinct.insert(format_word(reps[k]));
    }
    EXPECT_EQ(distinct.size(), 24u);
}

TEST(maga, disagreement_claim) {
    ClaimReport report = verify_disagreement_claim();
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.missing.empty());
    ASSERT_EQ(report.witnesses.size(), 276u);
    auto reps = representatives();
    std::set<std::pair<size_t, size_t>> pairs;
    for (const auto &w : report.witnesses) {
        EXPECT_FALSE(agree(reps[w.i], reps[w.j], w.s)) << w.i << " " << w.j;
        EXPECT_NE(w.left, w.right);
        pairs.emplace(w.i, w.j);
    }
    EXPECT_EQ(pairs.size(), 276u);

    // (row0,+1,+1) against (row0,-1,+1): the first values differ.
    const auto &first = report.witnesses[1];
    EXPECT_EQ(first.i, 0u);
    EXPECT_EQ(first.j, 2u);
    EXPECT_EQ(first.s, Observable::A);
}

TEST(maga, universe_contents) {
    auto all = WordUniverse::build(WordUniverse::Kind::Consistent, 3);
    auto plus = WordUniverse::build(WordUniverse::Kind::ContextDetermined, 3);
    size_t consistent = 0;
    size_t determining = 0;
    for_each_word(3, [&](const Word &w) {
        if (is_consistent(w)) {
            consistent++;
            ASSERT_TRUE(all.find(w).has_value()) << format_word(w);
            EXPECT_EQ(all.word(*all.find(w)), w);
        } else {
            EXPECT_FALSE(all.find(w).has_value()) << format_word(w);
        }
        if (determined_after(w) == 3) {
            determining++;
            EXPECT_TRUE(plus.find(w).has_value());
        } else {
            EXPECT_FALSE(plus.find(w).has_value());
        }
    });
    EXPECT_EQ(all.size(), consistent);
    EXPECT_EQ(plus.size(), determining);
    EXPECT_FALSE(all.find(parse_word("A A A A")).has_value());
    EXPECT_THROW(WordUniverse::build(WordUniverse::Kind::Consistent, 15), std::invalid_argument);
}

TEST(maga, reference_machine_examples) {
    MagaSpec m = reference_maga_plus(3);
    EXPECT_EQ(m.num_memory_states(), 24u);
    EXPECT_EQ(m.reached_states(), 24u);
    EXPECT_NO_THROW(m.check_projection());
    EXPECT_TRUE(m.state_depends_on_word_only());
    size_t ab = *m.universe().find(parse_word("A B"));
    EXPECT_EQ(m.output(ab, Observable::C), Prediction::Plus);
    EXPECT_EQ(m.output(ab, Observable::a), Prediction::Random);
    size_t cg = *m.universe().find(parse_word("C gamma"));
    EXPECT_EQ(m.output(cg, Observable::c), Prediction::Minus);
}

TEST(maga, reference_machine_matches_semantics) {
    MagaSpec m = reference_maga_plus(4);
    auto mismatch = find_mismatch(m);
    EXPECT_FALSE(mismatch.has_value()) << format_word(mismatch->word) << " " << name_of(mismatch->s);
}

TEST(maga, reference_machine_is_certified) {
    LowerBoundVerdict v = lower_bound_check(reference_maga_plus(2));
    EXPECT_TRUE(v.certified);
    EXPECT_EQ(v.distinct_states, 24u);
    EXPECT_FALSE(v.contradiction.has_value());
}

TEST(maga, injective_relabeling_is_certified) {
    auto u = WordUniverse::build(WordUniverse::Kind::ContextDetermined, 2);
    MagaSpec::M1Table m1(40);
    for (auto &row : m1) {
        row.fill(Prediction::Random);
    }
    MagaSpec m = MagaSpec::tabulate(
        u,
        40,
        [](std::span<const SignedSymbol> w, Observable s) {
            return MemoryCell{static_cast<uint32_t>((classify(w).index() * 7 + 3) % 40), s};
        },
        m1);
    LowerBoundVerdict v = lower_bound_check(m);
    EXPECT_TRUE(v.certified);
    EXPECT_EQ(v.distinct_states, 24u);
}

TEST(maga, every_merge_is_refuted) {
    size_t refuted = 0;
    for (size_t i = 0; i < NUM_CLASS_TRIPLES; i++) {
        for (size_t j = i + 1; j < NUM_CLASS_TRIPLES; j++) {
            MagaSpec m = merged_maga_plus(i, j);
            ASSERT_EQ(m.num_memory_states(), 23u);
            LowerBoundVerdict v = lower_bound_check(m);
            ASSERT_FALSE(v.certified);
            EXPECT_EQ(v.distinct_states, 23u);
            ASSERT_TRUE(v.contradiction.has_value());
            const auto &c = *v.contradiction;
            EXPECT_EQ(c.i, i);
            EXPECT_EQ(c.j, j);
            EXPECT_NE(c.required_i, c.required_j);
            EXPECT_EQ(predicted_value(*run(c.sigma_i), c.s), c.required_i);
            EXPECT_EQ(predicted_value(*run(c.sigma_j), c.s), c.required_j);
            // One machine state cannot meet two different requirements.
            EXPECT_TRUE(c.produced != c.required_i || c.produced != c.required_j);
            // The merged machine really is wrong somewhere on the fragment.
            EXPECT_TRUE(find_mismatch(m).has_value());
            refuted++;
        }
    }
    EXPECT_EQ(refuted, 276u);
    EXPECT_THROW(merged_maga_plus(3, 3), std::invalid_argument);
}

TEST(maga, projection_and_factoring_errors) {
    auto u = WordUniverse::build(WordUniverse::Kind::ContextDetermined, 2);
    MagaSpec::M1Table m1(NUM_OBSERVABLES);
    for (auto &row : m1) {
        row.fill(Prediction::Random);
    }
    MagaSpec swaps = MagaSpec::tabulate(
        u, NUM_OBSERVABLES, [](std::span<const SignedSymbol>, Observable) { return MemoryCell{0, Observable::A}; },
        m1);
    EXPECT_THROW(swaps.check_projection(), SpecError);
    EXPECT_THROW(lower_bound_check(swaps), SpecError);

    // Encoding the queried observable in the state dodges the counting argument.
    MagaSpec leaks = MagaSpec::tabulate(
        u,
        NUM_OBSERVABLES,
        [](std::span<const SignedSymbol>, Observable s) { return MemoryCell{static_cast<uint32_t>(index_of(s)), s}; },
        m1);
    EXPECT_NO_THROW(leaks.check_projection());
    EXPECT_FALSE(leaks.state_depends_on_word_only());
    EXPECT_THROW(lower_bound_check(leaks), SpecError);

    EXPECT_THROW(
        MagaSpec::tabulate(
            u, 2, [](std::span<const SignedSymbol>, Observable s) { return MemoryCell{5, s}; },
            MagaSpec::M1Table(2)),
        SpecError);
    EXPECT_THROW(
        MagaSpec::tabulate(
            u, 3, [](std::span<const SignedSymbol>, Observable s) { return MemoryCell{0, s}; }, MagaSpec::M1Table(2)),
        SpecError);
}

TEST(maga, mara_from_minimal_dfa) {
    Dfa d = language_dfa();
    MagaSpec m = mara_to_maga(mara_from_dfa(d), WordUniverse::build(WordUniverse::Kind::Consistent, 3));
    EXPECT_EQ(m.num_memory_states(), d.num_states() * d.num_states());
    EXPECT_EQ(m.num_memory_states(), 1936u);
    EXPECT_NO_THROW(m.check_projection());
    auto mismatch = find_mismatch(m);
    EXPECT_FALSE(mismatch.has_value()) << format_word(mismatch->word) << " " << name_of(mismatch->s);
}

TEST(maga, mara_rejecting_everything_is_invalid) {
    MaraSpec nothing{1, [](std::span<const SignedSymbol>, SignedSymbol) { return 0u; }, [](uint32_t) { return false; }};
    EXPECT_THROW(mara_to_maga(nothing, WordUniverse::build(WordUniverse::Kind::Consistent, 1)), InvariantViolation);
}

TEST(maga, mara_square_root_bound) {
    EXPECT_EQ(mara_lower_bound(24), 5u);
    EXPECT_EQ(mara_lower_bound(25), 5u);
    EXPECT_EQ(mara_lower_bound(26), 6u);
    EXPECT_EQ(mara_lower_bound(1936), 44u);
    EXPECT_EQ(mara_lower_bound(1), 1u);
    for (size_t n = 1; n < 5000; n++) {
        size_t r = mara_lower_bound(n);
        EXPECT_GE(r * r, n);
        EXPECT_LT((r - 1) * (r - 1), n);
    }
    size_t live = language_dfa().num_states();
    EXPECT_GE(live, mara_lower_bound(24));
}

TEST(maga, scaling_small_cases) {
    EXPECT_EQ(scaling_report(1).lower_bound, 6);
    EXPECT_NEAR(scaling_report(1).density, std::log2(6.0), 1e-12);
    EXPECT_NEAR(scaling_report(1).density, 2.585, 1e-3);
    ScalingReport two = scaling_report(2);
    EXPECT_EQ(two.lower_bound, 60);
    EXPECT_EQ(two.contexts, 15);
    EXPECT_EQ(two.context_size, 4);
    EXPECT_EQ(two.simplified_bound, 32);
    EXPECT_EQ(scaling_report(3).lower_bound, 1080);
    EXPECT_THROW(scaling_report(0), std::domain_error);
}

TEST(maga, scaling_density_bounds) {
    double previous_gap = INFINITY;
    for (size_t n = 1; n <= 64; n++) {
        ScalingReport r = scaling_report(n);
        BigInt product = 1;
        for (size_t k = 1; k <= n; k++) {
            product *= BigInt(1) << k;
        }
        BigInt exact = BigInt(1) << n;
        for (size_t k = 1; k <= n; k++) {
            exact *= (BigInt(1) << k) + 1;
        }
        EXPECT_EQ(r.lower_bound, exact);
        EXPECT_EQ(r.simplified_bound, (BigInt(1) << n) * product);
        EXPECT_GE(r.lower_bound, r.simplified_bound);
        EXPECT_GE(r.density, r.density_floor);
        EXPECT_EQ(r.density_floor, (n + 3) / 2.0);
        EXPECT_TRUE(r.violates_holevo());
        EXPECT_LE(r.gap(), previous_gap) << n;
        previous_gap = r.gap();
    }
    EXPECT_LT(previous_gap, 0.05);
}
