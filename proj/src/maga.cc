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

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <sstream>

using namespace pmlang;

namespace {

constexpr uint64_t CODE_BASE = NUM_SIGNED_SYMBOLS + 1;
constexpr size_t MAX_UNIVERSE_LENGTH = 14;

uint64_t encode(std::span<const SignedSymbol> w) {
    uint64_t code = 0;
    for (SignedSymbol s : w) {
        code = code * CODE_BASE + s.index() + 1;
    }
    return code;
}

Word decode(uint64_t code) {
    Word w;
    while (code != 0) {
        w.push_back(SignedSymbol::from_index(code % CODE_BASE - 1));
        code /= CODE_BASE;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::string value_str(int8_t v) {
    return v > 0 ? "+1" : "-1";
}

Prediction to_prediction(int8_t v) {
    return v > 0 ? Prediction::Plus : Prediction::Minus;
}

std::array<Prediction, NUM_OBSERVABLES> triple_outputs(const ClassTriple &t) {
    std::array<Prediction, NUM_OBSERVABLES> out;
    out.fill(Prediction::Random);
    const auto &m = t.context->members;
    out[index_of(m[0])] = to_prediction(t.v1);
    out[index_of(m[1])] = to_prediction(t.v2);
    out[index_of(m[2])] = to_prediction(t.v3());
    return out;
}

}  // namespace

size_t ClassTriple::index() const {
    return context->id() * 4 + (v1 < 0 ? 2 : 0) + (v2 < 0 ? 1 : 0);
}

ClassTriple ClassTriple::at(size_t index) {
    if (index >= NUM_CLASS_TRIPLES) {
        throw std::out_of_range("class triple index out of range");
    }
    return ClassTriple{
        &context_by_id(index / 4),
        static_cast<int8_t>(index & 2 ? -1 : +1),
        static_cast<int8_t>(index & 1 ? -1 : +1)};
}

std::string ClassTriple::str() const {
    std::stringstream out;
    out << (context->kind == ContextKind::Row ? "row" : "col") << int(context->index) << "(" << value_str(v1) << ","
        << value_str(v2) << ")";
    return out.str();
}

ClassTriple pmlang::classify(std::span<const SignedSymbol> w) {
    StepResult st = run(w);
    if (!st.has_value()) {
        throw std::domain_error("word is inconsistent: " + format_word(w));
    }
    auto ctx = determined_context(*st);
    if (!ctx.has_value()) {
        throw std::domain_error("word determines no full context: " + format_word(w));
    }
    return ClassTriple{ctx->context, ctx->values[0], ctx->values[1]};
}

std::vector<Word> pmlang::representatives() {
    std::vector<Word> result;
    for (size_t k = 0; k < NUM_CLASS_TRIPLES; k++) {
        ClassTriple t = ClassTriple::at(k);
        result.push_back(Word{
            SignedSymbol{t.context->members[0], t.v1},
            SignedSymbol{t.context->members[1], t.v2}});
    }
    return result;
}

ClaimReport pmlang::verify_disagreement_claim() {
    ClaimReport report;
    auto reps = representatives();
    std::vector<DeterminationState> states;
    for (const auto &w : reps) {
        states.push_back(*run(w));
    }
    for (size_t i = 0; i < reps.size(); i++) {
        for (size_t j = i + 1; j < reps.size(); j++) {
            bool found = false;
            for (Observable s : all_observables()) {
                Prediction left = predicted_value(states[i], s);
                Prediction right = predicted_value(states[j], s);
                if (left != right) {
                    report.witnesses.push_back(DisagreementWitness{i, j, s, left, right});
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.missing.emplace_back(i, j);
            }
        }
    }
    return report;
}

WordUniverse WordUniverse::build(Kind kind, size_t max_length) {
    if (max_length > MAX_UNIVERSE_LENGTH) {
        throw std::invalid_argument("word universe length limit is 14");
    }
    WordUniverse u;
    u.kind_ = kind;
    u.max_length_ = max_length;
    for_each_consistent(max_length, [&](std::span<const SignedSymbol> w, const DeterminationState &st) {
        if (kind == Kind::Consistent || determined_context(st).has_value()) {
            u.codes_.push_back(encode(w));
        }
    });
    std::sort(u.codes_.begin(), u.codes_.end());
    return u;
}

Word WordUniverse::word(size_t index) const {
    return decode(codes_.at(index));
}

std::optional<size_t> WordUniverse::find(std::span<const SignedSymbol> w) const {
    if (w.size() > max_length_) {
        return std::nullopt;
    }
    uint64_t code = encode(w);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - codes_.begin());
}

MagaSpec MagaSpec::tabulate(WordUniverse universe, size_t num_states, const M0 &m0, M1Table m1) {
    if (m1.size() != num_states) {
        throw SpecError("m1 table has " + std::to_string(m1.size()) + " rows for " + std::to_string(num_states) +
                        " memory states");
    }
    MagaSpec m;
    m.m0_.reserve(universe.size() * NUM_OBSERVABLES);
    for (size_t k = 0; k < universe.size(); k++) {
        Word w = universe.word(k);
        for (Observable s : all_observables()) {
            MemoryCell cell = m0(w, s);
            if (cell.state >= num_states) {
                throw SpecError("m0 produced memory state " + std::to_string(cell.state) + " out of range on " +
                                format_word(w));
            }
            m.m0_.push_back(static_cast<uint32_t>(cell.state * NUM_OBSERVABLES + index_of(cell.obs)));
        }
    }
    m.universe_ = std::move(universe);
    m.m1_ = std::move(m1);
    return m;
}

MemoryCell MagaSpec::m0(size_t word_index, Observable s) const {
    uint32_t packed = m0_.at(word_index * NUM_OBSERVABLES + index_of(s));
    return MemoryCell{static_cast<uint32_t>(packed / NUM_OBSERVABLES), observable_at(packed % NUM_OBSERVABLES)};
}

Prediction MagaSpec::output(size_t word_index, Observable s) const {
    MemoryCell cell = m0(word_index, s);
    return m1(cell.state, cell.obs);
}

void MagaSpec::check_projection() const {
    for (size_t k = 0; k < universe_.size(); k++) {
        for (Observable s : all_observables()) {
            MemoryCell cell = m0(k, s);
            if (cell.obs != s) {
                throw SpecError(
                    "m0 maps (" + format_word(universe_.word(k)) + ", " + std::string(name_of(s)) + ") to observable " +
                    std::string(name_of(cell.obs)));
            }
        }
    }
}

bool MagaSpec::state_depends_on_word_only() const {
    for (size_t k = 0; k < universe_.size(); k++) {
        uint32_t state = m0(k, Observable::A).state;
        for (Observable s : all_observables()) {
            if (m0(k, s).state != state) {
                return false;
            }
        }
    }
    return true;
}

size_t MagaSpec::reached_states() const {
    std::vector<bool> seen(m1_.size(), false);
    size_t count = 0;
    for (uint32_t packed : m0_) {
        uint32_t state = packed / NUM_OBSERVABLES;
        if (!seen[state]) {
            seen[state] = true;
            count++;
        }
    }
    return count;
}

std::optional<MagaMismatch> pmlang::find_mismatch(const MagaSpec &m) {
    const WordUniverse &u = m.universe();
    for (size_t k = 0; k < u.size(); k++) {
        Word w = u.word(k);
        DeterminationState st = *run(w);
        for (Observable s : all_observables()) {
            Prediction expected = predicted_value(st, s);
            Prediction produced = m.output(k, s);
            if (expected != produced) {
                return MagaMismatch{std::move(w), s, expected, produced};
            }
        }
    }
    return std::nullopt;
}

LowerBoundVerdict pmlang::lower_bound_check(const MagaSpec &m) {
    m.check_projection();
    if (!m.state_depends_on_word_only()) {
        throw SpecError("m0 memory state depends on the queried observable");
    }
    auto reps = representatives();
    std::vector<uint32_t> state_of;
    for (const auto &w : reps) {
        auto k = m.universe().find(w);
        if (!k.has_value()) {
            throw std::invalid_argument("machine universe lacks representative " + format_word(w));
        }
        state_of.push_back(m.m0(*k, Observable::A).state);
    }

    LowerBoundVerdict verdict{false, std::set<uint32_t>(state_of.begin(), state_of.end()).size(), std::nullopt};
    verdict.certified = verdict.distinct_states == NUM_CLASS_TRIPLES;
    if (verdict.certified) {
        return verdict;
    }

    std::map<uint32_t, size_t> first_with_state;
    for (size_t j = 0; j < reps.size(); j++) {
        auto [it, fresh] = first_with_state.emplace(state_of[j], j);
        if (fresh) {
            continue;
        }
        size_t i = it->second;
        DeterminationState si = *run(reps[i]);
        DeterminationState sj = *run(reps[j]);
        for (Observable s : all_observables()) {
            Prediction pi = predicted_value(si, s);
            Prediction pj = predicted_value(sj, s);
            if (pi != pj) {
                verdict.contradiction =
                    PigeonholeContradiction{i, j, reps[i], reps[j], s, state_of[j], pi, pj, m.m1(state_of[j], s)};
                return verdict;
            }
        }
        throw std::logic_error("representatives " + format_word(reps[i]) + " and " + format_word(reps[j]) +
                               " agree everywhere");
    }
    throw std::logic_error("collision not located");
}

MagaSpec pmlang::reference_maga_plus(size_t max_length) {
    MagaSpec::M1Table m1;
    for (size_t k = 0; k < NUM_CLASS_TRIPLES; k++) {
        m1.push_back(triple_outputs(ClassTriple::at(k)));
    }
    return MagaSpec::tabulate(
        WordUniverse::build(WordUniverse::Kind::ContextDetermined, max_length),
        NUM_CLASS_TRIPLES,
        [](std::span<const SignedSymbol> w, Observable s) {
            return MemoryCell{static_cast<uint32_t>(classify(w).index()), s};
        },
        std::move(m1));
}

MagaSpec pmlang::merged_maga_plus(size_t keep, size_t drop, size_t max_length) {
    if (keep >= NUM_CLASS_TRIPLES || drop >= NUM_CLASS_TRIPLES || keep == drop) {
        throw std::invalid_argument("merge needs two distinct class indices below 24");
    }
    std::array<uint32_t, NUM_CLASS_TRIPLES> state_of{};
    MagaSpec::M1Table m1;
    for (size_t k = 0; k < NUM_CLASS_TRIPLES; k++) {
        if (k != drop) {
            state_of[k] = static_cast<uint32_t>(m1.size());
            m1.push_back(triple_outputs(ClassTriple::at(k)));
        }
    }
    state_of[drop] = state_of[keep];
    size_t num_states = m1.size();
    return MagaSpec::tabulate(
        WordUniverse::build(WordUniverse::Kind::ContextDetermined, max_length),
        num_states,
        [&](std::span<const SignedSymbol> w, Observable s) { return MemoryCell{state_of[classify(w).index()], s}; },
        std::move(m1));
}

MaraSpec pmlang::mara_from_dfa(const Dfa &d) {
    auto shared = std::make_shared<const Dfa>(d);
    return MaraSpec{
        d.num_states(),
        [shared](std::span<const SignedSymbol> w, SignedSymbol s) {
            return shared->run_from(shared->run(w), std::span<const SignedSymbol>(&s, 1));
        },
        [shared](uint32_t q) { return static_cast<bool>(shared->accepting[q]); }};
}

MagaSpec pmlang::mara_to_maga(const MaraSpec &recognizer, WordUniverse universe) {
    const size_t n = recognizer.num_states;
    MagaSpec::M1Table m1(n * n);
    for (size_t plus = 0; plus < n; plus++) {
        bool yes_plus = recognizer.m1(static_cast<uint32_t>(plus));
        for (size_t minus = 0; minus < n; minus++) {
            bool yes_minus = recognizer.m1(static_cast<uint32_t>(minus));
            Prediction p = Prediction::Random;
            if (yes_plus && !yes_minus) {
                p = Prediction::Plus;
            } else if (!yes_plus && yes_minus) {
                p = Prediction::Minus;
            }
            // (NO, NO) rows are never reached on a valid recognizer; m0 rejects them.
            m1[plus * n + minus].fill(p);
        }
    }
    return MagaSpec::tabulate(
        std::move(universe),
        n * n,
        [&](std::span<const SignedSymbol> w, Observable s) {
            uint32_t plus = recognizer.m0(w, SignedSymbol{s, +1});
            uint32_t minus = recognizer.m0(w, SignedSymbol{s, -1});
            if (plus >= n || minus >= n) {
                throw SpecError("recognizer state out of range");
            }
            if (!recognizer.m1(plus) && !recognizer.m1(minus)) {
                throw InvariantViolation(
                    "recognizer rejects both extensions of " + format_word(w) + " by " + std::string(name_of(s)));
            }
            return MemoryCell{static_cast<uint32_t>(plus * n + minus), s};
        },
        std::move(m1));
}

size_t pmlang::mara_lower_bound(size_t maga_bound) {
    size_t r = static_cast<size_t>(std::sqrt(static_cast<double>(maga_bound)));
    while (r * r < maga_bound) {
        r++;
    }
    while (r > 0 && (r - 1) * (r - 1) >= maga_bound) {
        r--;
    }
    return r;
}

ScalingReport pmlang::scaling_report(size_t n) {
    if (n < 1) {
        throw std::domain_error("qubit count must be at least 1");
    }
    ScalingReport r;
    r.n = n;
    r.contexts = 1;
    for (size_t k = 1; k <= n; k++) {
        r.contexts *= (BigInt(1) << k) + 1;
    }
    r.context_size = BigInt(1) << n;
    r.lower_bound = r.context_size * r.contexts;
    r.simplified_bound = BigInt(1) << (n + n * (n + 1) / 2);
    r.density = log2_big(r.lower_bound) / static_cast<double>(n);
    r.density_floor = (static_cast<double>(n) + 3.0) / 2.0;
    if (r.lower_bound < r.simplified_bound || r.density < r.density_floor || !(r.density > 1.0)) {
        throw std::logic_error("scaling report invariant violated at n = " + std::to_string(n));
    }
    return r;
}
