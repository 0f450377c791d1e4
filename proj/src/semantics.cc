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

#include "pmlang/semantics.h"

#include <iomanip>
#include <sstream>
#include <stdexcept>

using namespace pmlang;

std::string_view pmlang::name_of(Prediction p) {
    switch (p) {
        case Prediction::Plus:
            return "+1";
        case Prediction::Minus:
            return "-1";
        case Prediction::Random:
            return "r";
    }
    return "?";
}

size_t DeterminationState::determined_count() const {
    size_t n = 0;
    for (int8_t v : values_) {
        n += v != 0;
    }
    return n;
}

bool DeterminationState::satisfies_invariants() const {
    size_t n = determined_count();
    if (n <= 1) {
        return true;
    }
    if (n != 3) {
        return false;
    }
    return determined_context(*this).has_value();
}

size_t DeterminationState::class_id() const {
    size_t n = determined_count();
    if (n == 0) {
        return 0;
    }
    if (n == 1) {
        for (Observable o : all_observables()) {
            if (is_determined(o)) {
                return 1 + SignedSymbol{o, raw_value(o)}.index();
            }
        }
    }
    auto ctx = determined_context(*this);
    if (n != 3 || !ctx.has_value()) {
        throw std::logic_error("unreachable determination state: " + describe());
    }
    return 1 + NUM_SIGNED_SYMBOLS + ctx->context->id() * 4 + (ctx->values[0] < 0 ? 2 : 0) +
           (ctx->values[1] < 0 ? 1 : 0);
}

DeterminationState DeterminationState::from_class_id(size_t id) {
    if (id >= NUM_SEMANTIC_CLASSES) {
        throw std::out_of_range("semantic class id " + std::to_string(id) + " out of range");
    }
    DeterminationState st;
    if (id == 0) {
        return st;
    }
    if (id <= NUM_SIGNED_SYMBOLS) {
        return *step(st, SignedSymbol::from_index(id - 1));
    }
    size_t k = id - 1 - NUM_SIGNED_SYMBOLS;
    const Context &ctx = context_by_id(k / 4);
    SignedSymbol first{ctx.members[0], static_cast<int8_t>(k & 2 ? -1 : +1)};
    SignedSymbol second{ctx.members[1], static_cast<int8_t>(k & 1 ? -1 : +1)};
    return *step(*step(st, first), second);
}

std::string DeterminationState::describe() const {
    std::string result;
    for (Observable o : all_observables()) {
        if (!is_determined(o)) {
            continue;
        }
        if (!result.empty()) {
            result += ' ';
        }
        result += name_of(o);
        result += raw_value(o) > 0 ? "=+1" : "=-1";
    }
    return result.empty() ? "-" : result;
}

DeterminationState pmlang::initial_state() {
    return DeterminationState{};
}

StepResult pmlang::step(const DeterminationState &st, SignedSymbol m) {
    int8_t current = st.raw_value(m.obs);
    if (current != 0 && current != m.value) {
        return std::nullopt;
    }

    DeterminationState next;
    for (Observable o : all_observables()) {
        if (st.is_determined(o) && observables_compatible(o, m.obs)) {
            next.values_[index_of(o)] = st.raw_value(o);
        }
    }
    next.values_[index_of(m.obs)] = m.value;

    for (const Context *ctx : contexts_of(m.obs)) {
        const Observable *missing = nullptr;
        size_t known = 0;
        for (const Observable &o : ctx->members) {
            if (next.is_determined(o)) {
                known++;
            } else {
                missing = &o;
            }
        }
        if (known == 2) {
            int8_t product = ctx->sign;
            for (Observable o : ctx->members) {
                if (next.is_determined(o)) {
                    product = static_cast<int8_t>(product * next.raw_value(o));
                }
            }
            next.values_[index_of(*missing)] = product;
            break;
        }
    }
    return next;
}

StepResult pmlang::run(std::span<const SignedSymbol> w) {
    DeterminationState st;
    for (SignedSymbol m : w) {
        auto next = step(st, m);
        if (!next.has_value()) {
            return std::nullopt;
        }
        st = *next;
    }
    return st;
}

std::optional<size_t> pmlang::first_inconsistency(std::span<const SignedSymbol> w) {
    DeterminationState st;
    for (size_t k = 0; k < w.size(); k++) {
        auto next = step(st, w[k]);
        if (!next.has_value()) {
            return k;
        }
        st = *next;
    }
    return std::nullopt;
}

bool pmlang::is_consistent(std::span<const SignedSymbol> w) {
    return run(w).has_value();
}

bool pmlang::is_consistent(std::string_view text) {
    return is_consistent(parse_word(text));
}

Prediction pmlang::predicted_value(const DeterminationState &st, Observable s) {
    return static_cast<Prediction>(st.raw_value(s));
}

std::optional<ContextAssignment> pmlang::determined_context(const DeterminationState &st) {
    for (const auto &ctx : all_contexts()) {
        bool full = true;
        for (Observable o : ctx.members) {
            full &= st.is_determined(o);
        }
        if (full) {
            return ContextAssignment{
                &ctx, {st.raw_value(ctx.members[0]), st.raw_value(ctx.members[1]), st.raw_value(ctx.members[2])}};
        }
    }
    return std::nullopt;
}

bool pmlang::agree(std::span<const SignedSymbol> u, std::span<const SignedSymbol> v, Observable s) {
    auto su = run(u);
    auto sv = run(v);
    if (!su.has_value() || !sv.has_value()) {
        throw std::domain_error("agree requires consistent words");
    }
    return su->raw_value(s) == sv->raw_value(s);
}

bool pmlang::agree(std::string_view u, std::string_view v, Observable s) {
    return agree(parse_word(u), parse_word(v), s);
}

std::vector<TraceRow> pmlang::trace(std::span<const SignedSymbol> w) {
    std::vector<TraceRow> rows;
    DeterminationState st;
    for (SignedSymbol m : w) {
        TraceRow row{m, step(st, m), 0};
        if (!row.after.has_value()) {
            row.expected = st.raw_value(m.obs);
            rows.push_back(row);
            break;
        }
        st = *row.after;
        rows.push_back(row);
    }
    return rows;
}

std::string pmlang::format_trace(std::span<const SignedSymbol> w) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "step" << std::setw(10) << "measured" << std::setw(14) << "result"
        << "determined\n";
    auto rows = trace(w);
    for (size_t k = 0; k < rows.size(); k++) {
        const auto &row = rows[k];
        out << std::setw(6) << (k + 1) << std::setw(10) << token_of(row.measured);
        if (row.after.has_value()) {
            out << std::setw(14) << "ok" << row.after->describe() << '\n';
        } else {
            out << std::setw(14) << "inconsistent" << name_of(row.measured.obs) << " is determined as "
                << (row.expected > 0 ? "+1" : "-1") << '\n';
        }
    }
    return out.str();
}

namespace {

void walk(
    Word &prefix,
    const DeterminationState &st,
    size_t max_length,
    const std::function<void(std::span<const SignedSymbol>, const DeterminationState &)> &visit) {
    visit(prefix, st);
    if (prefix.size() == max_length) {
        return;
    }
    for (SignedSymbol m : all_signed_symbols()) {
        auto next = step(st, m);
        if (next.has_value()) {
            prefix.push_back(m);
            walk(prefix, *next, max_length, visit);
            prefix.pop_back();
        }
    }
}

}  // namespace

void pmlang::for_each_consistent(
    size_t max_length,
    const std::function<void(std::span<const SignedSymbol>, const DeterminationState &)> &visit) {
    Word prefix;
    prefix.reserve(max_length);
    walk(prefix, initial_state(), max_length, visit);
}
