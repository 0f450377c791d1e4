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

#include "pmlang/alphabet.h"

#include <stdexcept>
#include <string>

using namespace pmlang;

namespace {

constexpr std::array<std::string_view, NUM_OBSERVABLES> NAMES = {
    "A", "B", "C", "a", "b", "c", "alpha", "beta", "gamma"};

std::array<Context, NUM_CONTEXTS> make_contexts() {
    std::array<Context, NUM_CONTEXTS> result{};
    for (uint8_t k = 0; k < 3; k++) {
        result[k] = Context{
            ContextKind::Row, k, {observable_at(k, 0), observable_at(k, 1), observable_at(k, 2)}, +1};
        result[3 + k] = Context{
            ContextKind::Col, k, {observable_at(0, k), observable_at(1, k), observable_at(2, k)}, +1};
    }
    // The column {C, c, gamma} multiplies to -1.
    result[3 + 2].sign = -1;
    return result;
}

}  // namespace

std::string_view pmlang::name_of(Observable o) {
    return NAMES[index_of(o)];
}

std::optional<Observable> pmlang::observable_from_name(std::string_view name) {
    for (size_t k = 0; k < NUM_OBSERVABLES; k++) {
        if (NAMES[k] == name) {
            return observable_at(k);
        }
    }
    return std::nullopt;
}

const std::array<Observable, NUM_OBSERVABLES> &pmlang::all_observables() {
    static const std::array<Observable, NUM_OBSERVABLES> result = [] {
        std::array<Observable, NUM_OBSERVABLES> r{};
        for (size_t k = 0; k < NUM_OBSERVABLES; k++) {
            r[k] = observable_at(k);
        }
        return r;
    }();
    return result;
}

bool Context::contains(Observable o) const {
    return position_of(o).has_value();
}

std::optional<size_t> Context::position_of(Observable o) const {
    for (size_t k = 0; k < 3; k++) {
        if (members[k] == o) {
            return k;
        }
    }
    return std::nullopt;
}

const std::array<Context, NUM_CONTEXTS> &pmlang::all_contexts() {
    static const std::array<Context, NUM_CONTEXTS> result = make_contexts();
    return result;
}

const Context &pmlang::context_by_id(size_t id) {
    if (id >= NUM_CONTEXTS) {
        throw std::out_of_range("context id " + std::to_string(id) + " out of range");
    }
    return all_contexts()[id];
}

std::array<const Context *, 2> pmlang::contexts_of(Observable o) {
    const auto &ctx = all_contexts();
    return {&ctx[row_of(o)], &ctx[3 + col_of(o)]};
}

const Context *pmlang::shared_context(Observable x, Observable y) {
    if (x == y) {
        return nullptr;
    }
    if (row_of(x) == row_of(y)) {
        return &all_contexts()[row_of(x)];
    }
    if (col_of(x) == col_of(y)) {
        return &all_contexts()[3 + col_of(x)];
    }
    return nullptr;
}

bool pmlang::observables_compatible(Observable x, Observable y) {
    return shared_context(x, y) != nullptr;
}

const std::array<SignedSymbol, NUM_SIGNED_SYMBOLS> &pmlang::all_signed_symbols() {
    static const std::array<SignedSymbol, NUM_SIGNED_SYMBOLS> result = [] {
        std::array<SignedSymbol, NUM_SIGNED_SYMBOLS> r{};
        for (size_t k = 0; k < NUM_SIGNED_SYMBOLS; k++) {
            r[k] = SignedSymbol::from_index(k);
        }
        return r;
    }();
    return result;
}

bool pmlang::compatible(SignedSymbol s, SignedSymbol t) {
    if (s.obs == t.obs) {
        return s.value == t.value;
    }
    return observables_compatible(s.obs, t.obs);
}

SignedSymbol pmlang::third_value(SignedSymbol s, SignedSymbol t) {
    const Context *ctx = shared_context(s.obs, t.obs);
    if (ctx == nullptr) {
        throw std::domain_error(
            "third_value requires distinct observables of one context, got " + std::string(name_of(s.obs)) +
            " and " + std::string(name_of(t.obs)));
    }
    for (Observable m : ctx->members) {
        if (m != s.obs && m != t.obs) {
            return SignedSymbol{m, static_cast<int8_t>(ctx->sign * s.value * t.value)};
        }
    }
    throw std::logic_error("context has no third member");
}

SquareFilling SquareFilling::all_plus() {
    return from_mask(0);
}

SquareFilling SquareFilling::from_mask(uint32_t mask) {
    SquareFilling f{};
    for (size_t k = 0; k < NUM_OBSERVABLES; k++) {
        f.values[k] = (mask >> k) & 1 ? -1 : +1;
    }
    return f;
}

int pmlang::context_product(const SquareFilling &f, const Context &ctx) {
    int p = 1;
    for (Observable m : ctx.members) {
        p *= f[m];
    }
    return p;
}

int pmlang::negative_context_count(const SquareFilling &f) {
    int n = 0;
    for (const auto &ctx : all_contexts()) {
        n += context_product(f, ctx) < 0;
    }
    return n;
}

bool pmlang::satisfies_all_signs(const SquareFilling &f) {
    for (const auto &ctx : all_contexts()) {
        if (context_product(f, ctx) != ctx.sign) {
            return false;
        }
    }
    return true;
}
