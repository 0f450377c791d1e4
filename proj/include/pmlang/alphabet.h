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

#ifndef PMLANG_ALPHABET_H
#define PMLANG_ALPHABET_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace pmlang {

/// The nine observables of the square, in row-major order:
///
///     A     B     C
///     a     b     c
///     alpha beta  gamma
///
/// The enumerator value is the canonical index used for every deterministic
/// tie-break in the library.
enum class Observable : uint8_t { A, B, C, a, b, c, alpha, beta, gamma };

constexpr size_t NUM_OBSERVABLES = 9;
constexpr size_t NUM_CONTEXTS = 6;
constexpr size_t NUM_SIGNED_SYMBOLS = 18;

constexpr size_t index_of(Observable o) {
    return static_cast<size_t>(o);
}
constexpr Observable observable_at(size_t index) {
    return static_cast<Observable>(index);
}
constexpr size_t row_of(Observable o) {
    return index_of(o) / 3;
}
constexpr size_t col_of(Observable o) {
    return index_of(o) % 3;
}
constexpr Observable observable_at(size_t row, size_t col) {
    return observable_at(row * 3 + col);
}

/// ASCII token name: `A B C a b c alpha beta gamma`.
std::string_view name_of(Observable o);
std::optional<Observable> observable_from_name(std::string_view name);

/// Every observable in canonical order.
const std::array<Observable, NUM_OBSERVABLES> &all_observables();

enum class ContextKind : uint8_t { Row, Col };

/// A row or column of the square. Members are listed left to right for rows
/// and top to bottom for columns.
struct Context {
    ContextKind kind;
    uint8_t index;
    std::array<Observable, 3> members;
    int8_t sign;

    /// 0..2 for rows, 3..5 for columns.
    size_t id() const {
        return (kind == ContextKind::Row ? 0 : 3) + index;
    }
    bool contains(Observable o) const;
    /// Position of `o` in `members`, if present.
    std::optional<size_t> position_of(Observable o) const;
    bool operator==(const Context &other) const = default;
};

/// The six contexts: rows 0..2 then columns 0..2. Only the column {C,c,gamma}
/// carries sign -1.
const std::array<Context, NUM_CONTEXTS> &all_contexts();
const Context &context_by_id(size_t id);
/// The two contexts of `o`: its row first, then its column.
std::array<const Context *, 2> contexts_of(Observable o);
/// The context containing both observables, if they are distinct and share one.
const Context *shared_context(Observable x, Observable y);
/// Observable-level compatibility: distinct observables sharing a context.
bool observables_compatible(Observable x, Observable y);

/// An observable together with a measured outcome of +1 or -1.
struct SignedSymbol {
    Observable obs;
    int8_t value;

    /// 2*observable + (value < 0); the alphabet index in 0..17.
    constexpr size_t index() const {
        return index_of(obs) * 2 + (value < 0 ? 1 : 0);
    }
    static constexpr SignedSymbol from_index(size_t index) {
        return SignedSymbol{observable_at(index / 2), static_cast<int8_t>(index % 2 ? -1 : +1)};
    }
    constexpr SignedSymbol negated() const {
        return SignedSymbol{obs, static_cast<int8_t>(-value)};
    }
    bool operator==(const SignedSymbol &other) const = default;
};

/// Every signed symbol in alphabet-index order.
const std::array<SignedSymbol, NUM_SIGNED_SYMBOLS> &all_signed_symbols();

/// Same observable with the same value, or distinct observables sharing a
/// context. `A` is compatible with `A` but not with `~A`.
bool compatible(SignedSymbol s, SignedSymbol t);

/// The signed symbol on the remaining observable of the context shared by `s`
/// and `t`, valued so that the three values multiply to the context sign.
///
/// Throws std::domain_error unless `s` and `t` are on distinct observables of a
/// common context.
SignedSymbol third_value(SignedSymbol s, SignedSymbol t);

/// A total assignment of +1/-1 to the nine observables.
struct SquareFilling {
    std::array<int8_t, NUM_OBSERVABLES> values;

    static SquareFilling all_plus();
    /// Bit k of `mask` set means observable k gets -1.
    static SquareFilling from_mask(uint32_t mask);
    int8_t operator[](Observable o) const {
        return values[index_of(o)];
    }
};

/// Product of the member values of `ctx` under `f`.
int context_product(const SquareFilling &f, const Context &ctx);
/// Number of contexts whose product is -1. Always even.
int negative_context_count(const SquareFilling &f);
/// True iff every context product equals its sign. No filling does.
bool satisfies_all_signs(const SquareFilling &f);

}  // namespace pmlang

#endif
