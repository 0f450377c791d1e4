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

#ifndef PMLANG_WORD_H
#define PMLANG_WORD_H

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmlang/alphabet.h"

namespace pmlang {

/// A string over the 18-symbol alphabet. The empty word is lambda.
using Word = std::vector<SignedSymbol>;

/// Raised for malformed token strings. Positions are zero-based.
struct ParseError : std::invalid_argument {
    size_t token_index;
    size_t char_offset;
    ParseError(const std::string &message, size_t token_index, size_t char_offset);
};

/// Parses whitespace-separated tokens of the form `[~]?(A|B|C|a|b|c|alpha|beta|gamma)`.
/// A leading `~` marks the outcome -1.
Word parse_word(std::string_view text);

/// `~gamma` style token for one symbol.
std::string token_of(SignedSymbol s);
/// Tokens joined by single spaces; the empty word renders as "".
std::string format_word(std::span<const SignedSymbol> w);

}  // namespace pmlang

#endif
