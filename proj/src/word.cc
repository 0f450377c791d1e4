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

#include "pmlang/word.h"

#include <cctype>

using namespace pmlang;

ParseError::ParseError(const std::string &message, size_t token_index, size_t char_offset)
    : std::invalid_argument(message), token_index(token_index), char_offset(char_offset) {
}

Word pmlang::parse_word(std::string_view text) {
    Word result;
    size_t k = 0;
    while (true) {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
            k++;
        }
        if (k == text.size()) {
            return result;
        }
        size_t start = k;
        while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) {
            k++;
        }
        std::string_view token = text.substr(start, k - start);
        int8_t value = +1;
        std::string_view name = token;
        if (name.starts_with('~')) {
            value = -1;
            name.remove_prefix(1);
        }
        auto obs = observable_from_name(name);
        if (!obs.has_value()) {
            throw ParseError(
                "unknown token '" + std::string(token) + "' at token " + std::to_string(result.size() + 1) +
                    " (offset " + std::to_string(start) + ")",
                result.size(),
                start);
        }
        result.push_back(SignedSymbol{*obs, value});
    }
}

std::string pmlang::token_of(SignedSymbol s) {
    std::string result = s.value < 0 ? "~" : "";
    result += name_of(s.obs);
    return result;
}

std::string pmlang::format_word(std::span<const SignedSymbol> w) {
    std::string result;
    for (size_t k = 0; k < w.size(); k++) {
        if (k) {
            result += ' ';
        }
        result += token_of(w[k]);
    }
    return result;
}
