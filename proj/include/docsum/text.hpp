// Copyright 2026 The docsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOCSUM_TEXT_HPP_
#define DOCSUM_TEXT_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace docsum {

// Canonical form of a piece of text: Unicode NFC, lowercased, tatweel and
// Arabic-script diacritics removed, whitespace runs collapsed to one space
// and trimmed.
std::string normalize(std::string_view text);

// Splits running text into sentences at terminal punctuation (. ! ? and the
// Arabic question mark / full stop) followed by whitespace, and at blank
// lines. A period closing a word listed in `abbreviations` (normalized, with
// the trailing period, e.g. "dr.") does not end a sentence. Returned pieces
// are trimmed and never empty.
//
// Throws std::invalid_argument if `text` is empty or all whitespace.
std::vector<std::string> split_sentences(
    std::string_view text, const std::unordered_set<std::string>& abbreviations);

// Splits a sentence into surface words on whitespace and punctuation.
// Number-internal separators (3.5, 1,000, 12:30, 1/2), a leading sign on a
// number, and word-internal hyphens and apostrophes stay inside the word.
std::vector<std::string> split_words(std::string_view sentence);

// True if `word` matches [+-]?<digit>[<digit>,.:/]* where <digit> is any
// Unicode decimal digit.
bool is_numeric_literal(std::string_view word);

}  // namespace docsum

#endif  // DOCSUM_TEXT_HPP_
