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

#include "docsum/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace docsum {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t begin;  // byte offsets into the source
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({c, static_cast<std::size_t>(start), static_cast<std::size_t>(i)});
  }
  return out;
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

bool is_digit(UChar32 c) { return u_charType(c) == U_DECIMAL_DIGIT_NUMBER; }

bool is_word_char(UChar32 c) {
  if (u_isalnum(c)) return true;
  switch (u_charType(c)) {
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
      return true;
    default:
      break;
  }
  return c == 0x200C || c == 0x200D;  // ZWNJ / ZWJ inside Persian words
}

bool is_arabic_diacritic(UChar32 c) {
  return c == 0x0640 || (c >= 0x064B && c <= 0x065F) || c == 0x0670;
}

bool is_terminal(UChar32 c) {
  return c == '.' || c == '!' || c == '?' || c == 0x061F || c == 0x06D4 || c == 0x2026;
}

bool is_closer(UChar32 c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x00BB || c == 0x201D ||
         c == 0x2019;
}

std::string_view trim(std::string_view s) {
  const auto cps = decode(s);
  std::size_t first = 0;
  while (first < cps.size() && is_space(cps[first].value)) ++first;
  if (first == cps.size()) return {};
  std::size_t last = cps.size();
  while (last > first && is_space(cps[last - 1].value)) --last;
  return s.substr(cps[first].begin, cps[last - 1].end - cps[first].begin);
}

}  // namespace

std::string normalize(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString composed = U_SUCCESS(status) ? nfc->normalize(source, status) : source;
  if (U_FAILURE(status)) composed = source;
  composed.toLower(icu::Locale::getRoot());

  std::string lowered;
  composed.toUTF8String(lowered);

  std::string out;
  out.reserve(lowered.size());
  bool pending_space = false;
  for (const CodePoint& cp : decode(lowered)) {
    if (is_arabic_diacritic(cp.value)) continue;
    if (is_space(cp.value)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.append(lowered, cp.begin, cp.end - cp.begin);
  }
  return out;
}

std::vector<std::string> split_sentences(
    std::string_view text, const std::unordered_set<std::string>& abbreviations) {
  if (trim(text).empty()) {
    throw std::invalid_argument("split_sentences: empty text");
  }
  const auto cps = decode(text);
  std::vector<std::string> out;
  std::size_t segment_begin = 0;  // byte offset

  auto emit = [&](std::size_t end) {
    std::string_view piece = trim(text.substr(segment_begin, end - segment_begin));
    if (!piece.empty()) out.emplace_back(piece);
    segment_begin = end;
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    const UChar32 c = cps[i].value;

    // Blank line.
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < cps.size() && is_space(cps[j].value) && cps[j].value != '\n') ++j;
      if (j < cps.size() && cps[j].value == '\n') {
        emit(cps[i].begin);
        i = j + 1;
        continue;
      }
    }

    if (!is_terminal(c)) {
      ++i;
      continue;
    }

    std::size_t j = i;
    while (j < cps.size() && is_terminal(cps[j].value)) ++j;
    const bool single_period = (j == i + 1) && c == '.';
    while (j < cps.size() && is_closer(cps[j].value)) ++j;
    const bool at_boundary = j == cps.size() || is_space(cps[j].value);
    if (!at_boundary) {
      i = j;
      continue;
    }

    if (single_period) {
      std::size_t w = i;
      while (w > 0 && !is_space(cps[w - 1].value)) --w;
      std::string word = normalize(text.substr(cps[w].begin, cps[i].end - cps[w].begin));
      if (abbreviations.contains(word)) {
        i = j;
        continue;
      }
    }

    emit(j == cps.size() ? text.size() : cps[j].begin);
    i = j;
  }
  emit(text.size());
  return out;
}

std::vector<std::string> split_words(std::string_view sentence) {
  const auto cps = decode(sentence);
  std::vector<std::string> out;
  std::string current;
  bool prev_digit = false;  // last code point appended to `current`

  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
    prev_digit = false;
  };
  auto append = [&](const CodePoint& cp) {
    current.append(sentence, cp.begin, cp.end - cp.begin);
    prev_digit = is_digit(cp.value);
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const CodePoint& cp = cps[i];
    const UChar32 c = cp.value;
    const UChar32 next = i + 1 < cps.size() ? cps[i + 1].value : 0;

    if (is_word_char(c)) {
      append(cp);
      continue;
    }
    if (is_space(c)) {
      flush();
      continue;
    }
    if (!current.empty()) {
      if (prev_digit && is_digit(next) && (c == '.' || c == ',' || c == ':' || c == '/')) {
        append(cp);
        continue;
      }
      if ((c == '\'' || c == 0x2019 || c == '-' || c == 0x2010) && next != 0 &&
          u_isalnum(next) && u_isalnum(cps[i - 1].value)) {
        append(cp);
        continue;
      }
    } else if ((c == '+' || c == '-') && is_digit(next)) {
      append(cp);
      continue;
    }
    flush();
  }
  flush();
  return out;
}

bool is_numeric_literal(std::string_view word) {
  const auto cps = decode(word);
  std::size_t i = 0;
  if (i < cps.size() && (cps[i].value == '+' || cps[i].value == '-')) ++i;
  if (i >= cps.size() || !is_digit(cps[i].value)) return false;
  for (++i; i < cps.size(); ++i) {
    const UChar32 c = cps[i].value;
    if (!(is_digit(c) || c == ',' || c == '.' || c == ':' || c == '/')) return false;
  }
  return true;
}

}  // namespace docsum
