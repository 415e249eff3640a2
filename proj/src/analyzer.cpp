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

#include "docsum/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "docsum/error.hpp"
#include "docsum/text.hpp"

namespace docsum {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_ascii_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isalpha(c) || c == '-' || c == '\'';
         });
}

bool has_letter(std::string_view s) {
  // Any byte >= 0x80 belongs to a non-ASCII letter or mark in practice.
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return c >= 0x80 || std::isalpha(c); });
}

std::vector<std::string> read_entries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read list file: " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string entry = normalize(line);
    if (!entry.empty()) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "Noun";
    case Pos::Verb: return "Verb";
    case Pos::Adjective: return "Adjective";
    case Pos::Adverb: return "Adverb";
    case Pos::Number: return "Number";
    case Pos::Other: return "Other";
  }
  return "Other";
}

Pos parse_pos(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (key == "NOUN" || key == "N") return Pos::Noun;
  if (key == "VERB" || key == "V") return Pos::Verb;
  if (key == "ADJECTIVE" || key == "ADJ") return Pos::Adjective;
  if (key == "ADVERB" || key == "ADV") return Pos::Adverb;
  if (key == "NUMBER" || key == "NUM") return Pos::Number;
  if (key == "OTHER" || key == "O") return Pos::Other;
  throw ValidationError("unknown part-of-speech tag: " + std::string(name));
}

std::vector<std::string> load_phrase_list(const std::filesystem::path& path) {
  return read_entries(path);
}

std::unordered_map<std::string, Pos> load_lexicon(const std::filesystem::path& path) {
  std::unordered_map<std::string, Pos> out;
  for (const std::string& entry : read_entries(path)) {
    // normalize() collapsed the tab into a single space.
    const auto space = entry.rfind(' ');
    if (space == std::string::npos) {
      throw ValidationError("lexicon entry without a tag in " + path.string() + ": " + entry);
    }
    out[entry.substr(0, space)] = parse_pos(entry.substr(space + 1));
  }
  return out;
}

std::vector<std::string> Analyzer::terms(std::string_view text) const {
  std::vector<std::string> out;
  for (Token& token : analyze(text)) out.push_back(std::move(token.normalized));
  return out;
}

RuleBasedAnalyzer::RuleBasedAnalyzer(AnalyzerConfig config) : config_(std::move(config)) {}

std::vector<std::string> RuleBasedAnalyzer::split_sentences(std::string_view text) const {
  return docsum::split_sentences(text, config_.abbreviations);
}

Pos RuleBasedAnalyzer::tag(std::string_view word) const {
  if (is_numeric_literal(word)) return Pos::Number;
  const std::string key(word);
  if (config_.number_words.contains(key)) return Pos::Number;
  if (auto it = config_.lexicon.find(key); it != config_.lexicon.end()) return it->second;
  if (config_.stopwords.contains(key)) return Pos::Other;
  if (!has_letter(word)) return Pos::Other;

  // English suffix heuristics; other scripts default to Noun.
  if (is_ascii_word(word) && word.size() >= 5) {
    if (ends_with(word, "ly")) return Pos::Adverb;
    if (ends_with(word, "ing") || ends_with(word, "ed") || ends_with(word, "ize") ||
        ends_with(word, "ise") || ends_with(word, "ify")) {
      return Pos::Verb;
    }
    if (ends_with(word, "ous") || ends_with(word, "ful") || ends_with(word, "ive") ||
        ends_with(word, "able") || ends_with(word, "ible") || ends_with(word, "ical") ||
        ends_with(word, "less") || ends_with(word, "ish")) {
      return Pos::Adjective;
    }
  }
  return Pos::Noun;
}

std::vector<Token> RuleBasedAnalyzer::analyze(std::string_view sentence_text) const {
  if (sentence_text.empty()) throw std::invalid_argument("analyze: empty sentence");
  std::vector<Token> tokens;
  for (std::string& surface : split_words(sentence_text)) {
    Token token;
    token.normalized = normalize(surface);
    if (token.normalized.empty()) continue;
    token.surface = std::move(surface);
    token.is_stopword = config_.stopwords.contains(token.normalized);
    token.pos = tag(token.normalized);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace docsum
