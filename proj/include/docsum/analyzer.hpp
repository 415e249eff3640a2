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

#ifndef DOCSUM_ANALYZER_HPP_
#define DOCSUM_ANALYZER_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace docsum {

enum class Pos { Noun, Verb, Adjective, Adverb, Number, Other };

std::string_view to_string(Pos pos);
// Accepts the names produced by to_string (case-insensitive) and the short
// tags N, V, ADJ, ADV, NUM, O.
Pos parse_pos(std::string_view name);

struct Token {
  std::string surface;
  std::string normalized;
  Pos pos = Pos::Other;
  bool is_stopword = false;

  bool operator==(const Token&) const = default;
};

struct AnalyzerConfig {
  std::unordered_set<std::string> stopwords;
  // Each phrase is stored normalized; multi-word phrases are space-separated.
  std::vector<std::string> cue_phrases;
  // Normalized, including the trailing period ("dr.").
  std::unordered_set<std::string> abbreviations;
  // Spelled-out numbers tagged as Number.
  std::unordered_set<std::string> number_words;
  // Closed-class and common open-class words with a fixed tag. Words not
  // listed fall back to suffix heuristics.
  std::unordered_map<std::string, Pos> lexicon;

  // Bundled English resources for the sample corpora.
  static AnalyzerConfig english_defaults();
};

// One entry per line, '#' starts a comment, blank lines skipped, entries
// normalized. Throws ValidationError if the file cannot be read.
std::vector<std::string> load_phrase_list(const std::filesystem::path& path);

// "word<TAB>POS" per line, same comment rules as load_phrase_list.
std::unordered_map<std::string, Pos> load_lexicon(const std::filesystem::path& path);

// Text analysis backend. Implementations must be deterministic and free of
// shared mutable state so that documents can be analyzed concurrently.
class Analyzer {
 public:
  virtual ~Analyzer() = default;

  virtual std::vector<std::string> split_sentences(std::string_view text) const = 0;
  virtual std::vector<Token> analyze(std::string_view sentence_text) const = 0;
  virtual const AnalyzerConfig& config() const = 0;

  // Normalized token sequence of a phrase, e.g. for cue-phrase matching and
  // ROUGE tokenization.
  std::vector<std::string> terms(std::string_view text) const;
};

// Regex-free rule-based fallback: punctuation/abbreviation sentence splitter,
// lexicon + suffix POS heuristics, digit-pattern number detection.
class RuleBasedAnalyzer final : public Analyzer {
 public:
  explicit RuleBasedAnalyzer(AnalyzerConfig config);

  std::vector<std::string> split_sentences(std::string_view text) const override;
  std::vector<Token> analyze(std::string_view sentence_text) const override;
  const AnalyzerConfig& config() const override { return config_; }

  Pos tag(std::string_view normalized_word) const;

 private:
  AnalyzerConfig config_;
};

}  // namespace docsum

#endif  // DOCSUM_ANALYZER_HPP_
