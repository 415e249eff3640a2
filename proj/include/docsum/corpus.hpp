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

#ifndef DOCSUM_CORPUS_HPP_
#define DOCSUM_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/analyzer.hpp"

namespace docsum {

struct Sentence {
  std::size_t index = 0;  // 0-based ordinal within its document or golden
  std::string raw;
  std::vector<Token> tokens;
  std::vector<Token> content_tokens;  // tokens with is_stopword == false

  // Sentences without content tokens keep their ordinal slot but never enter
  // a feature matrix.
  bool admissible() const { return !content_tokens.empty(); }
};

struct GoldenSummary {
  std::vector<Sentence> sentences;
};

struct Document {
  std::string id;
  std::string category;
  std::vector<Sentence> sentences;
  std::vector<GoldenSummary> goldens;

  std::size_t admissible_count() const;
};

struct Corpus {
  std::vector<Document> documents;

  // Sorted, de-duplicated category names: the corpus's closed category set.
  std::vector<std::string> categories() const;
  const Document* find(std::string_view id) const;
};

// On-disk shape of a corpus file, before analysis.
struct RawDocument {
  std::string id;
  std::string category;
  std::string text;
  std::vector<std::string> golden_summaries;
};

struct RawCorpusFile {
  std::vector<RawDocument> documents;
};

// Throws ParseError when the JSON is malformed or does not have the
// {"documents": [{id, category, text, golden_summaries}]} shape.
RawCorpusFile parse_corpus_json(std::string_view json_text);
RawCorpusFile read_corpus_file(const std::filesystem::path& path);
void write_corpus_file(const RawCorpusFile& corpus, const std::filesystem::path& path);

// Every contract violation found in the raw file, each prefixed with the
// offending document id. Empty when the file is valid.
std::vector<std::string> validate(const RawCorpusFile& corpus);

Sentence analyze_sentence(std::string_view text, std::size_t index, const Analyzer& analyzer);
std::vector<Sentence> analyze_text(std::string_view text, const Analyzer& analyzer);

// Runs the full pipeline over one raw document. Throws ValidationError
// (naming the id) when the document has no admissible sentence.
Document analyze_document(const RawDocument& raw, const Analyzer& analyzer);

// validate() + analyze_document() for every entry. Throws ValidationError on
// the first problem, ParseError on malformed input.
Corpus analyze_corpus(const RawCorpusFile& raw, const Analyzer& analyzer);
Corpus load_corpus(const std::filesystem::path& path, const Analyzer& analyzer);

}  // namespace docsum

#endif  // DOCSUM_CORPUS_HPP_
