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


// Shared helpers for the unit and acceptance tests.

#ifndef DOCSUM_TESTS_TEST_SUPPORT_HPP_
#define DOCSUM_TESTS_TEST_SUPPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "docsum/analyzer.hpp"
#include "docsum/corpus.hpp"
#include "docsum/random.hpp"

namespace docsum::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(DOCSUM_DATA_DIR) / name;
}

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(DOCSUM_FIXTURE_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const RuleBasedAnalyzer& english() {
  static const RuleBasedAnalyzer analyzer(AnalyzerConfig::english_defaults());
  return analyzer;
}

// Document built through the English analyzer, one string per sentence.
inline Document make_document(const std::string& id, const std::string& category,
                              const std::vector<std::string>& sentences,
                              const std::vector<std::vector<std::string>>& goldens = {}) {
  Document doc;
  doc.id = id;
  doc.category = category;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    doc.sentences.push_back(analyze_sentence(sentences[i], i, english()));
  }
  for (const auto& g : goldens) {
    GoldenSummary golden;
    for (std::size_t i = 0; i < g.size(); ++i) {
      golden.sentences.push_back(analyze_sentence(g[i], i, english()));
    }
    doc.goldens.push_back(std::move(golden));
  }
  return doc;
}

// Random token-level sentence, bypassing the analyzer: words are "w<k>" drawn
// from a small vocabulary so sentences share terms.
inline Sentence random_sentence(Rng& rng, std::size_t index, std::size_t max_len,
                                std::size_t vocab, double stop_rate = 0.3) {
  Sentence s;
  s.index = index;
  const std::size_t len = 1 + rng.below(max_len);
  for (std::size_t i = 0; i < len; ++i) {
    Token t;
    t.normalized = "w" + std::to_string(rng.below(vocab));
    t.surface = t.normalized;
    t.is_stopword = rng.uniform01() < stop_rate;
    t.pos = t.is_stopword ? Pos::Other : static_cast<Pos>(rng.below(6));
    s.tokens.push_back(t);
    if (!t.is_stopword) s.content_tokens.push_back(t);
    s.raw += (i ? " " : "") + t.surface;
  }
  return s;
}

inline Document random_document(Rng& rng, const std::string& id, std::size_t max_sentences,
                                std::size_t max_len, std::size_t vocab) {
  Document doc;
  doc.id = id;
  doc.category = "c" + std::to_string(rng.below(3));
  const std::size_t n = 1 + rng.below(max_sentences);
  for (std::size_t i = 0; i < n; ++i) doc.sentences.push_back(random_sentence(rng, i, max_len, vocab));
  return doc;
}

}  // namespace docsum::testing

#endif  // DOCSUM_TESTS_TEST_SUPPORT_HPP_
