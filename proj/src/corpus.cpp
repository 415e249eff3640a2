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

#include "docsum/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "docsum/error.hpp"
#include "json.hpp"

namespace docsum {

using nlohmann::json;

std::size_t Document::admissible_count() const {
  return static_cast<std::size_t>(
      std::count_if(sentences.begin(), sentences.end(),
                    [](const Sentence& s) { return s.admissible(); }));
}

std::vector<std::string> Corpus::categories() const {
  std::set<std::string> unique;
  for (const Document& d : documents) unique.insert(d.category);
  return {unique.begin(), unique.end()};
}

const Document* Corpus::find(std::string_view id) const {
  for (const Document& d : documents) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

RawCorpusFile parse_corpus_json(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("documents") || !root["documents"].is_array()) {
    throw ParseError("corpus must be an object with a \"documents\" array");
  }
  RawCorpusFile out;
  std::size_t position = 0;
  for (const json& entry : root["documents"]) {
    const std::string where = "documents[" + std::to_string(position++) + "]";
    if (!entry.is_object()) throw ParseError(where + " is not an object");
    auto string_field = [&](const char* key) {
      if (!entry.contains(key) || !entry[key].is_string()) {
        std::string id = entry.contains("id") && entry["id"].is_string()
                             ? entry["id"].get<std::string>()
                             : where;
        throw ParseError(id + ": missing or non-string field \"" + key + "\"");
      }
      return entry[key].get<std::string>();
    };
    RawDocument doc;
    doc.id = string_field("id");
    doc.category = string_field("category");
    doc.text = string_field("text");
    if (!entry.contains("golden_summaries") || !entry["golden_summaries"].is_array()) {
      throw ParseError(doc.id + ": missing \"golden_summaries\" array");
    }
    for (const json& g : entry["golden_summaries"]) {
      if (!g.is_string()) throw ParseError(doc.id + ": golden summary is not a string");
      doc.golden_summaries.push_back(g.get<std::string>());
    }
    out.documents.push_back(std::move(doc));
  }
  return out;
}

RawCorpusFile read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open corpus file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus_json(buffer.str());
}

void write_corpus_file(const RawCorpusFile& corpus, const std::filesystem::path& path) {
  json docs = json::array();
  for (const RawDocument& d : corpus.documents) {
    docs.push_back({{"id", d.id},
                    {"category", d.category},
                    {"text", d.text},
                    {"golden_summaries", d.golden_summaries}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path.string());
  out << json{{"documents", docs}}.dump(1) << '\n';
}

namespace {

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::vector<std::string> validate(const RawCorpusFile& corpus) {
  std::vector<std::string> issues;
  if (corpus.documents.empty()) issues.emplace_back("corpus has no documents");
  std::set<std::string> seen;
  for (const RawDocument& d : corpus.documents) {
    if (d.id.empty()) issues.emplace_back("(empty id): document id must be non-empty");
    if (!seen.insert(d.id).second) issues.push_back(d.id + ": duplicate document id");
    if (blank(d.text)) issues.push_back(d.id + ": empty text");
    if (d.category.empty()) issues.push_back(d.id + ": empty category");
    if (d.golden_summaries.empty()) issues.push_back(d.id + ": no golden summaries");
    for (std::size_t g = 0; g < d.golden_summaries.size(); ++g) {
      if (blank(d.golden_summaries[g])) {
        issues.push_back(d.id + ": golden summary " + std::to_string(g) + " is empty");
      }
    }
  }
  return issues;
}

Sentence analyze_sentence(std::string_view text, std::size_t index, const Analyzer& analyzer) {
  Sentence s;
  s.index = index;
  s.raw = std::string(text);
  s.tokens = analyzer.analyze(text);
  for (const Token& t : s.tokens) {
    if (!t.is_stopword) s.content_tokens.push_back(t);
  }
  return s;
}

std::vector<Sentence> analyze_text(std::string_view text, const Analyzer& analyzer) {
  std::vector<Sentence> out;
  for (const std::string& piece : analyzer.split_sentences(text)) {
    out.push_back(analyze_sentence(piece, out.size(), analyzer));
  }
  return out;
}

Document analyze_document(const RawDocument& raw, const Analyzer& analyzer) {
  if (blank(raw.text)) throw ValidationError(raw.id + ": empty text");
  Document doc;
  doc.id = raw.id;
  doc.category = raw.category;
  doc.sentences = analyze_text(raw.text, analyzer);
  if (doc.admissible_count() == 0) {
    throw ValidationError(raw.id + ": no sentence with content words");
  }
  for (const std::string& g : raw.golden_summaries) {
    GoldenSummary golden;
    if (!blank(g)) golden.sentences = analyze_text(g, analyzer);
    doc.goldens.push_back(std::move(golden));
  }
  return doc;
}

Corpus analyze_corpus(const RawCorpusFile& raw, const Analyzer& analyzer) {
  if (auto issues = validate(raw); !issues.empty()) throw ValidationError(issues.front());
  Corpus corpus;
  corpus.documents.reserve(raw.documents.size());
  for (const RawDocument& d : raw.documents) {
    corpus.documents.push_back(analyze_document(d, analyzer));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, const Analyzer& analyzer) {
  return analyze_corpus(read_corpus_file(path), analyzer);
}

}  // namespace docsum
