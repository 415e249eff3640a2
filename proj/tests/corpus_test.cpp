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

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "docsum/error.hpp"
#include "test_support.hpp"

namespace docsum {
namespace {

using testing::english;

RawDocument raw(const std::string& id, const std::string& text,
                std::vector<std::string> goldens, const std::string& category = "news") {
  return RawDocument{id, category, text, std::move(goldens)};
}

TEST(Corpus, MissingGoldensNamesTheDocument) {
  try {
    load_corpus(testing::fixture_path("missing_goldens.json"), english());
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("doc-b"), std::string::npos) << e.what();
    EXPECT_EQ(std::string(e.what()).find("doc-a"), std::string::npos) << e.what();
  }
}

TEST(Corpus, SampleCorpusCountMatchesFile) {
  const RawCorpusFile file = read_corpus_file(testing::data_path("sample_corpus.json"));
  const Corpus corpus = load_corpus(testing::data_path("sample_corpus.json"), english());
  EXPECT_EQ(corpus.documents.size(), file.documents.size());
  EXPECT_EQ(corpus.documents.size(), 6u);
  EXPECT_EQ(corpus.categories(), (std::vector<std::string>{"economy", "science", "sport"}));
}

TEST(Corpus, FiveGoldensKept) {
  RawCorpusFile file;
  file.documents.push_back(raw("p1", "One two cats. Three dogs ran. Bank rates rose.",
                               {"One two cats.", "Three dogs ran.", "Bank rates rose.",
                                "One two cats. Bank rates rose.", "Three dogs ran. Bank rates rose."}));
  const Corpus corpus = analyze_corpus(file, english());
  ASSERT_EQ(corpus.documents.size(), 1u);
  EXPECT_EQ(corpus.documents[0].goldens.size(), 5u);
  EXPECT_EQ(corpus.documents[0].goldens[3].sentences.size(), 2u);
  EXPECT_EQ(corpus.documents[0].sentences.size(), 3u);
}

TEST(Corpus, ValidationIssues) {
  RawCorpusFile file;
  EXPECT_EQ(validate(file).size(), 1u);
  file.documents = {raw("a", "Text here.", {"Text here."}), raw("a", "  ", {"x"}),
                    raw("c", "Fine text.", {"   "}, "")};
  const auto issues = validate(file);
  ASSERT_EQ(issues.size(), 4u);
  EXPECT_EQ(issues[0], "a: duplicate document id");
  EXPECT_EQ(issues[1], "a: empty text");
  EXPECT_EQ(issues[2], "c: empty category");
  EXPECT_EQ(issues[3], "c: golden summary 0 is empty");
  EXPECT_THROW(analyze_corpus(file, english()), ValidationError);
}

TEST(Corpus, MalformedJsonIsParseError) {
  EXPECT_THROW(parse_corpus_json("{"), ParseError);
  EXPECT_THROW(parse_corpus_json("[]"), ParseError);
  EXPECT_THROW(parse_corpus_json(R"({"documents":[{"id":"x","category":"c","text":"t"}]})"),
               ParseError);
  EXPECT_THROW(parse_corpus_json(R"({"documents":[{"id":"x","category":1,"text":"t",
                                   "golden_summaries":[]}]})"),
               ParseError);
  EXPECT_THROW(read_corpus_file("/nonexistent/corpus.json"), ParseError);
}

TEST(Corpus, StopwordOnlyDocumentRejected) {
  RawCorpusFile file;
  file.documents.push_back(raw("empty-words", "The and of. It is.", {"The and of."}));
  EXPECT_THROW(analyze_corpus(file, english()), ValidationError);
}

TEST(Corpus, StopwordOnlySentenceKeepsItsSlot) {
  const Document doc =
      analyze_document(raw("d", "Markets fell. It was so. Rates rose.", {"Rates rose."}), english());
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_FALSE(doc.sentences[1].admissible());
  EXPECT_EQ(doc.sentences[2].index, 2u);
  EXPECT_EQ(doc.admissible_count(), 2u);
}

TEST(Corpus, WriteReadRoundTrip) {
  const RawCorpusFile file = read_corpus_file(testing::data_path("sample_corpus.json"));
  const auto path = std::filesystem::temp_directory_path() / "docsum_corpus_roundtrip.json";
  write_corpus_file(file, path);
  const RawCorpusFile back = read_corpus_file(path);
  ASSERT_EQ(back.documents.size(), file.documents.size());
  for (std::size_t i = 0; i < back.documents.size(); ++i) {
    EXPECT_EQ(back.documents[i].id, file.documents[i].id);
    EXPECT_EQ(back.documents[i].category, file.documents[i].category);
    EXPECT_EQ(back.documents[i].text, file.documents[i].text);
    EXPECT_EQ(back.documents[i].golden_summaries, file.documents[i].golden_summaries);
  }
  std::filesystem::remove(path);
}

TEST(Corpus, FindById) {
  const Corpus corpus = load_corpus(testing::data_path("sample_corpus.json"), english());
  ASSERT_NE(corpus.find("sport-002"), nullptr);
  EXPECT_EQ(corpus.find("sport-002")->category, "sport");
  EXPECT_EQ(corpus.find("nope"), nullptr);
}

}  // namespace
}  // namespace docsum
