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


#include "docsum/summarize.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "docsum/error.hpp"
#include "docsum/ranker.hpp"
#include "docsum/target.hpp"
#include "test_support.hpp"

namespace docsum {
namespace {

using testing::english;

const Corpus& sample() {
  static const Corpus corpus = load_corpus(testing::data_path("sample_corpus.json"), english());
  return corpus;
}

TrainedRanker train_on_sample(FeatureSet set, RegressorKind kind, std::uint64_t seed = 1) {
  std::vector<const Document*> docs;
  for (const Document& d : sample().documents) docs.push_back(&d);
  TrainOptions options;
  options.feature_set = set;
  options.regressor = kind;
  options.tree = TreeParams{3, 2};
  options.seed = seed;
  return train_ranker(docs, FeatureOptions::from(english(), sample().categories()), options);
}

Document three_sentences() {
  return testing::make_document("d", "economy",
                                {"Rates rose today.", "Markets fell sharply.", "Banks lent less."});
}

TEST(Rank, SingleSentenceDocument) {
  const TrainedRanker ranker = train_on_sample(FeatureSet::Aware, RegressorKind::Linear);
  const Document d = testing::make_document("one", "economy", {"Rates rose."});
  EXPECT_EQ(rank(d, ranker).size(), 1u);
}

TEST(Rank, RandomModelReproducible) {
  const TrainedRanker ranker = train_on_sample(FeatureSet::Aware, RegressorKind::Random, 5);
  const auto a = rank(sample().documents[0], ranker, 11);
  const auto b = rank(sample().documents[0], ranker, 11);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].score, b[i].score);
}

TEST(Rank, EqualsManualPipeline) {
  for (RegressorKind kind : {RegressorKind::Linear, RegressorKind::DecisionTree}) {
    const TrainedRanker ranker = train_on_sample(FeatureSet::AwareDoc, kind);
    const Document& doc = sample().documents[2];
    FeatureMatrix local = build_matrix(doc, FeatureSet::AwareDoc, ranker.features);
    local = apply_scaler(local, ranker.scaler);
    const std::vector<double> expected = predict(ranker.model, local);
    const auto ranked = rank(doc, ranker);
    ASSERT_EQ(ranked.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(ranked[i].score, expected[i]);
      EXPECT_EQ(ranked[i].index, i);
    }
  }
}

TEST(Rank, FeatureSetMismatchRejected) {
  const TrainedRanker ranker = train_on_sample(FeatureSet::Aware, RegressorKind::Linear);
  EXPECT_THROW(rank(sample().documents[0], ranker, FeatureSet::Unaware), ValidationError);
  EXPECT_NO_THROW(rank(sample().documents[0], ranker, FeatureSet::Aware));
}

TEST(Rank, UnknownCategoryRejected) {
  const TrainedRanker ranker = train_on_sample(FeatureSet::AwareDoc, RegressorKind::Linear);
  const Document d = testing::make_document("x", "weather", {"Rain fell.", "Storm came."});
  EXPECT_THROW(rank(d, ranker), ValidationError);
}

TEST(Select, CutoffAtLeastLength) {
  const Document d = three_sentences();
  std::vector<RankedSentence> ranked = {{0, 0.2}, {1, 0.9}, {2, 0.1}};
  const Summary s = select(d, ranked, 5);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(s.text, "Rates rose today. Markets fell sharply. Banks lent less.");
}

TEST(Select, TopScoresInDocumentOrder) {
  const Document d = three_sentences();
  std::vector<RankedSentence> ranked = {{0, 0.1}, {1, 0.9}, {2, 0.5}};
  const Summary s = select(d, ranked, 2);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(s.text, "Markets fell sharply. Banks lent less.");
  EXPECT_FALSE(ranked[0].selected);
  EXPECT_TRUE(ranked[1].selected);
  EXPECT_TRUE(ranked[2].selected);
}

TEST(Select, TiesGoToEarlierSentences) {
  const Document d = testing::make_document(
      "d", "economy", {"Rates rose.", "Markets fell.", "Banks lent.", "Prices climbed."});
  std::vector<RankedSentence> base = {{0, 0.5}, {1, 0.5}, {2, 0.5}, {3, 0.5}};
  std::sort(base.begin(), base.end(), [](auto& a, auto& b) { return a.index < b.index; });
  do {
    std::vector<RankedSentence> ranked = base;
    EXPECT_EQ(select(d, ranked, 2).indices, (std::vector<std::size_t>{0, 1}));
  } while (std::next_permutation(base.begin(), base.end(),
                                 [](auto& a, auto& b) { return a.index < b.index; }));
}

TEST(SummarizeLikeGolden, MatchesGoldenLength) {
  const Document& doc = sample().documents[0];
  const TrainedRanker ranker = train_on_sample(FeatureSet::Aware, RegressorKind::Linear);
  auto ranked = rank(doc, ranker);
  for (const GoldenSummary& g : doc.goldens) {
    EXPECT_EQ(summarize_like_golden(doc, ranked, g).indices.size(), g.sentences.size());
  }
  GoldenSummary longer;
  for (int i = 0; i < 20; ++i) longer.sentences.push_back(doc.sentences[0]);
  EXPECT_EQ(summarize_like_golden(doc, ranked, longer).indices.size(), doc.sentences.size());
  EXPECT_NE(summarize_like_golden(doc, ranked, doc.goldens[0]),
            summarize_like_golden(doc, ranked, doc.goldens[3]));
}

TEST(RandomSummary, WholeDocumentAndDeterminism) {
  const Document& doc = sample().documents[0];
  EXPECT_EQ(random_summary(doc, doc.sentences.size(), 3).indices.size(), doc.sentences.size());
  EXPECT_EQ(random_summary(doc, 3, 8), random_summary(doc, 3, 8));
}

TEST(RandomSummary, SelectionFrequencyIsUniform) {
  const Document& doc = sample().documents[0];
  const std::size_t n = doc.sentences.size();
  const std::size_t cutoff = 3;
  const int trials = 7000;
  std::vector<int> counts(n, 0);
  for (int seed = 0; seed < trials; ++seed) {
    for (std::size_t idx : random_summary(doc, cutoff, static_cast<std::uint64_t>(seed)).indices) {
      ++counts[idx];
    }
  }
  const double p = static_cast<double>(cutoff) / static_cast<double>(n);
  const double sigma = std::sqrt(trials * p * (1.0 - p));
  for (int c : counts) EXPECT_NEAR(c, trials * p, 3.0 * sigma);
}

TEST(Cutoff, Resolution) {
  EXPECT_EQ(Cutoff::sentences(3).resolve(10), 3u);
  EXPECT_EQ(Cutoff::percent(25).resolve(10), 3u);
  EXPECT_EQ(Cutoff::percent(1).resolve(10), 1u);
  EXPECT_EQ(Cutoff::percent(100).resolve(7), 7u);
  EXPECT_THROW(Cutoff::sentences(0), std::invalid_argument);
  EXPECT_THROW(Cutoff::percent(0), std::invalid_argument);
  EXPECT_THROW(Cutoff::percent(120), std::invalid_argument);
}

TEST(Ranker, SerializationRoundTrip) {
  for (RegressorKind kind : {RegressorKind::Linear, RegressorKind::DecisionTree, RegressorKind::Random}) {
    const TrainedRanker ranker = train_on_sample(FeatureSet::AwareDoc, kind, 4);
    const std::string text = serialize_ranker(ranker);
    const TrainedRanker back = parse_ranker(text);
    EXPECT_EQ(serialize_ranker(back), text);
    for (const Document& d : sample().documents) {
      const auto a = rank(d, ranker, 2);
      const auto b = rank(d, back, 2);
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].score, b[i].score);
    }
  }
}

TEST(Ranker, SaveAndLoad) {
  const TrainedRanker ranker = train_on_sample(FeatureSet::Unaware, RegressorKind::Linear);
  const auto path = std::filesystem::temp_directory_path() / "docsum_ranker_test.json";
  save_ranker(ranker, path);
  EXPECT_EQ(serialize_ranker(load_ranker(path)), serialize_ranker(ranker));
  std::filesystem::remove(path);
  EXPECT_THROW(load_ranker(path), ValidationError);
}

TEST(Ranker, MalformedModelRejected) {
  EXPECT_THROW(parse_ranker("not json"), ParseError);
  EXPECT_THROW(parse_ranker(R"({"format":"other"})"), ValidationError);
  const TrainedRanker ranker = train_on_sample(FeatureSet::Aware, RegressorKind::Linear);
  std::string text = serialize_ranker(ranker);
  text.replace(text.find("\"version\": 1"), 12, "\"version\": 9");
  EXPECT_THROW(parse_ranker(text), ValidationError);
}

TEST(Ranker, ScalerFittedOnTrainingRows) {
  std::vector<const Document*> docs;
  for (const Document& d : sample().documents) docs.push_back(&d);
  TrainOptions options;
  options.feature_set = FeatureSet::Unaware;
  BalanceResult balanced;
  const TrainedRanker ranker =
      train_ranker(docs, FeatureOptions::from(english(), sample().categories()), options, &balanced);
  EXPECT_EQ(ranker.scaler, fit_scaler(balanced.matrix));
}

}  // namespace
}  // namespace docsum
